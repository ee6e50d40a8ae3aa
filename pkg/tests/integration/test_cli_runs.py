import json

from threetangle.cli import main
from threetangle.families import RANK6, family_state
from threetangle.models import DensityMatrixFile


def _without_timestamp(path):
    document = json.loads(path.read_text())
    del document["manifest"]["timestamp"]
    return document


def test_optimize_is_reproducible(tmp_path):
    source = tmp_path / "rank6.json"
    document = DensityMatrixFile.from_matrix(family_state(RANK6, 0.6).entries)
    source.write_text(document.model_dump_json())
    for name in ("a", "b"):
        args = ["optimize", str(source), "--seed", "42", "--restarts", "4"]
        assert main([*args, "--out", str(tmp_path / f"{name}.json")]) == 0
    first = _without_timestamp(tmp_path / "a.json")
    second = _without_timestamp(tmp_path / "b.json")
    assert first["manifest"]["parameters"].pop("out").endswith("a.json")
    assert second["manifest"]["parameters"].pop("out").endswith("b.json")
    assert first == second


def test_sweep_output_is_stable(tmp_path):
    outputs = []
    for name in ("a.csv", "b.csv"):
        out = tmp_path / name
        args = ["sweep", "--family", "rank7", "--grid", "101"]
        assert main([*args, "--out", str(out)]) == 0
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
    assert b"\r" not in outputs[0]
