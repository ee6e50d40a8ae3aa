import io
import json

import pytest

from threetangle.models import OptimizeResult, RunManifest, TraceSummary
from threetangle.storage import LocalStorageManager
from threetangle.storage.local_storage_manager import format_cell


@pytest.fixture
def manifest():
    return RunManifest(command="sweep", parameters={"grid": 3}, seed=None)


@pytest.mark.parametrize(
    "value, expected",
    [
        (None, ""),
        (True, "true"),
        (False, "false"),
        (3, "3"),
        (0.1, "0.1"),
        (1 / 3, "0.333333333333"),
        (1e-20, "1e-20"),
        ("gI", "gI"),
    ],
)
def test_format_cell(value, expected):
    assert format_cell(value) == expected


class TestLocalStorageManager:
    def test_resolve(self, tmp_path):
        storage = LocalStorageManager(root_folder=tmp_path)
        assert storage.resolve("a.csv") == tmp_path / "a.csv"
        assert storage.resolve(str(tmp_path / "b.csv")) == tmp_path / "b.csv"
        assert storage.manifest_path("a.csv") == (
            tmp_path / "a.csv.manifest.json"
        )

    def test_companion_path(self, tmp_path):
        storage = LocalStorageManager(root_folder=tmp_path)
        assert storage.companion_path("out/c.csv", "envelope.csv") == (
            tmp_path / "out" / "envelope.csv"
        )
        assert storage.companion_path("-", "envelope.csv") == (
            tmp_path / "envelope.csv"
        )

    def test_save_table(self, tmp_path, manifest):
        storage = LocalStorageManager(root_folder=tmp_path)
        storage.save_table(
            "nested/table.csv",
            ("x", "ok"),
            iter([[0.5, True], [1.0, False]]),
            manifest,
        )
        table = tmp_path / "nested" / "table.csv"
        assert table.read_text() == "x,ok\n0.5,true\n1,false\n"
        saved = json.loads(
            (tmp_path / "nested" / "table.csv.manifest.json").read_text()
        )
        assert saved["command"] == "sweep"
        assert saved["parameters"] == {"grid": 3}
        assert saved["timestamp"].endswith("+00:00")

    def test_save_table_to_stdout(self, tmp_path, manifest, mocker):
        stream = io.StringIO()
        storage = LocalStorageManager(root_folder=tmp_path, stdout=stream)
        info = mocker.patch(
            "threetangle.storage.local_storage_manager.logger.info"
        )
        storage.save_table("-", ("x",), [[0.25]], manifest)
        assert stream.getvalue() == "x\n0.25\n"
        assert list(tmp_path.iterdir()) == []
        assert "Run manifest" in info.call_args.args[0]

    def test_save_document(self, tmp_path, manifest):
        storage = LocalStorageManager(root_folder=tmp_path)
        result = OptimizeResult(
            value=0.5,
            objective="three_tangle",
            ensemble_size=2,
            reconstruction_residual=0.0,
            witness=[],
            trace=TraceSummary(
                restarts=1,
                best_restart=0,
                initial=0.7,
                final=0.5,
                accepted=3,
                iterations=10,
                step_halvings=0,
                restart_finals=[0.5],
            ),
            manifest=manifest,
        )
        storage.save_document("result.json", result)
        saved = json.loads((tmp_path / "result.json").read_text())
        assert saved["value"] == 0.5
        assert saved["trace"]["restart_finals"] == [0.5]
