import json

import numpy as np
import pytest
from pydantic import ValidationError

from threetangle.models import DensityMatrixFile
from threetangle.utils.exceptions import (
    InvalidStateError,
    UnsupportedFileTypeError,
)
from threetangle.utils.loaders import (
    DensityMatrixLoader,
    JSONLoader,
    PureStateLoader,
)


@pytest.fixture
def write_json(tmp_path):
    def write(name, document):
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return path

    return write


def test_supported_extensions():
    assert JSONLoader.file_extensions == (".json",)
    assert PureStateLoader.is_loader_support_extension(".JSON")


def test_load_json(mocker, write_json):
    path = write_json("plain.json", {"key": "value", "number": 42})
    mock_validate = mocker.patch.object(JSONLoader, "validate_file_exists")
    assert JSONLoader().load(path) == {"key": "value", "number": 42}
    mock_validate.assert_called_once_with(path)


def test_load_invalid_json(tmp_path):
    path = tmp_path / "invalid.json"
    path.write_text("{invalid: json}")
    with pytest.raises(json.JSONDecodeError):
        JSONLoader().load(path)


@pytest.mark.parametrize("loader", [PureStateLoader, DensityMatrixLoader])
def test_rejects_other_suffix(loader, write_json):
    path = write_json("state.txt", {"amplitudes": [[1, 0], [0, 0]]})
    with pytest.raises(UnsupportedFileTypeError, match="state.txt"):
        loader().load(path)


def test_suffix_case_insensitive(write_json):
    path = write_json("PSI.JSON", {"amplitudes": [[1, 0], [0, 0]]})
    np.testing.assert_allclose(PureStateLoader().load(path).amplitudes, [1, 0])


class TestPureStateLoader:
    def test_complex_amplitudes(self, write_json):
        half = 0.5
        pairs = [[half, 0], [0, half], [0, -half], [-half, 0]]
        path = write_json("psi.json", {"amplitudes": pairs})
        psi = PureStateLoader().load(path)
        np.testing.assert_allclose(
            psi.amplitudes, [0.5, 0.5j, -0.5j, -0.5]
        )

    def test_unnormalized(self, write_json):
        path = write_json("psi.json", {"amplitudes": [[1, 0], [1, 0]]})
        with pytest.raises(InvalidStateError):
            PureStateLoader().load(path)

    def test_layout(self, write_json):
        path = write_json("psi.json", {"amplitudes": [[1, 0, 0]]})
        with pytest.raises(ValidationError):
            PureStateLoader().load(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            PureStateLoader().load(tmp_path / "missing.json")


class TestDensityMatrixLoader:
    def test_row_major(self, tmp_path):
        matrix = np.array([[0.75, 0.25j], [-0.25j, 0.25]])
        path = tmp_path / "rho.json"
        path.write_text(DensityMatrixFile.from_matrix(matrix).model_dump_json())
        rho = DensityMatrixLoader().load(path)
        np.testing.assert_allclose(rho.entries, matrix)

    def test_entry_count(self, write_json):
        document = {"dim": 2, "entries": [[1, 0], [0, 0], [0, 0]]}
        with pytest.raises(ValidationError, match="needs 4 entries"):
            DensityMatrixLoader().load(write_json("rho.json", document))

    def test_not_positive(self, write_json):
        document = {"dim": 2, "entries": [[2, 0], [0, 0], [0, 0], [-1, 0]]}
        with pytest.raises(InvalidStateError):
            DensityMatrixLoader().load(write_json("rho.json", document))
