import json

import numpy as np
import pytest

from threetangle.families import RANK5, family_state
from threetangle.models import DensityMatrixFile, complex_to_pairs


def _write_pure(path, amplitudes):
    path.write_text(json.dumps({"amplitudes": complex_to_pairs(amplitudes)}))
    return path


@pytest.fixture
def ghz_file(tmp_path, ghz_amplitudes):
    return _write_pure(tmp_path / "ghz.json", ghz_amplitudes)


@pytest.fixture
def w_file(tmp_path, w_amplitudes):
    return _write_pure(tmp_path / "w.json", w_amplitudes)


@pytest.fixture
def unnormalized_file(tmp_path):
    return _write_pure(tmp_path / "bad.json", np.ones(8))


@pytest.fixture
def rank5_file(tmp_path):
    path = tmp_path / "rank5.json"
    document = DensityMatrixFile.from_matrix(family_state(RANK5, 0.8).entries)
    path.write_text(document.model_dump_json())
    return path
