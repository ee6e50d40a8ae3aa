import os

import numpy as np
import pytest

from threetangle.config import get_settings
from threetangle.families import RANK4, RANK5, RANK6, RANK7, RANK8
from threetangle.qstate import PureState, random_pure_state


def pytest_configure(config):
    os.environ.setdefault("THREETANGLE_FILE_LOGGING", "false")
    get_settings.cache_clear()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def random_states(rng):
    return [random_pure_state(rng) for _ in range(100)]


@pytest.fixture(params=[RANK5, RANK6, RANK7, RANK8], ids=lambda f: f.name)
def family(request):
    return request.param


@pytest.fixture
def all_families():
    return [RANK4, RANK5, RANK6, RANK7, RANK8]


@pytest.fixture
def ghz_amplitudes():
    amplitudes = np.zeros(8, dtype=complex)
    amplitudes[[0, 7]] = 1 / np.sqrt(2)
    return amplitudes


@pytest.fixture
def w_amplitudes():
    amplitudes = np.zeros(8, dtype=complex)
    amplitudes[[1, 2, 4]] = 1 / np.sqrt(3)
    return amplitudes


@pytest.fixture
def ghz(ghz_amplitudes):
    return PureState(amplitudes=ghz_amplitudes)


@pytest.fixture
def w_state(w_amplitudes):
    return PureState(amplitudes=w_amplitudes)
