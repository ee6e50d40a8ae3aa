import pytest

from threetangle.convexroof import RoofConfig


@pytest.fixture(scope="session")
def default_roof():
    """Default search settings with a fixed seed and a single process."""
    return RoofConfig(seed=20240611, workers=1)


@pytest.fixture(scope="session")
def small_roof():
    return RoofConfig(restarts=4, max_iters=2000, seed=11, workers=1)
