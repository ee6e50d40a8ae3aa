import pytest

from threetangle.convexroof import RoofConfig, estimate_family_roof, family_roof
from threetangle.families import RANK5, tau3_family
from threetangle.utils.exceptions import DomainError

TINY = RoofConfig(restarts=1, max_iters=20, seed=3, workers=1)


@pytest.fixture
def fake_search(mocker):
    def install(value):
        estimate = mocker.MagicMock(value=value)
        return mocker.patch.object(
            family_roof, "estimate_roof", return_value=estimate
        )

    return install


def test_returns_estimate_and_tangle(fake_search):
    analytic = tau3_family(RANK5, 0.9)
    search = fake_search(analytic + 1e-3)
    estimate, reported = estimate_family_roof(RANK5, 0.9, TINY)
    assert reported == analytic
    assert estimate.value == analytic + 1e-3
    rho, cfg = search.call_args.args
    assert rho.dim == 8
    assert cfg is TINY


def test_undercut_logs_warning(mocker, fake_search):
    fake_search(tau3_family(RANK5, 0.9) - 1e-3)
    warning = mocker.patch.object(family_roof.logger, "warning")
    estimate_family_roof(RANK5, 0.9, TINY)
    warning.assert_called_once()
    assert "rank5 at x=0.9" in warning.call_args.args[0]


def test_within_tolerance_is_quiet(mocker, fake_search):
    fake_search(tau3_family(RANK5, 0.9) - family_roof.UNDERCUT_TOL / 2)
    warning = mocker.patch.object(family_roof.logger, "warning")
    estimate_family_roof(RANK5, 0.9, TINY)
    warning.assert_not_called()


def test_mixing_value_out_of_range():
    with pytest.raises(DomainError):
        estimate_family_roof(RANK5, 1.5, TINY)
