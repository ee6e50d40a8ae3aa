import numpy as np
import pytest

from threetangle.convexroof import (
    RoofObjective,
    estimate_family_roof,
    estimate_roof,
    family_roof,
    search_roof,
)
from threetangle.families import RANK5, family_state
from threetangle.qstate import DensityMatrix, density_from_ensemble
from threetangle.tangle import three_tangle_pure


@pytest.mark.parametrize("p", [0.8, 0.85, 0.9, 0.95])
def test_estimate_tracks_rank5_tangle(p, default_roof):
    estimate, analytic = estimate_family_roof(RANK5, p, default_roof)
    assert abs(estimate.value - analytic) <= 5e-3
    average = sum(
        member.weight * three_tangle_pure(member.state)
        for member in estimate.witness.members
    )
    assert average == pytest.approx(estimate.value, abs=1e-9)
    reconstructed = density_from_ensemble(estimate.witness).entries
    np.testing.assert_allclose(
        reconstructed, family_state(RANK5, p).entries, atol=1e-10
    )


def test_rank5_undercut_is_reported(mocker, default_roof):
    warning = mocker.patch.object(family_roof.logger, "warning")
    estimate, analytic = estimate_family_roof(RANK5, 0.9, default_roof)
    assert estimate.value < analytic
    warning.assert_called_once()
    assert "below the piecewise value" in warning.call_args.args[0]


def test_background_mixture_has_no_tangle(default_roof):
    rho = family_state(RANK5, 0.0)
    cfg = default_roof.model_copy(update={"ensemble_size": 16})
    assert estimate_roof(rho, cfg).value < 1e-4


def test_separable_mixture_has_no_one_tangle(small_roof):
    entries = np.zeros((8, 8))
    entries[0, 0] = entries[7, 7] = 0.5
    estimate = search_roof(
        DensityMatrix(entries=entries), small_roof, RoofObjective.ONE_TANGLE
    )
    assert estimate.value < 1e-4


def test_workers_do_not_change_result(small_roof):
    rho = family_state(RANK5, 0.9)
    serial = estimate_roof(rho, small_roof)
    parallel = estimate_roof(
        rho, small_roof.model_copy(update={"workers": 2})
    )
    assert parallel.value == serial.value
    assert parallel.best_restart == serial.best_restart
    assert [t.final for t in parallel.traces] == [
        t.final for t in serial.traces
    ]
