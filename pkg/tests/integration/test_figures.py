import numpy as np
import pytest

from threetangle.ckw import ckw_report
from threetangle.convexroof import characteristic_envelope
from threetangle.families import RANK5, tau3_family


def test_rank5_envelope_matches_tangle():
    envelope = characteristic_envelope(RANK5, phase_step=0.3, x_grid=200)
    grid = np.linspace(0, 1, 200)
    analytic = np.array([tau3_family(RANK5, float(x)) for x in grid])
    assert envelope.is_convex()
    differences = np.abs(envelope(grid) - analytic)
    assert np.max(differences[1:]) <= 2e-3
    # no lattice point reaches the zero-tangle phases at x = 0
    assert differences[0] == pytest.approx(3.01e-3, abs=5e-5)


def test_rank5_ckw_report():
    rows = ckw_report(RANK5, 200)
    assert len(rows) == 200
    assert rows[0].one_tangle_closed == pytest.approx(0.64)
    assert rows[-1].one_tangle_closed == pytest.approx(1.0)
    assert max(row.c2_sum for row in rows) <= 1e-10
    assert all(row.inequality_ok and row.strong_ok for row in rows)
