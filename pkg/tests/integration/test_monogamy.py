import numpy as np

from threetangle import ckw
from threetangle.ckw import (
    CROSS_CHECK_TOL,
    ckw_report,
    min_one_tangle_estimate,
    monogamy_residual,
    one_tangle_rank5_closed,
)
from threetangle.families import RANK5, family_state
from threetangle.qstate import random_pure_state


def test_pure_state_monogamy_identity():
    rng = np.random.default_rng(7)
    residuals = [
        monogamy_residual(random_pure_state(rng)) for _ in range(1000)
    ]
    assert max(abs(r) for r in residuals) <= 1e-9


def test_rank5_estimate_stays_below_closed_form(default_roof):
    estimate = min_one_tangle_estimate(family_state(RANK5, 0.9), default_roof)
    assert 0.0 <= estimate <= one_tangle_rank5_closed(0.9)


def test_rank5_cross_check_reports_gap(mocker, default_roof):
    warning = mocker.patch.object(ckw.logger, "warning")
    (row,) = ckw_report(RANK5, [0.9], cfg=default_roof, cross_check=True)
    assert row.one_tangle_estimate is not None
    assert row.one_tangle_estimate < row.one_tangle_closed - CROSS_CHECK_TOL
    warning.assert_called_once()
    assert "closed form" in warning.call_args.args[0]
