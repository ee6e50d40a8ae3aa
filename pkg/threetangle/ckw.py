"""Monogamy bookkeeping: one-tangle against concurrences and three-tangle."""

from math import sqrt
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from threetangle.convexroof.curves import GridSpec, make_grid
from threetangle.convexroof.search import (
    RoofConfig,
    RoofObjective,
    search_roof,
)
from threetangle.families.curve import family_state, tau3_family
from threetangle.models.family import FamilySpec
from threetangle.qstate.states import (
    DensityMatrix,
    PureState,
    Subsystem,
    partial_trace,
)
from threetangle.tangle.concurrence import squared_concurrence
from threetangle.tangle.invariants import one_tangle_pure, three_tangle_pure
from threetangle.utils.exceptions import DomainError
from threetangle.utils.logger_m import logger

__all__ = [
    "CROSS_CHECK_TOL",
    "CkwRow",
    "ckw_report",
    "min_one_tangle_estimate",
    "mixed_one_tangle",
    "monogamy_residual",
    "one_tangle_rank5_closed",
]

FLAG_TOL = 1e-9
CROSS_CHECK_TOL = 5e-3


class CkwRow(BaseModel):
    """
    One grid point of a monogamy report.

    ``one_tangle_closed`` is the closed form for the rank-5 family and the
    optimizer estimate otherwise (``estimated`` is then set).
    ``one_tangle_direct`` is ``4 det(rho_A)`` of the mixed state itself.
    """

    model_config = ConfigDict(frozen=True)

    x: float
    one_tangle_closed: float
    one_tangle_direct: float
    c2_ab: float
    c2_ac: float
    tau3: float
    inequality_ok: bool
    strong_ok: bool
    estimated: bool = False
    one_tangle_estimate: Optional[float] = None

    @property
    def c2_sum(self) -> float:
        return self.c2_ab + self.c2_ac


def one_tangle_rank5_closed(p: float) -> float:
    """
    Decomposition-minimized one-tangle of the rank-5 family,
    ``1 - 8p(1-p)/5 - 9(1-p)^2/25 + 6 sqrt(30) sqrt(p(1-p)^3)/25``.
    """
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"Mixing value {p} is outside [0, 1]")
    q = 1.0 - p
    return (
        1.0
        - 8.0 * p * q / 5.0
        - 9.0 * q**2 / 25.0
        + 6.0 * sqrt(30.0) * sqrt(p * q**3) / 25.0
    )


def mixed_one_tangle(rho: DensityMatrix) -> float:
    """``4 det(rho_A)`` of a three-qubit mixed state, no minimization."""
    marginal = partial_trace(rho, [Subsystem.A]).entries
    det = marginal[0, 0] * marginal[1, 1] - marginal[0, 1] * marginal[1, 0]
    return max(0.0, 4.0 * float(det.real))


def min_one_tangle_estimate(
    rho: DensityMatrix, cfg: Optional[RoofConfig] = None
) -> float:
    """
    Smallest decomposition average of ``4 det(rho_A)`` found by the roof
    search; an upper bound on the true minimum.
    """
    estimate = search_roof(rho, cfg or RoofConfig(), RoofObjective.ONE_TANGLE)
    direct = mixed_one_tangle(rho)
    if estimate.value > direct + FLAG_TOL:
        logger.warning(
            f"One-tangle estimate {estimate.value:.6g} exceeds the mixed-state "
            f"determinant bound {direct:.6g}"
        )
    return estimate.value


def monogamy_residual(psi: PureState) -> float:
    """``4 det(rho_A) - C_AB^2 - C_AC^2 - tau_3``; zero for pure states."""
    rho = DensityMatrix(entries=psi.projector())
    return (
        one_tangle_pure(psi)
        - squared_concurrence(partial_trace(rho, "AB"))
        - squared_concurrence(partial_trace(rho, "AC"))
        - three_tangle_pure(psi)
    )


def _row(
    family: FamilySpec,
    x: float,
    cfg: Optional[RoofConfig],
    cross_check: bool,
) -> CkwRow:
    rho = family_state(family, x)
    c2_ab = squared_concurrence(partial_trace(rho, "AB"))
    c2_ac = squared_concurrence(partial_trace(rho, "AC"))
    tau3 = tau3_family(family, x)
    estimate: Optional[float] = None
    if family.rank == 5:
        one_tangle = one_tangle_rank5_closed(x)
        if cross_check:
            estimate = min_one_tangle_estimate(rho, cfg)
            if abs(estimate - one_tangle) > CROSS_CHECK_TOL:
                logger.warning(
                    f"{family.name} at x={x:.6g}: estimated one-tangle "
                    f"{estimate:.6g} differs from the closed form "
                    f"{one_tangle:.6g}"
                )
    else:
        estimate = one_tangle = min_one_tangle_estimate(rho, cfg)
    c2_sum = c2_ab + c2_ac
    return CkwRow(
        x=x,
        one_tangle_closed=one_tangle,
        one_tangle_direct=mixed_one_tangle(rho),
        c2_ab=c2_ab,
        c2_ac=c2_ac,
        tau3=tau3,
        inequality_ok=one_tangle + FLAG_TOL >= c2_sum,
        strong_ok=one_tangle + FLAG_TOL >= c2_sum + tau3,
        estimated=family.rank != 5,
        one_tangle_estimate=estimate,
    )


def ckw_report(
    family: FamilySpec,
    x_grid: GridSpec,
    cfg: Optional[RoofConfig] = None,
    cross_check: bool = False,
) -> list[CkwRow]:
    """
    Monogamy rows of ``family`` over ``x_grid``, in ascending ``x``.

    Args:
        family: Built-in family.
        x_grid: Number of points from 0 to 1, or explicit ascending values.
        cfg: Roof search settings for the one-tangle estimator, used for
            families other than rank 5 and for the cross-check.
        cross_check: For the rank-5 family, also run the estimator and warn
            when it strays from the closed form.
    """
    grid = make_grid(x_grid)
    logger.debug(f"CKW report for {family.name} on {len(grid)} points")
    return [_row(family, float(x), cfg, cross_check) for x in np.sort(grid)]
