from threetangle.convexroof.search import (
    RoofConfig,
    RoofEstimate,
    estimate_roof,
)
from threetangle.families.curve import family_state, tau3_family
from threetangle.models.family import FamilySpec
from threetangle.utils.logger_m import logger

__all__ = ["UNDERCUT_TOL", "estimate_family_roof"]

UNDERCUT_TOL = 1e-9


def estimate_family_roof(
    family: FamilySpec, x: float, cfg: RoofConfig
) -> tuple[RoofEstimate, float]:
    """
    Runs the roof search on a family state next to its piecewise tangle.

    The search value is an upper bound on the roof, so a value below the
    piecewise curve means that curve is not the roof at ``x``; this is
    logged as a warning and the estimate is returned unchanged.

    Returns:
        The estimate and ``tau3_family(family, x)``.
    """
    analytic = tau3_family(family, x)
    estimate = estimate_roof(family_state(family, x), cfg)
    if estimate.value < analytic - UNDERCUT_TOL:
        logger.warning(
            f"{family.name} at x={x:.6g}: found a decomposition with "
            f"average tangle {estimate.value:.6g} below the piecewise "
            f"value {analytic:.6g}"
        )
    return estimate, analytic
