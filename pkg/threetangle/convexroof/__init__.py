from threetangle.convexroof.curves import (
    CurveSet,
    GridSpec,
    characteristic_curves,
    characteristic_envelope,
    curve_minimum,
    default_phase_step,
    iter_characteristic_curves,
    make_grid,
    phase_axis,
)
from threetangle.convexroof.envelope import (
    ConvexEnvelope,
    lower_convex_envelope,
)
from threetangle.convexroof.family_roof import (
    UNDERCUT_TOL,
    estimate_family_roof,
)
from threetangle.convexroof.search import (
    MAX_ENSEMBLE_SIZE,
    RoofConfig,
    RoofEstimate,
    RoofObjective,
    SearchTrace,
    estimate_roof,
    search_roof,
)

__all__ = [
    "ConvexEnvelope",
    "CurveSet",
    "GridSpec",
    "MAX_ENSEMBLE_SIZE",
    "RoofConfig",
    "RoofEstimate",
    "RoofObjective",
    "SearchTrace",
    "UNDERCUT_TOL",
    "characteristic_curves",
    "characteristic_envelope",
    "curve_minimum",
    "default_phase_step",
    "estimate_family_roof",
    "estimate_roof",
    "iter_characteristic_curves",
    "lower_convex_envelope",
    "make_grid",
    "phase_axis",
    "search_roof",
]
