from threetangle.families.curve import (
    PiecewiseTangleCurve,
    curve_region,
    family_state,
    find_x0,
    find_x1,
    find_xstar,
    g_one,
    g_one_derivative,
    p1_closed_form,
    p1_stationarity,
    rank4_vanishing_point,
    tangle_curve,
    tau3_family,
)
from threetangle.families.decomposition import (
    SignPattern,
    balanced_background_ensemble,
    optimal_decomposition,
    published_sign_patterns,
    stabilizer_sign_rows,
)
from threetangle.families.registry import (
    BUILTIN_FAMILIES,
    PUBLISHED_CONSTANTS,
    RANK4,
    RANK5,
    RANK6,
    RANK7,
    RANK8,
    family_by_id,
)
from threetangle.models.family import FamilySpec

__all__ = [
    "BUILTIN_FAMILIES",
    "FamilySpec",
    "PUBLISHED_CONSTANTS",
    "PiecewiseTangleCurve",
    "RANK4",
    "RANK5",
    "RANK6",
    "RANK7",
    "RANK8",
    "SignPattern",
    "balanced_background_ensemble",
    "curve_region",
    "family_by_id",
    "family_state",
    "find_x0",
    "find_x1",
    "find_xstar",
    "g_one",
    "g_one_derivative",
    "optimal_decomposition",
    "p1_closed_form",
    "p1_stationarity",
    "published_sign_patterns",
    "rank4_vanishing_point",
    "stabilizer_sign_rows",
    "tangle_curve",
    "tau3_family",
]
