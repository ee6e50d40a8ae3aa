from threetangle.ckw import (
    CkwRow,
    ckw_report,
    min_one_tangle_estimate,
    one_tangle_rank5_closed,
)
from threetangle.convexroof import (
    RoofConfig,
    characteristic_curves,
    estimate_roof,
    lower_convex_envelope,
)
from threetangle.families import (
    BUILTIN_FAMILIES,
    FamilySpec,
    family_by_id,
    family_state,
    optimal_decomposition,
    tangle_curve,
    tau3_family,
)
from threetangle.qstate import DensityMatrix, Ensemble, PureState
from threetangle.tangle import (
    concurrence_two_qubit,
    three_tangle_pure,
    z_state,
)
from threetangle.utils import logger
from threetangle.version import __version__

__all__ = [
    "BUILTIN_FAMILIES",
    "CkwRow",
    "DensityMatrix",
    "Ensemble",
    "FamilySpec",
    "PureState",
    "RoofConfig",
    "__version__",
    "characteristic_curves",
    "ckw_report",
    "concurrence_two_qubit",
    "estimate_roof",
    "family_by_id",
    "family_state",
    "logger",
    "lower_convex_envelope",
    "min_one_tangle_estimate",
    "one_tangle_rank5_closed",
    "optimal_decomposition",
    "tangle_curve",
    "tau3_family",
    "three_tangle_pure",
    "z_state",
]
