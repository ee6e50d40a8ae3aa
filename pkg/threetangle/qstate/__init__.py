from threetangle.qstate.linalg import (
    hermitian_eigensystem,
    numerical_rank,
    psd_sqrt,
)
from threetangle.qstate.states import (
    GHZ_LABELS,
    DensityMatrix,
    Ensemble,
    EnsembleMember,
    GhzLabel,
    PureState,
    Subsystem,
    density_from_ensemble,
    ghz_basis,
    ghz_state,
    ghz_vector,
    partial_trace,
    random_density_matrix,
    random_pure_state,
)

__all__ = [
    "DensityMatrix",
    "Ensemble",
    "EnsembleMember",
    "GHZ_LABELS",
    "GhzLabel",
    "PureState",
    "Subsystem",
    "density_from_ensemble",
    "ghz_basis",
    "ghz_state",
    "ghz_vector",
    "hermitian_eigensystem",
    "numerical_rank",
    "partial_trace",
    "psd_sqrt",
    "random_density_matrix",
    "random_pure_state",
]
