from threetangle.tangle.concurrence import (
    concurrence_two_qubit,
    squared_concurrence,
)
from threetangle.tangle.invariants import (
    d_coefficients,
    hyperdeterminant,
    one_tangle_pure,
    three_tangle_pure,
    unnormalized_three_tangle,
)
from threetangle.tangle.zstates import (
    ZStateSpec,
    tau3_z_closed_form,
    z_amplitudes,
    z_state,
)

__all__ = [
    "ZStateSpec",
    "concurrence_two_qubit",
    "d_coefficients",
    "hyperdeterminant",
    "one_tangle_pure",
    "squared_concurrence",
    "tau3_z_closed_form",
    "three_tangle_pure",
    "unnormalized_three_tangle",
    "z_amplitudes",
    "z_state",
]
