"""Pure-state polynomial invariants of three qubits."""

from typing import Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from threetangle.qstate.states import (
    DensityMatrix,
    PureState,
    Subsystem,
    partial_trace,
)
from threetangle.utils.exceptions import DimensionMismatchError

__all__ = [
    "d_coefficients",
    "hyperdeterminant",
    "one_tangle_pure",
    "three_tangle_pure",
    "unnormalized_three_tangle",
]

# index pairs (i, 7 - i) whose products a_i a_{7-i} build d1 and d2:
# a000 a111, a001 a110, a010 a101, a100 a011
_COMPLEMENT_PAIRS = ((0, 7), (1, 6), (2, 5), (4, 3))


def _amplitude_array(
    psi: Union[PureState, ArrayLike],
) -> NDArray[np.complex128]:
    if isinstance(psi, PureState):
        amplitudes = psi.amplitudes
    else:
        amplitudes = np.asarray(psi, dtype=np.complex128)
    if amplitudes.shape[-1:] != (8,):
        raise DimensionMismatchError(
            f"Three-qubit amplitudes need a trailing axis of length 8, got "
            f"shape {amplitudes.shape}"
        )
    return amplitudes


def _d_terms(
    a: NDArray[np.complex128],
) -> tuple[
    NDArray[np.complex128], NDArray[np.complex128], NDArray[np.complex128]
]:
    pairs = np.stack([a[..., i] * a[..., j] for i, j in _COMPLEMENT_PAIRS])
    d1 = np.sum(pairs**2, axis=0)
    d2 = sum(
        pairs[k] * pairs[l]
        for k in range(len(_COMPLEMENT_PAIRS))
        for l in range(k + 1, len(_COMPLEMENT_PAIRS))  # noqa: E741
    )
    d3 = (
        a[..., 0] * a[..., 6] * a[..., 5] * a[..., 3]
        + a[..., 7] * a[..., 1] * a[..., 2] * a[..., 4]
    )
    return d1, np.asarray(d2), d3


def d_coefficients(psi: Union[PureState, ArrayLike]) -> tuple[complex, ...]:
    """
    The monomial sums ``(d1, d2, d3)`` of the three-qubit hyperdeterminant.

    Args:
        psi: Pure state or a raw vector of 8 amplitudes (normalization is
            not required).

    Returns:
        ``(d1, d2, d3)`` such that the three-tangle is
        ``4 |d1 - 2 d2 + 4 d3|``.
    """
    amplitudes = _amplitude_array(psi)
    if amplitudes.ndim != 1:
        raise DimensionMismatchError("d_coefficients takes a single state")
    return tuple(complex(d) for d in _d_terms(amplitudes))


def hyperdeterminant(amplitudes: ArrayLike) -> NDArray[np.complex128]:
    """Signed hyperdeterminant ``d1 - 2 d2 + 4 d3`` over the last axis."""
    d1, d2, d3 = _d_terms(_amplitude_array(amplitudes))
    return np.asarray(d1 - 2 * d2 + 4 * d3)


def unnormalized_three_tangle(amplitudes: ArrayLike) -> NDArray[np.float64]:
    """``4 |Det|`` without normalization; homogeneous of degree 4."""
    return np.asarray(4.0 * np.abs(hyperdeterminant(amplitudes)))


def three_tangle_pure(psi: PureState) -> float:
    """
    Three-tangle ``4 |d1 - 2 d2 + 4 d3|`` of a normalized three-qubit state.

    Raises:
        DimensionMismatchError: If ``psi`` is not a three-qubit state.
    """
    if psi.dim != 8:
        raise DimensionMismatchError(
            f"Three-tangle needs a three-qubit state, got dimension {psi.dim}"
        )
    return float(unnormalized_three_tangle(psi.amplitudes))


def _two_by_two_det(rho: DensityMatrix) -> float:
    m = rho.entries
    return float((m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]).real)


def one_tangle_pure(
    psi: PureState, subsystem: Union[Subsystem, str] = Subsystem.A
) -> float:
    """One-tangle ``4 det(rho_X)`` of the single-qubit marginal ``X``."""
    if psi.dim != 8:
        raise DimensionMismatchError(
            f"One-tangle needs a three-qubit state, got dimension {psi.dim}"
        )
    rho = DensityMatrix(entries=psi.projector())
    marginal = partial_trace(rho, [subsystem])
    return max(0.0, 4.0 * _two_by_two_det(marginal))
