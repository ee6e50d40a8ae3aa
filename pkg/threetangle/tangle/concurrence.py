import numpy as np
from numpy.typing import NDArray

from threetangle.qstate.linalg import hermitian_eigensystem
from threetangle.qstate.states import DensityMatrix
from threetangle.utils.exceptions import DimensionMismatchError

__all__ = ["SPIN_FLIP", "concurrence_two_qubit", "squared_concurrence"]

_PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
SPIN_FLIP: NDArray[np.complex128] = np.kron(_PAULI_Y, _PAULI_Y)
SUPPORT_TOL = 1e-13


def _spin_flip_overlap(rho: DensityMatrix) -> NDArray[np.complex128]:
    """
    ``B = Phi^T (Y x Y) Phi`` for ``rho = Phi Phi^H`` on the support of rho.

    The nonzero eigenvalues of ``B^H B`` are those of
    ``sqrt(rho) rho~ sqrt(rho)`` with ``rho~ = (Y x Y) rho* (Y x Y)``.
    """
    values, vectors = hermitian_eigensystem(rho.entries)
    support = values > SUPPORT_TOL
    phi = vectors[:, support] * np.sqrt(values[support])
    return np.asarray(phi.T @ SPIN_FLIP @ phi, dtype=np.complex128)


def squared_concurrence(rho: DensityMatrix) -> float:
    """Squared Wootters concurrence of a two-qubit density matrix."""
    if rho.dim != 4:
        raise DimensionMismatchError(
            f"Concurrence needs a two-qubit state, got dimension {rho.dim}"
        )
    overlap = _spin_flip_overlap(rho)
    rank = overlap.shape[0]
    if rank == 0:
        return 0.0
    if rank == 1:
        return float(abs(overlap[0, 0]) ** 2)
    if rank == 2:
        # (l1 - l2)^2 from the invariants of the 2x2 block, no square roots
        frobenius = float(np.sum(np.abs(overlap) ** 2))
        det = abs(
            overlap[0, 0] * overlap[1, 1] - overlap[0, 1] * overlap[1, 0]
        )
        return max(0.0, frobenius - 2.0 * float(det))
    mu, _ = hermitian_eigensystem(overlap.conj().T @ overlap)
    lambdas = np.sqrt(np.clip(mu, 0.0, None))
    concurrence = max(0.0, float(lambdas[0] - np.sum(lambdas[1:])))
    return concurrence**2


def concurrence_two_qubit(rho: DensityMatrix) -> float:
    """
    Wootters concurrence ``max(0, l1 - l2 - l3 - l4)``.

    The ``l_i`` are the descending square roots of the eigenvalues of
    ``rho rho~``, obtained from the Hermitian matrix ``B^H B`` built on the
    support of ``rho`` (see :func:`squared_concurrence`).

    Raises:
        DimensionMismatchError: If ``rho`` is not a 4x4 density matrix.
    """
    return float(np.sqrt(squared_concurrence(rho)))
