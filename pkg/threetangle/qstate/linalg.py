"""Small dense Hermitian linear algebra for matrices of dimension <= 8."""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from threetangle.utils.exceptions import (
    DimensionMismatchError,
    NotHermitianError,
    NotPsdError,
)
from threetangle.utils.logger_m import logger

__all__ = [
    "check_hermitian",
    "hermitian_eigensystem",
    "numerical_rank",
    "psd_sqrt",
    "RANK_TOL",
]

HERMITIAN_TOL = 1e-10
OFF_DIAGONAL_TOL = 1e-13
MAX_SWEEPS = 100
CLAMP_TOL = 1e-10
NEGATIVE_TOL = 1e-8
RANK_TOL = 1e-10


def check_hermitian(
    matrix: ArrayLike, tol: float = HERMITIAN_TOL
) -> NDArray[np.complex128]:
    array = np.array(matrix, dtype=np.complex128)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise DimensionMismatchError(
            f"Expected a square matrix, got shape {array.shape}"
        )
    if array.size == 0:
        raise DimensionMismatchError("Expected a non-empty matrix")
    deviation = float(np.max(np.abs(array - array.conj().T)))
    if deviation > tol:
        raise NotHermitianError(
            f"Matrix is not Hermitian: max |M - M^H| = {deviation:.3e}"
        )
    return array


def _off_diagonal_norm(a: NDArray[np.complex128]) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _jacobi_rotate(
    a: NDArray[np.complex128], v: NDArray[np.complex128], p: int, q: int
) -> None:
    apq = a[p, q]
    r = abs(apq)
    if r == 0.0:
        return
    phase = apq / r
    theta = (a[q, q].real - a[p, p].real) / (2.0 * r)
    if theta == 0.0:
        t = 1.0
    elif abs(theta) > 1e150:
        t = 0.5 / theta
    else:
        t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    # phase on q makes the pivot real, then a real rotation annihilates it
    rot = np.array(
        [[c, s], [-s * np.conj(phase), c * np.conj(phase)]],
        dtype=np.complex128,
    )
    pair = [p, q]
    a[:, pair] = a[:, pair] @ rot
    a[pair, :] = rot.conj().T @ a[pair, :]
    v[:, pair] = v[:, pair] @ rot
    a[p, q] = a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real


def hermitian_eigensystem(
    matrix: ArrayLike,
) -> tuple[NDArray[np.float64], NDArray[np.complex128]]:
    """
    Diagonalizes a Hermitian matrix with cyclic Jacobi rotations.

    Args:
        matrix: Hermitian matrix (within 1e-10 entrywise).

    Returns:
        Eigenvalues sorted in descending order and the matching orthonormal
        eigenvectors as columns. Order inside degenerate eigenspaces is
        unspecified.

    Raises:
        NotHermitianError: If the input is not Hermitian.
        DimensionMismatchError: If the input is not a square matrix.
    """
    a = check_hermitian(matrix)
    a = (a + a.conj().T) / 2
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    tol = OFF_DIAGONAL_TOL * max(1.0, float(np.linalg.norm(a)))
    for sweep in range(MAX_SWEEPS):
        if _off_diagonal_norm(a) < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _jacobi_rotate(a, v, p, q)
    else:
        logger.debug(
            f"Jacobi stopped after {MAX_SWEEPS} sweeps with off-diagonal "
            f"norm {_off_diagonal_norm(a):.3e}"
        )
    if sweep:
        logger.debug(f"Jacobi converged in {sweep} sweeps (n={n})")
    eigenvalues = np.real(np.diag(a)).copy()
    order = np.argsort(-eigenvalues, kind="stable")
    return eigenvalues[order], v[:, order]


def psd_sqrt(matrix: ArrayLike) -> NDArray[np.complex128]:
    """Principal square root of a positive semidefinite Hermitian matrix.

    Eigenvalues down to -1e-8 are treated as rounding noise and clamped to
    zero; anything more negative is a data error.
    """
    values, vectors = hermitian_eigensystem(matrix)
    if values[-1] < -NEGATIVE_TOL:
        raise NotPsdError(
            f"Matrix is not positive semidefinite: eigenvalue {values[-1]:.3e}"
        )
    if values[-1] < -CLAMP_TOL:
        logger.debug(f"Clamping eigenvalue {values[-1]:.3e} to zero")
    roots = np.sqrt(np.clip(values, 0.0, None))
    root = (vectors * roots) @ vectors.conj().T
    return np.asarray((root + root.conj().T) / 2, dtype=np.complex128)


def numerical_rank(matrix: ArrayLike, tol: float = RANK_TOL) -> int:
    values, _ = hermitian_eigensystem(matrix)
    return int(np.count_nonzero(values > tol))
