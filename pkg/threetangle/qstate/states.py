import sys
from collections.abc import Iterable, Sequence
from enum import Enum
from typing import Any, Literal, Optional, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    field_validator,
    model_validator,
)

from threetangle.qstate.linalg import hermitian_eigensystem
from threetangle.utils.exceptions import (
    DimensionMismatchError,
    InvalidEnsembleError,
    InvalidSubsystemError,
    NormalizationError,
    NotHermitianError,
    NotPsdError,
    TraceError,
)

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

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
    "partial_trace",
    "random_density_matrix",
    "random_pure_state",
]

NORM_TOL = 1e-10
HERMITIAN_ENTRY_TOL = 1e-12
TRACE_TOL = 1e-12
EIGENVALUE_TOL = 1e-10
WEIGHT_SUM_TOL = 1e-12
QUBIT_DIMS = (2, 4, 8)


class Subsystem(Enum):
    A = "A"
    B = "B"
    C = "C"

    @property
    def axis(self) -> int:
        return "ABC".index(self.value)


# computational-basis indices (4i+2j+k) of |first> and |second> in
# |GHZ,k±> = (|first> ± |second>)/sqrt(2)
_GHZ_SUPPORT = {1: (0, 7), 2: (6, 1), 3: (5, 2), 4: (3, 4)}


class GhzLabel(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: int = Field(ge=1, le=4)
    sign: Literal["+", "-"]

    @classmethod
    def parse(cls, text: str) -> "GhzLabel":
        """Builds a label from strings like ``"1+"`` or ``"2-"``."""
        text = text.strip().replace("−", "-")
        sign = text[-1]
        return cls(index=int(text[:-1]), sign=sign)  # type: ignore[arg-type]

    @property
    def is_minus(self) -> bool:
        return self.sign == "-"

    @property
    def position(self) -> int:
        """Position of the label in :func:`ghz_basis` order."""
        return 2 * (self.index - 1) + int(self.is_minus)

    def __str__(self) -> str:
        return f"{self.index}{self.sign}"


GHZ_LABELS: tuple[GhzLabel, ...] = tuple(
    GhzLabel(index=index, sign=sign)  # type: ignore[arg-type]
    for index in range(1, 5)
    for sign in ("+", "-")
)


def _as_readonly(array: NDArray[Any]) -> NDArray[Any]:
    array.setflags(write=False)
    return array


class PureState(BaseModel):
    """Normalized pure state of one, two or three qubits.

    Amplitude ``a_ijk`` of a three-qubit state sits at index ``4i + 2j + k``
    (qubit A is the leftmost bit).
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    amplitudes: np.ndarray  # type: ignore[type-arg]

    @field_validator("amplitudes", mode="before")
    @classmethod
    def coerce_amplitudes(cls, value: Any) -> NDArray[np.complex128]:
        array = np.array(value, dtype=np.complex128)
        if array.ndim != 1 or array.shape[0] not in QUBIT_DIMS:
            raise ValueError(
                f"Amplitudes must be a vector of length 2, 4 or 8, got "
                f"shape {array.shape}"
            )
        return _as_readonly(array)

    @model_validator(mode="after")
    def check_normalized(self) -> Self:
        norm = float(np.vdot(self.amplitudes, self.amplitudes).real)
        if abs(norm - 1.0) > NORM_TOL:
            raise NormalizationError(
                f"State is not normalized: sum |a|^2 = {norm:.12g}"
            )
        return self

    @classmethod
    def normalized(cls, amplitudes: ArrayLike) -> "PureState":
        array = np.array(amplitudes, dtype=np.complex128)
        norm = np.linalg.norm(array)
        if norm == 0.0:
            raise NormalizationError("Cannot normalize the zero vector")
        return cls(amplitudes=array / norm)

    @property
    def dim(self) -> int:
        return int(self.amplitudes.shape[0])

    def projector(self) -> NDArray[np.complex128]:
        return np.outer(self.amplitudes, self.amplitudes.conj())


class DensityMatrix(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    entries: np.ndarray  # type: ignore[type-arg]

    @field_validator("entries", mode="before")
    @classmethod
    def coerce_entries(cls, value: Any) -> NDArray[np.complex128]:
        array = np.array(value, dtype=np.complex128)
        if (
            array.ndim != 2
            or array.shape[0] != array.shape[1]
            or array.shape[0] not in QUBIT_DIMS
        ):
            raise ValueError(
                f"Density matrix must be 2x2, 4x4 or 8x8, got shape "
                f"{array.shape}"
            )
        return _as_readonly(array)

    @model_validator(mode="after")
    def check_physical(self) -> Self:
        rho = self.entries
        deviation = float(np.max(np.abs(rho - rho.conj().T)))
        if deviation > HERMITIAN_ENTRY_TOL:
            raise NotHermitianError(
                f"Density matrix is not Hermitian: deviation {deviation:.3e}"
            )
        trace = complex(np.trace(rho))
        if abs(trace - 1.0) > TRACE_TOL:
            raise TraceError(f"Density matrix trace is {trace:.12g}, not 1")
        smallest = hermitian_eigensystem(rho)[0][-1]
        if smallest < -EIGENVALUE_TOL:
            raise NotPsdError(
                f"Density matrix has negative eigenvalue {smallest:.3e}"
            )
        return self

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def eigenvalues(self) -> NDArray[np.float64]:
        return hermitian_eigensystem(self.entries)[0]


class EnsembleMember(BaseModel):
    model_config = ConfigDict(frozen=True)

    weight: float
    state: PureState


class Ensemble(BaseModel):
    """Weighted pure-state decomposition ``{w_i, |psi_i>}``."""

    model_config = ConfigDict(frozen=True)

    members: tuple[EnsembleMember, ...]

    @model_validator(mode="after")
    def check_weights(self) -> Self:
        if not self.members:
            raise InvalidEnsembleError("Ensemble has no members")
        weights = self.weights
        if np.any(weights <= 0.0):
            raise InvalidEnsembleError("Ensemble weights must be positive")
        total = float(np.sum(weights))
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise InvalidEnsembleError(
                f"Ensemble weights sum to {total:.15g}, not 1"
            )
        return self

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[tuple[float, PureState]]
    ) -> "Ensemble":
        return cls(
            members=tuple(
                EnsembleMember(weight=weight, state=state)
                for weight, state in pairs
            )
        )

    @property
    def weights(self) -> NDArray[np.float64]:
        return np.array([member.weight for member in self.members])

    @property
    def states(self) -> list[PureState]:
        return [member.state for member in self.members]

    def __len__(self) -> int:
        return len(self.members)


def ghz_vector(label: GhzLabel) -> NDArray[np.complex128]:
    first, second = _GHZ_SUPPORT[label.index]
    vector = np.zeros(8, dtype=np.complex128)
    vector[first] = 1.0 / np.sqrt(2.0)
    vector[second] = (-1.0 if label.is_minus else 1.0) / np.sqrt(2.0)
    return vector


def ghz_state(label: GhzLabel) -> PureState:
    return PureState(amplitudes=ghz_vector(label))


def ghz_basis() -> NDArray[np.complex128]:
    """Rows are the GHZ states in the order 1+, 1-, 2+, 2-, ..., 4-."""
    return np.array([ghz_vector(label) for label in GHZ_LABELS])


def density_from_ensemble(ensemble: Ensemble) -> DensityMatrix:
    dims = {state.dim for state in ensemble.states}
    if len(dims) != 1:
        raise DimensionMismatchError(
            f"Ensemble mixes state dimensions {sorted(dims)}"
        )
    states = np.array([state.amplitudes for state in ensemble.states])
    rho = np.einsum(
        "i,ij,ik->jk", ensemble.weights, states, states.conj(), optimize=True
    )
    return DensityMatrix(entries=rho)


SubsystemLike = Union[Subsystem, str]
KeepSpec = Union[Subsystem, Iterable[SubsystemLike]]


def _parse_subsystems(keep: KeepSpec) -> list[Subsystem]:
    items = [keep] if isinstance(keep, Subsystem) else list(keep)
    try:
        parsed = {
            item if isinstance(item, Subsystem) else Subsystem(item.upper())
            for item in items
        }
    except ValueError as ex:
        raise InvalidSubsystemError(f"Unknown subsystem in {keep!r}") from ex
    if not parsed or len(parsed) == len(Subsystem):
        raise InvalidSubsystemError(
            "Subsystems to keep must be a nonempty proper subset of {A,B,C}"
        )
    return sorted(parsed, key=lambda subsystem: subsystem.axis)


def partial_trace(
    rho: DensityMatrix, keep: KeepSpec
) -> DensityMatrix:
    """
    Traces a three-qubit density matrix down to the kept qubits.

    Args:
        rho: Density matrix of dimension 8.
        keep: Nonempty proper subset of ``{A, B, C}`` as enum members or
            letters (``"AB"`` is accepted).

    Returns:
        Reduced density matrix on the kept qubits, in ``A, B, C`` order.

    Raises:
        DimensionMismatchError: If ``rho`` is not a three-qubit state.
        InvalidSubsystemError: If ``keep`` is empty, complete or unknown.
    """
    if rho.dim != 8:
        raise DimensionMismatchError(
            f"Partial trace needs a three-qubit state, got dimension {rho.dim}"
        )
    kept = _parse_subsystems(keep)
    rows = ["a", "b", "c"]
    cols = ["d", "e", "f"]
    kept_axes = [subsystem.axis for subsystem in kept]
    for axis in range(3):
        if axis not in kept_axes:
            cols[axis] = rows[axis]
    out = "".join(rows[axis] for axis in kept_axes) + "".join(
        cols[axis] for axis in kept_axes
    )
    reduced = np.einsum(
        f"{''.join(rows)}{''.join(cols)}->{out}",
        rho.entries.reshape((2,) * 6),
    )
    dim = 2 ** len(kept_axes)
    return DensityMatrix(entries=reduced.reshape(dim, dim))


def _complex_normal(
    rng: np.random.Generator, shape: Sequence[int]
) -> NDArray[np.complex128]:
    return rng.normal(size=shape) + 1j * rng.normal(size=shape)


def random_pure_state(rng: np.random.Generator, dim: int = 8) -> PureState:
    """Haar-random pure state."""
    return PureState.normalized(_complex_normal(rng, (dim,)))


def random_density_matrix(
    rng: np.random.Generator, dim: int = 8, rank: Optional[int] = None
) -> DensityMatrix:
    """Random density matrix from the induced (Ginibre) measure."""
    ginibre = _complex_normal(rng, (dim, dim if rank is None else rank))
    rho = ginibre @ ginibre.conj().T
    rho = (rho + rho.conj().T) / 2
    return DensityMatrix(entries=rho / np.trace(rho).real)
