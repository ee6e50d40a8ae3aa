"""JSON layouts of state files; complex numbers are ``[re, im]`` pairs."""

import sys
from collections.abc import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, Field, model_validator

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

__all__ = [
    "ComplexPair",
    "DensityMatrixFile",
    "PureStateFile",
    "complex_to_pairs",
    "pairs_to_complex",
]

ComplexPair = tuple[float, float]


def pairs_to_complex(pairs: Sequence[ComplexPair]) -> NDArray[np.complex128]:
    array = np.asarray(pairs, dtype=np.float64).reshape(-1, 2)
    return np.asarray(array[:, 0] + 1j * array[:, 1], dtype=np.complex128)


def complex_to_pairs(values: ArrayLike) -> list[ComplexPair]:
    flat = np.asarray(values, dtype=np.complex128).ravel()
    return [(float(value.real), float(value.imag)) for value in flat]


class PureStateFile(BaseModel):
    amplitudes: list[ComplexPair] = Field(min_length=2)


class DensityMatrixFile(BaseModel):
    dim: int = Field(ge=2)
    entries: list[ComplexPair]

    @model_validator(mode="after")
    def check_entry_count(self) -> Self:
        if len(self.entries) != self.dim**2:
            raise ValueError(
                f"A {self.dim}x{self.dim} matrix needs {self.dim**2} entries, "
                f"got {len(self.entries)}"
            )
        return self

    @classmethod
    def from_matrix(cls, matrix: ArrayLike) -> "DensityMatrixFile":
        array = np.asarray(matrix, dtype=np.complex128)
        return cls(dim=array.shape[0], entries=complex_to_pairs(array))
