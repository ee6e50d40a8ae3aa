import sys
from fractions import Fraction
from typing import Any

import numpy as np
from numpy.typing import NDArray
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    field_validator,
    model_validator,
)

from threetangle.qstate.states import GhzLabel, ghz_vector

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

__all__ = ["BackgroundTerm", "FamilySpec"]


class BackgroundTerm(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    weight: Fraction
    label: GhzLabel

    @field_validator("weight", mode="before")
    @classmethod
    def exact_weight(cls, value: Any) -> Fraction:
        weight = Fraction(value)
        if weight <= 0:
            raise ValueError(f"Background weight must be positive: {weight}")
        return weight


class FamilySpec(BaseModel):
    """
    GHZ-diagonal family ``x|lead><lead| + (1-x) sum_j w_j |b_j><b_j|``.

    Attributes:
        name: Identifier used on the command line (``"rank5"``...).
        rank: Rank of the family state for ``x`` in (0, 1).
        lead: Leading GHZ state.
        background: Ordered background terms; the order fixes the meaning
            of Z-state phases and sign-pattern columns.
    """

    model_config = ConfigDict(frozen=True)

    name: str
    rank: int = Field(ge=4, le=8)
    lead: GhzLabel
    background: tuple[BackgroundTerm, ...]

    @model_validator(mode="after")
    def check_consistency(self) -> Self:
        if self.rank != 1 + len(self.background):
            raise ValueError(
                f"Rank {self.rank} needs {self.rank - 1} background states, "
                f"got {len(self.background)}"
            )
        total = sum((term.weight for term in self.background), Fraction(0))
        if total != 1:
            raise ValueError(f"Background weights sum to {total}, not 1")
        labels = [self.lead, *(term.label for term in self.background)]
        if len(set(labels)) != len(labels):
            raise ValueError("Family repeats a GHZ state")
        return self

    @property
    def phase_count(self) -> int:
        return len(self.background)

    @property
    def background_labels(self) -> tuple[GhzLabel, ...]:
        return tuple(term.label for term in self.background)

    def background_weights(self) -> NDArray[np.float64]:
        return np.array([float(term.weight) for term in self.background])

    def lead_vector(self) -> NDArray[np.complex128]:
        return ghz_vector(self.lead)

    def background_vectors(self) -> NDArray[np.complex128]:
        return np.array([ghz_vector(term.label) for term in self.background])

    def __str__(self) -> str:
        return self.name
