import sys
from collections.abc import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

from threetangle.models.family import FamilySpec
from threetangle.qstate.states import PureState
from threetangle.tangle.invariants import three_tangle_pure
from threetangle.utils.exceptions import ArityError, DomainError

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

__all__ = [
    "ZStateSpec",
    "tau3_z_closed_form",
    "z_amplitudes",
    "z_state",
]


class ZStateSpec(BaseModel):
    """
    Phase-decorated superposition of a family's lead and background states.

    Attributes:
        family: Family providing the lead state and background terms.
        mix: Mixing value ``x`` in [0, 1].
        phases: One phase (radians) per background state.
    """

    model_config = ConfigDict(frozen=True)

    family: FamilySpec
    mix: float
    phases: tuple[float, ...] = Field(default=())

    @model_validator(mode="after")
    def check_arity_and_range(self) -> Self:
        if len(self.phases) != self.family.phase_count:
            raise ArityError(
                f"Family {self.family.name} takes {self.family.phase_count} "
                f"phases, got {len(self.phases)}"
            )
        if not 0.0 <= self.mix <= 1.0:
            raise DomainError(f"Mixing value {self.mix} is outside [0, 1]")
        return self

    @classmethod
    def zero_phases(cls, family: FamilySpec, mix: float) -> "ZStateSpec":
        return cls(family=family, mix=mix, phases=(0.0,) * family.phase_count)


def z_amplitudes(
    family: FamilySpec, mix: ArrayLike, phases: ArrayLike
) -> NDArray[np.complex128]:
    """
    Batched Z-state amplitudes.

    ``sqrt(x)|lead> - sum_j exp(i phi_j) sqrt((1-x) w_j) |b_j>``, broadcast
    over the leading axes of ``mix`` (shape ``S``) and ``phases`` (shape
    ``S + (k,)``).

    Returns:
        Array of shape ``broadcast(S) + (8,)``.
    """
    x = np.asarray(mix, dtype=np.float64)
    phi = np.asarray(phases, dtype=np.float64)
    if phi.shape[-1:] != (family.phase_count,):
        raise ArityError(
            f"Family {family.name} takes {family.phase_count} phases, got "
            f"trailing axis {phi.shape[-1:]}"
        )
    if np.any((x < 0.0) | (x > 1.0)):
        raise DomainError("Mixing values must lie in [0, 1]")
    x = x[..., np.newaxis]
    coefficients = -np.exp(1j * phi) * np.sqrt(
        (1.0 - x) * family.background_weights()
    )
    background = coefficients @ family.background_vectors()
    return np.asarray(
        np.sqrt(x) * family.lead_vector() + background, dtype=np.complex128
    )


def z_state(spec: ZStateSpec) -> PureState:
    amplitudes = z_amplitudes(spec.family, spec.mix, spec.phases)
    return PureState(amplitudes=amplitudes)


def _rank4_closed_form(p: float, phases: Sequence[float]) -> float:
    u = np.exp(2j * np.asarray(phases))
    pairs = u[0] * u[1] + u[0] * u[2] + u[1] * u[2]
    value = (
        p**2
        + 2.0 * p * (1.0 - p) * np.sum(u) / 3.0
        + (1.0 - p) ** 2 * (np.sum(u**2) - 2.0 * pairs) / 9.0
    )
    return float(abs(value))


def _rank5_closed_form(p: float, phases: Sequence[float]) -> float:
    u = np.exp(2j * np.asarray(phases))
    q = 1.0 - p
    rest = u[1] + u[2] + u[3]
    rest_pairs = u[1] * u[2] + u[1] * u[3] + u[2] * u[3]
    value = (
        p**2
        + q**2 * u[0] ** 2 / 100.0
        + 9.0 * q**2 * (u[1] ** 2 + u[2] ** 2 + u[3] ** 2) / 100.0
        - p * q * u[0] / 5.0
        - 3.0 * p * q * rest / 5.0
        + 3.0 * q**2 * u[0] * rest / 50.0
        - 9.0 * q**2 * rest_pairs / 50.0
        - 6.0
        * np.sqrt(30.0)
        * np.sqrt(p * q**3)
        * np.exp(1j * (phases[1] + phases[2] + phases[3]))
        / 25.0
    )
    return float(abs(value))


def tau3_z_closed_form(spec: ZStateSpec) -> float:
    """
    Three-tangle of a Z-state from its printed closed form.

    Ranks 4 and 5 evaluate the closed forms in the mixing value and the
    phases; higher ranks have no such form and use the hyperdeterminant of
    :func:`z_state` directly.
    """
    if spec.family.rank == 4:
        return _rank4_closed_form(spec.mix, spec.phases)
    if spec.family.rank == 5:
        return _rank5_closed_form(spec.mix, spec.phases)
    return three_tangle_pure(z_state(spec))
