import itertools
from typing import Optional

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict

from threetangle.families.curve import (
    curve_region,
    rank4_vanishing_point,
    tangle_curve,
)
from threetangle.families.registry import (
    BACKGROUND_SOURCES,
    BUILTIN_FAMILIES,
    PRINTED_SIGN_ROWS,
    require_builtin,
)
from threetangle.models.curve_region import CurveRegion
from threetangle.models.family import FamilySpec
from threetangle.qstate.states import Ensemble, GhzLabel, PureState
from threetangle.tangle.invariants import unnormalized_three_tangle
from threetangle.tangle.zstates import z_amplitudes
from threetangle.utils.exceptions import UnsupportedFamilyError
from threetangle.utils.logger_m import logger

__all__ = [
    "SignPattern",
    "balanced_background_ensemble",
    "optimal_decomposition",
    "published_sign_patterns",
    "stabilizer_sign_rows",
]

ENSEMBLE_SIZE = 8
TANGLE_MATCH_TOL = 1e-12
_CHECK_MIXES = (0.3, 0.6, 0.9)

SignRow = tuple[int, ...]


class SignPattern(BaseModel):
    """
    Phase rows (0 as +1, pi as -1) of the eight optimal Z-states.

    Attributes:
        rows: Eight rows with one sign per background state.
        corrected: True if the printed rows were rejected and replaced.
        replaced_rows: Indices of the rows that were replaced.
    """

    model_config = ConfigDict(frozen=True)

    rows: tuple[SignRow, ...]
    corrected: bool = False
    replaced_rows: tuple[int, ...] = ()

    def matrix(self) -> NDArray[np.int64]:
        return np.array(self.rows, dtype=np.int64)

    def phases(self) -> NDArray[np.float64]:
        return np.where(self.matrix() < 0, np.pi, 0.0)

    def column_products(self) -> NDArray[np.int64]:
        """Gram matrix of the columns with an all-ones column prepended."""
        signs = self.matrix()
        columns = np.hstack([np.ones((signs.shape[0], 1), np.int64), signs])
        return columns.T @ columns

    def is_column_orthogonal(self) -> bool:
        gram = self.column_products()
        return bool(np.all(gram[~np.eye(gram.shape[0], dtype=bool)] == 0))


def _parse_rows(rows: tuple[str, ...]) -> tuple[SignRow, ...]:
    return tuple(
        tuple(1 if char == "+" else -1 for char in row) for row in rows
    )


def _label_bits(label: GhzLabel) -> NDArray[np.int64]:
    # sign-flip characters: Z(A)Z(B) flips GHZ 3 and 4, Z(A)Z(C) flips
    # GHZ 2 and 4, X(A)X(B)X(C) flips every minus state
    return np.array(
        [label.index in (3, 4), label.index in (2, 4), label.is_minus],
        dtype=np.int64,
    )


def stabilizer_sign_rows(family: FamilySpec) -> tuple[SignRow, ...]:
    """
    The eight sign rows induced by local Pauli products.

    Each row is the action of an element of the group generated by
    ``ZZ1``, ``Z1Z`` and ``XXX`` on the background states relative to the
    lead; these products leave the hyperdeterminant unchanged, so every
    row gives a Z-state with the same tangle.
    """
    lead = _label_bits(family.lead)
    characters = np.array(
        [_label_bits(label) ^ lead for label in family.background_labels]
    )
    rows = []
    for element in itertools.product((0, 1), repeat=3):
        parity = characters @ np.array(element, dtype=np.int64) % 2
        rows.append(tuple(int(sign) for sign in 1 - 2 * parity))
    return tuple(rows)


def _rows_keep_tangle(family: FamilySpec, pattern: SignPattern) -> bool:
    phases = pattern.phases()
    for mix in _CHECK_MIXES:
        tangles = unnormalized_three_tangle(z_amplitudes(family, mix, phases))
        if np.ptp(tangles) > TANGLE_MATCH_TOL:
            return False
    return True


def _correct_rows(
    family: FamilySpec, printed: tuple[SignRow, ...]
) -> SignPattern:
    group_rows = list(stabilizer_sign_rows(family))
    rows: list[Optional[SignRow]] = []
    for row in printed:
        if row in group_rows:
            group_rows.remove(row)
            rows.append(row)
        else:
            rows.append(None)
    replaced = tuple(i for i, row in enumerate(rows) if row is None)
    spare = iter(group_rows)
    completed = tuple(row if row is not None else next(spare) for row in rows)
    return SignPattern(rows=completed, corrected=True, replaced_rows=replaced)


_PATTERNS: dict[str, SignPattern] = {}


def published_sign_patterns(family: FamilySpec) -> SignPattern:
    """
    Sign rows of the family's eight optimal Z-states.

    The printed rows are returned when, with an all-ones column prepended,
    their columns are pairwise orthogonal and all eight rows give the same
    tangle. Otherwise the rows are rebuilt from :func:`stabilizer_sign_rows`,
    keeping printed rows that belong to it in place, and the pattern is
    flagged as corrected.
    """
    require_builtin(family)
    cached = _PATTERNS.get(family.name)
    if cached is not None:
        return cached
    pattern = SignPattern(rows=_parse_rows(PRINTED_SIGN_ROWS[family.name]))
    if not (
        pattern.is_column_orthogonal()
        and _rows_keep_tangle(family, pattern)
    ):
        pattern = _correct_rows(family, pattern.rows)
        logger.warning(
            f"{family.name}: printed sign rows {list(pattern.replaced_rows)} "
            f"do not give equal-tangle orthogonal members; replaced them"
        )
    _PATTERNS[family.name] = pattern
    return pattern


_Members = list[tuple[float, NDArray[np.complex128]]]


def _z_members(family: FamilySpec, mix: float, weight: float) -> _Members:
    phases = published_sign_patterns(family).phases()
    amplitudes = z_amplitudes(family, mix, phases)
    return [(weight, row) for row in amplitudes]


def balanced_background_ensemble(family: FamilySpec) -> _Members:
    """
    Zero-tangle decomposition of an equal mixture of three GHZ states.

    Uses the eight Z-states at ``x = 0`` with phases
    ``(0, pi/3, 2pi/3)`` shifted by every sign row: ``exp(2i phi)`` runs over
    the cube roots of unity, which makes the tangle vanish, and the sign
    shifts cancel all cross terms.
    """
    weights = {term.weight for term in family.background}
    if family.phase_count != 3 or len(weights) != 1:
        raise UnsupportedFamilyError(
            f"{family.name} background is not an equal three-state mixture"
        )
    base = np.arange(3) * np.pi / 3.0
    shifts = np.array(list(itertools.product((0.0, np.pi), repeat=3)))
    amplitudes = z_amplitudes(family, 0.0, base + shifts)
    return [(1.0 / len(shifts), row) for row in amplitudes]


def _zero_region_members(family: FamilySpec, mix: float) -> _Members:
    if family.rank == 4:
        x0 = rank4_vanishing_point()
        background = balanced_background_ensemble(family)
    else:
        x0 = tangle_curve(family).x0
        source = BACKGROUND_SOURCES[family.name]
        background = _zero_region_members(
            BUILTIN_FAMILIES[source.family], float(source.mix)
        )
    members = _z_members(family, x0, mix / (ENSEMBLE_SIZE * x0))
    scale = (x0 - mix) / x0
    members.extend((scale * weight, state) for weight, state in background)
    return members


def optimal_decomposition(family: FamilySpec, x: float) -> Ensemble:
    """
    Optimal pure-state decomposition of ``family_state(family, x)``.

    - ``x <= x0``: eight Z-states at ``x0`` with weight ``x/(8 x0)`` each,
      plus the background's own zero-tangle decomposition with total weight
      ``(x0 - x)/x0``, expanded down to the rank-4 construction.
    - ``x0 <= x <= x1``: eight Z-states at ``x`` with weight 1/8 each.
    - ``x >= x1``: eight Z-states at ``x1`` with weight
      ``(1 - x)/(8 (1 - x1))`` each, plus the lead state with weight
      ``(x - x1)/(1 - x1)``.

    Members with zero weight are dropped.

    Raises:
        DomainError: If ``x`` is outside [0, 1], or above p0 for rank 4.
    """
    region = curve_region(family, x)
    if region is CurveRegion.ZERO:
        members = _zero_region_members(family, x)
    elif region is CurveRegion.G_ONE:
        members = _z_members(family, x, 1.0 / ENSEMBLE_SIZE)
    else:
        x1 = tangle_curve(family).x1
        members = _z_members(
            family, x1, (1.0 - x) / (ENSEMBLE_SIZE * (1.0 - x1))
        )
        members.append(((x - x1) / (1.0 - x1), family.lead_vector()))
    return Ensemble.from_pairs(
        (weight, PureState(amplitudes=state))
        for weight, state in members
        if weight > 0.0
    )
