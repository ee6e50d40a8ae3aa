"""Characteristic curves: Z-state tangles over a lattice of phases."""

import sys
from collections.abc import Iterable, Iterator, Sequence
from math import ceil, pi
from typing import Any, Optional, Union

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, model_validator

from threetangle.config import get_settings
from threetangle.convexroof.envelope import (
    ConvexEnvelope,
    lower_convex_envelope,
)
from threetangle.models.family import FamilySpec
from threetangle.tangle.invariants import unnormalized_three_tangle
from threetangle.tangle.zstates import z_amplitudes
from threetangle.utils.exceptions import (
    DegenerateInputError,
    DomainError,
    TooManyCurvesError,
    UnsupportedFamilyError,
)
from threetangle.utils.logger_m import logger

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

__all__ = [
    "CHUNK_SIZE",
    "CurveSet",
    "GridSpec",
    "characteristic_curves",
    "characteristic_envelope",
    "curve_minimum",
    "default_phase_step",
    "iter_characteristic_curves",
    "make_grid",
    "phase_axis",
]

CHUNK_SIZE = 1024
VALUE_TOL = 1e-12

GridSpec = Union[int, Sequence[float], NDArray[np.float64]]

_DEFAULT_STEPS = {5: 0.3, 6: pi / 4, 7: pi / 2, 8: pi / 2}


class CurveSet(BaseModel):
    """
    Tangle values of a block of characteristic curves.

    Attributes:
        family: Name of the family the curves belong to.
        x_grid: Ascending mixing values shared by all curves.
        first_id: Lattice index of the first curve of the block.
        phases: Phase vectors, one row per curve.
        values: Tangle values, one row per curve and one column per grid
            point.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    family: str
    x_grid: np.ndarray  # type: ignore[type-arg]
    first_id: int = 0
    phases: np.ndarray  # type: ignore[type-arg]
    values: np.ndarray  # type: ignore[type-arg]

    @model_validator(mode="after")
    def check_shapes(self) -> Self:
        if self.values.shape != (len(self.phases), len(self.x_grid)):
            raise ValueError(
                f"Curve values of shape {self.values.shape} do not match "
                f"{len(self.phases)} curves on {len(self.x_grid)} points"
            )
        if self.values.size and (
            np.min(self.values) < 0.0
            or np.max(self.values) > 1.0 + VALUE_TOL
        ):
            raise ValueError("Curve values must lie in [0, 1]")
        return self

    @property
    def curve_ids(self) -> NDArray[np.int64]:
        return self.first_id + np.arange(len(self.phases))

    def __len__(self) -> int:
        return len(self.phases)

    def curve(self, phases: Sequence[float]) -> NDArray[np.float64]:
        """Values of the curve whose phase vector matches ``phases``."""
        matches = np.flatnonzero(
            np.all(np.isclose(self.phases, np.asarray(phases)), axis=1)
        )
        if matches.size == 0:
            raise KeyError(f"No curve with phases {tuple(phases)}")
        return np.asarray(self.values[matches[0]])


def make_grid(x_grid: GridSpec) -> NDArray[np.float64]:
    """``N`` points from 0 to 1 inclusive, or an explicit ascending grid."""
    if isinstance(x_grid, (int, np.integer)):
        if x_grid < 2:
            raise DegenerateInputError(
                f"A grid needs at least two points, got {x_grid}"
            )
        return np.linspace(0.0, 1.0, int(x_grid))
    grid = np.asarray(x_grid, dtype=np.float64)
    if grid.ndim != 1 or grid.size == 0:
        raise DegenerateInputError("Grid must be a non-empty 1-d sequence")
    if np.any(grid < 0.0) or np.any(grid > 1.0):
        raise DomainError("Grid values must lie in [0, 1]")
    if np.any(np.diff(grid) <= 0.0):
        raise DegenerateInputError("Grid values must be strictly ascending")
    return grid


def default_phase_step(family: FamilySpec) -> float:
    _check_family(family)
    return _DEFAULT_STEPS[family.rank]


def _check_family(family: FamilySpec) -> None:
    if family.rank not in _DEFAULT_STEPS:
        raise UnsupportedFamilyError(
            f"Characteristic curves need a rank 5-8 family, got "
            f"{family.name} (rank {family.rank})"
        )


def phase_axis(phase_step: float) -> NDArray[np.float64]:
    """Phases ``0, step, 2 step, ...`` strictly below ``2 pi``."""
    if not np.isfinite(phase_step) or phase_step <= 0.0:
        raise DomainError(f"Phase step must be positive, got {phase_step}")
    count = ceil(2.0 * pi / phase_step - 1e-12)
    return np.arange(count) * phase_step


def _lattice(
    family: FamilySpec, phase_step: Optional[float], cap: Optional[int]
) -> tuple[NDArray[np.float64], int]:
    _check_family(family)
    step = default_phase_step(family) if phase_step is None else phase_step
    axis = phase_axis(step)
    total = len(axis) ** family.phase_count
    limit = get_settings().curve_cap if cap is None else cap
    if total > limit:
        raise TooManyCurvesError(
            f"{family.name} at phase step {step:g} needs {total} curves, "
            f"above the cap of {limit}; raise the cap to {total} or use a "
            f"coarser step",
            required_cap=total,
        )
    return axis, total


def iter_characteristic_curves(
    family: FamilySpec,
    phase_step: Optional[float] = None,
    x_grid: GridSpec = 200,
    cap: Optional[int] = None,
    chunk_size: int = CHUNK_SIZE,
) -> Iterator[CurveSet]:
    """
    Characteristic curves in blocks of at most ``chunk_size``.

    Curve ``n`` has the phase vector whose base-``len(axis)`` digits
    (last phase fastest) index the phase axis.

    The lattice size is checked before the first block is computed.

    Raises:
        TooManyCurvesError: If the lattice is larger than ``cap`` (default
            from settings).
    """
    grid = make_grid(x_grid)
    axis, total = _lattice(family, phase_step, cap)
    logger.debug(
        f"{family.name}: {total} characteristic curves on {len(grid)} points"
    )
    return _curve_blocks(family, grid, axis, total, chunk_size)


def _curve_blocks(
    family: FamilySpec,
    grid: NDArray[np.float64],
    axis: NDArray[np.float64],
    total: int,
    chunk_size: int,
) -> Iterator[CurveSet]:
    shape = (len(axis),) * family.phase_count
    for start in range(0, total, chunk_size):
        ids = np.arange(start, min(start + chunk_size, total))
        phases = axis[np.stack(np.unravel_index(ids, shape), axis=-1)]
        amplitudes = z_amplitudes(
            family, grid[np.newaxis, :], phases[:, np.newaxis, :]
        )
        values = unnormalized_three_tangle(amplitudes)
        yield CurveSet(
            family=family.name,
            x_grid=grid,
            first_id=start,
            phases=phases,
            values=values,
        )


def characteristic_curves(
    family: FamilySpec,
    phase_step: Optional[float] = None,
    x_grid: GridSpec = 200,
    cap: Optional[int] = None,
) -> CurveSet:
    """All characteristic curves of ``family`` as one :class:`CurveSet`."""
    chunks = list(iter_characteristic_curves(family, phase_step, x_grid, cap))
    return CurveSet(
        family=family.name,
        x_grid=chunks[0].x_grid,
        phases=np.concatenate([chunk.phases for chunk in chunks]),
        values=np.concatenate([chunk.values for chunk in chunks]),
    )


def curve_minimum(
    curves: Union[CurveSet, Iterable[CurveSet]],
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Grid and pointwise minimum over all curves of one or more blocks."""
    blocks: Iterable[CurveSet] = (
        [curves] if isinstance(curves, CurveSet) else curves
    )
    grid: Optional[NDArray[np.float64]] = None
    minimum: Optional[NDArray[np.float64]] = None
    for block in blocks:
        if len(block) == 0:
            continue
        lowest = np.min(block.values, axis=0)
        if minimum is None or grid is None:
            grid, minimum = block.x_grid, lowest
        else:
            if not np.array_equal(grid, block.x_grid):
                raise DegenerateInputError("Curve blocks use different grids")
            minimum = np.minimum(minimum, lowest)
    if minimum is None or grid is None:
        raise DegenerateInputError("No curves to reduce")
    return grid, minimum


def characteristic_envelope(
    family: FamilySpec, **kwargs: Any
) -> ConvexEnvelope:
    """Lower convex envelope of the pointwise minimum of the curves.

    Keyword arguments are passed to :func:`iter_characteristic_curves`.
    """
    grid, minimum = curve_minimum(iter_characteristic_curves(family, **kwargs))
    return lower_convex_envelope(zip(grid, minimum))
