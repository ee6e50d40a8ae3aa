from collections.abc import Iterable

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict

from threetangle.utils.exceptions import DegenerateInputError, DomainError

__all__ = ["ConvexEnvelope", "lower_convex_envelope"]

CONVEXITY_TOL = 1e-12


class ConvexEnvelope(BaseModel):
    """Piecewise-linear convex function given by its hull vertices."""

    model_config = ConfigDict(frozen=True)

    vertices: tuple[tuple[float, float], ...]

    @property
    def xs(self) -> NDArray[np.float64]:
        return np.array([x for x, _ in self.vertices])

    @property
    def ys(self) -> NDArray[np.float64]:
        return np.array([y for _, y in self.vertices])

    def __call__(self, x: ArrayLike) -> NDArray[np.float64]:
        points = np.asarray(x, dtype=np.float64)
        xs = self.xs
        if np.any(points < xs[0]) or np.any(points > xs[-1]):
            raise DomainError(
                f"Envelope is defined on [{xs[0]}, {xs[-1]}] only"
            )
        return np.asarray(np.interp(points, xs, self.ys))

    def is_convex(self, tol: float = CONVEXITY_TOL) -> bool:
        xs, ys = self.xs, self.ys
        if len(xs) < 3:
            return True
        slopes = np.diff(ys) / np.diff(xs)
        return bool(np.all(np.diff(slopes) >= -tol))


def _cross(
    origin: tuple[float, float],
    a: tuple[float, float],
    b: tuple[float, float],
) -> float:
    return (a[0] - origin[0]) * (b[1] - origin[1]) - (b[0] - origin[0]) * (
        a[1] - origin[1]
    )


def lower_convex_envelope(
    points: Iterable[tuple[float, float]],
) -> ConvexEnvelope:
    """
    Greatest convex function lying on or below all points (monotone chain).

    Duplicate x values collapse to their smallest y.

    Raises:
        DegenerateInputError: If fewer than two distinct x values remain or
            a coordinate is not finite.
    """
    lowest: dict[float, float] = {}
    for x, y in points:
        x, y = float(x), float(y)
        if not (np.isfinite(x) and np.isfinite(y)):
            raise DegenerateInputError(f"Non-finite point ({x}, {y})")
        lowest[x] = min(y, lowest.get(x, y))
    if len(lowest) < 2:
        raise DegenerateInputError(
            "Lower convex envelope needs at least two distinct x values"
        )
    hull: list[tuple[float, float]] = []
    for point in sorted(lowest.items()):
        while len(hull) > 1 and _cross(hull[-2], hull[-1], point) <= 0.0:
            hull.pop()
        hull.append(point)
    return ConvexEnvelope(vertices=tuple(hull))
