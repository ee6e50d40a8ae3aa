import sys
from typing import Callable, Optional, Union, overload

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, model_validator

from threetangle.families.registry import (
    G_ONE_COEFFICIENTS,
    GOneCoefficients,
    require_builtin,
)
from threetangle.models.curve_region import CurveRegion
from threetangle.models.family import FamilySpec
from threetangle.qstate.states import DensityMatrix
from threetangle.utils.exceptions import (
    DomainError,
    NoBreakpointError,
    UnsupportedFamilyError,
)
from threetangle.utils.logger_m import logger

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

__all__ = [
    "PiecewiseTangleCurve",
    "curve_region",
    "family_state",
    "find_x0",
    "find_x1",
    "find_xstar",
    "g_one",
    "g_one_derivative",
    "p1_closed_form",
    "p1_stationarity",
    "rank4_vanishing_point",
    "tangle_curve",
    "tau3_family",
]

ROOT_TOL = 1e-12
BREAKPOINT_TOL = 1e-8
SECOND_DIFF_STEP = 1e-5
SCAN_POINTS = 4000

FloatOrArray = Union[float, NDArray[np.float64]]


def rank4_vanishing_point() -> float:
    return (2.0 - np.sqrt(3.0)) / 2.0


def p1_closed_form() -> float:
    return 0.5 + 73.0 * np.sqrt(6409.0) / 12818.0


def p1_stationarity(p: float) -> float:
    """``3 sqrt(30) (sqrt(p/(1-p)) - sqrt((1-p)/p))``, equal to 73 at p1."""
    ratio = p / (1.0 - p)
    return float(3.0 * np.sqrt(30.0) * (np.sqrt(ratio) - 1.0 / np.sqrt(ratio)))


def _check_mix(x: ArrayLike) -> NDArray[np.float64]:
    array = np.asarray(x, dtype=np.float64)
    if np.any(~np.isfinite(array)) or np.any((array < 0.0) | (array > 1.0)):
        raise DomainError(f"Mixing value {x} is outside [0, 1]")
    return array


def _evaluate(coefficients: GOneCoefficients, x: ArrayLike) -> FloatOrArray:
    x = np.asarray(x, dtype=np.float64)
    q = np.clip(1.0 - x, 0.0, None)
    value = (
        x**2
        + coefficients.quadratic * x * q
        - coefficients.background * q**2
        - coefficients.root * np.sqrt(np.clip(x * q**3, 0.0, None))
    )
    return float(value) if value.ndim == 0 else value


def _evaluate_derivative(coefficients: GOneCoefficients, x: float) -> float:
    q = max(1.0 - x, 0.0)
    return float(
        2.0 * x
        + coefficients.quadratic * (1.0 - 2.0 * x)
        + 2.0 * coefficients.background * q
        - coefficients.root * np.sqrt(q) * (q - 3.0 * x) / (2.0 * np.sqrt(x))
    )


def _coefficients(family: FamilySpec) -> GOneCoefficients:
    require_builtin(family)
    return G_ONE_COEFFICIENTS[family.name]


def _require_g_one(family: FamilySpec) -> GOneCoefficients:
    if family.rank == 4:
        raise UnsupportedFamilyError(
            "The rank-4 family has no g_I curve; its tangle is only "
            "established on [0, p0]"
        )
    return _coefficients(family)


@overload
def g_one(family: FamilySpec, x: float) -> float: ...


@overload
def g_one(
    family: FamilySpec, x: NDArray[np.float64]
) -> NDArray[np.float64]: ...


def g_one(family: FamilySpec, x: ArrayLike) -> FloatOrArray:
    """
    Printed closed form ``g_I`` of the family (ranks 5-8).

    Equals the three-tangle of the zero-phase Z-state on ``[x0, 1]`` and
    goes negative below ``x0``.

    Raises:
        UnsupportedFamilyError: For the rank-4 family.
        DomainError: If ``x`` is outside [0, 1].
    """
    coefficients = _require_g_one(family)
    return _evaluate(coefficients, _check_mix(x))


def g_one_derivative(family: FamilySpec, x: float) -> float:
    coefficients = _require_g_one(family)
    if not 0.0 < x <= 1.0:
        raise DomainError(f"g_I' is defined on (0, 1], got {x}")
    return _evaluate_derivative(coefficients, x)


def _bisect(
    function: Callable[[float], float], low: float, high: float, tol: float
) -> float:
    """Bisects a bracket where ``function(low) <= 0 < function(high)``."""
    while abs(high - low) > tol:
        middle = 0.5 * (low + high)
        if function(middle) <= 0.0:
            low = middle
        else:
            high = middle
    return 0.5 * (low + high)


def find_x0(family: FamilySpec) -> float:
    """
    Largest root in (0, 1) of the signed zero-phase tangle.

    The rank-4 root is returned in closed form. For higher ranks the scan
    runs downward from ``x = 1``; ranks 6-8 have a second, spurious root
    close to 0 that has to be skipped.
    """
    if family.rank == 4:
        require_builtin(family)
        return rank4_vanishing_point()
    coefficients = _coefficients(family)
    grid = np.linspace(1.0, 0.0, SCAN_POINTS + 1)
    values = _evaluate(coefficients, grid)
    nonpositive = np.flatnonzero(values <= 0.0)
    if nonpositive.size == 0:
        raise NoBreakpointError(f"g_I of {family.name} has no root in (0, 1)")
    k = int(nonpositive[0])
    root = _bisect(
        lambda x: float(_evaluate(coefficients, x)),
        float(grid[k]),
        float(grid[k - 1]),
        ROOT_TOL,
    )
    logger.debug(f"{family.name}: x0 = {root:.12f}")
    return root


def _second_difference(coefficients: GOneCoefficients, x: float) -> float:
    h = SECOND_DIFF_STEP
    values = _evaluate(coefficients, np.array([x - h, x, x + h]))
    return float((values[0] - 2.0 * values[1] + values[2]) / h**2)


def find_xstar(family: FamilySpec) -> float:
    """
    Convexity breakpoint of ``g_I``: root of its second derivative in
    ``(x0, 1)``, from central differences with step 1e-5.

    Raises:
        NoBreakpointError: If ``g_I''`` does not change sign.
    """
    coefficients = _require_g_one(family)
    x0 = find_x0(family)
    grid = np.linspace(
        x0 + SECOND_DIFF_STEP, 1.0 - SECOND_DIFF_STEP, SCAN_POINTS
    )
    previous = float(grid[0])
    if _second_difference(coefficients, previous) <= 0.0:
        raise NoBreakpointError(
            f"g_I of {family.name} is not convex at x0 = {x0:.6f}"
        )
    for x in grid[1:]:
        if _second_difference(coefficients, float(x)) <= 0.0:
            root = _bisect(
                lambda t: _second_difference(coefficients, t),
                float(x),
                previous,
                BREAKPOINT_TOL,
            )
            logger.debug(f"{family.name}: xstar = {root:.9f}")
            return root
        previous = float(x)
    raise NoBreakpointError(
        f"g_I'' of {family.name} does not change sign in (x0, 1)"
    )


def _tangent_residual(coefficients: GOneCoefficients, x: float) -> float:
    """``(1-x) g_I'(x) + g_I(x) - 1``; zero where the chord to (1, 1) is
    tangent to ``g_I``."""
    return (
        (1.0 - x) * _evaluate_derivative(coefficients, x)
        + float(_evaluate(coefficients, x))
        - 1.0
    )


def find_x1(family: FamilySpec) -> float:
    """
    Tangent point of the chord from ``(x1, g_I(x1))`` to ``(1, 1)``.

    The residual vanishes trivially at ``x = 1``; the bracket is the first
    sign change found scanning upward from ``x0``.
    """
    coefficients = _require_g_one(family)
    x0 = find_x0(family)
    grid = x0 + (1.0 - x0) * np.arange(1, SCAN_POINTS) / SCAN_POINTS
    previous = x0
    if _tangent_residual(coefficients, previous) >= 0.0:
        raise NoBreakpointError(
            f"Tangent residual of {family.name} is not negative at x0"
        )
    for x in grid:
        if _tangent_residual(coefficients, float(x)) > 0.0:
            root = _bisect(
                lambda t: _tangent_residual(coefficients, t),
                previous,
                float(x),
                ROOT_TOL,
            )
            logger.debug(f"{family.name}: x1 = {root:.12f}")
            return root
        previous = float(x)
    raise NoBreakpointError(f"No tangent point found for {family.name}")


class PiecewiseTangleCurve(BaseModel):
    """
    Three-region analytic tangle: ``0`` on ``[0, x0]``, ``g_I`` on
    ``[x0, x1]`` and the chord ``g_II`` from ``(x1, g_I(x1))`` to ``(1, 1)``.
    """

    model_config = ConfigDict(frozen=True)

    family: str
    x0: float
    x1: float
    xstar: Optional[float]
    g_one: GOneCoefficients
    g_one_at_x1: float

    @model_validator(mode="after")
    def check_ordering(self) -> Self:
        if not 0.0 < self.x0 < self.x1 < 1.0:
            raise ValueError(
                f"Transition constants out of order: x0={self.x0}, "
                f"x1={self.x1}"
            )
        return self

    @property
    def x1_within_convex_part(self) -> bool:
        return self.xstar is None or self.x1 <= self.xstar

    def g_two(self, x: ArrayLike) -> FloatOrArray:
        x = np.asarray(x, dtype=np.float64)
        value = ((x - self.x1) + (1.0 - x) * self.g_one_at_x1) / (
            1.0 - self.x1
        )
        return float(value) if value.ndim == 0 else value

    def g_one_value(self, x: ArrayLike) -> FloatOrArray:
        return _evaluate(self.g_one, x)

    def __call__(self, x: ArrayLike) -> FloatOrArray:
        x = _check_mix(x)
        value = np.where(
            x <= self.x0,
            0.0,
            np.where(x <= self.x1, self.g_one_value(x), self.g_two(x)),
        )
        value = np.clip(value, 0.0, None)
        return float(value) if value.ndim == 0 else value

    def region(self, x: float) -> CurveRegion:
        _check_mix(x)
        if x <= self.x0:
            return CurveRegion.ZERO
        if x <= self.x1:
            return CurveRegion.G_ONE
        return CurveRegion.G_TWO


_CURVES: dict[str, PiecewiseTangleCurve] = {}


def tangle_curve(family: FamilySpec) -> PiecewiseTangleCurve:
    """Builds (once per family) the piecewise curve of a rank 5-8 family."""
    coefficients = _require_g_one(family)
    cached = _CURVES.get(family.name)
    if cached is not None:
        return cached
    x0 = find_x0(family)
    x1 = find_x1(family)
    try:
        xstar: Optional[float] = find_xstar(family)
    except NoBreakpointError as ex:
        logger.warning(f"{family.name}: {ex}")
        xstar = None
    curve = PiecewiseTangleCurve(
        family=family.name,
        x0=x0,
        x1=x1,
        xstar=xstar,
        g_one=coefficients,
        g_one_at_x1=float(_evaluate(coefficients, x1)),
    )
    if not curve.x1_within_convex_part:
        logger.warning(
            f"{family.name}: tangent point x1={x1:.6f} lies beyond the "
            f"convexity breakpoint xstar={xstar:.6f}"
        )
    _CURVES[family.name] = curve
    return curve


def curve_region(family: FamilySpec, x: float) -> CurveRegion:
    if family.rank == 4:
        require_builtin(family)
        if _check_mix(x) <= rank4_vanishing_point():
            return CurveRegion.ZERO
        raise DomainError(
            f"rank4 tangle is only established on [0, p0], got x={x}"
        )
    return tangle_curve(family).region(x)


def tau3_family(family: FamilySpec, x: float) -> float:
    """
    Three-tangle of ``family_state(family, x)`` (convex roof, closed form).

    Raises:
        DomainError: If ``x`` is outside [0, 1], or exceeds p0 for the rank-4
            family, whose tangle is not established there.
    """
    if family.rank == 4:
        curve_region(family, x)
        return 0.0
    return float(tangle_curve(family)(x))


def family_state(family: FamilySpec, x: float) -> DensityMatrix:
    """``x |lead><lead| + (1 - x) sum_j w_j |b_j><b_j|``."""
    x = float(_check_mix(x))
    lead = family.lead_vector()
    vectors = family.background_vectors()
    weights = family.background_weights()
    rho = x * np.outer(lead, lead.conj()) + (1.0 - x) * np.einsum(
        "j,ja,jb->ab", weights, vectors, vectors.conj()
    )
    return DensityMatrix(entries=rho)
