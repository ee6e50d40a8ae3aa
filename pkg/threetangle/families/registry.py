"""Built-in GHZ-mixture families and their printed data."""

from fractions import Fraction
from math import sqrt
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict

from threetangle.models.family import BackgroundTerm, FamilySpec
from threetangle.qstate.states import GhzLabel
from threetangle.utils.exceptions import UnsupportedFamilyError

__all__ = [
    "BACKGROUND_SOURCES",
    "BUILTIN_FAMILIES",
    "G_ONE_COEFFICIENTS",
    "GOneCoefficients",
    "PRINTED_SIGN_ROWS",
    "PUBLISHED_CONSTANTS",
    "RANK4",
    "RANK5",
    "RANK6",
    "RANK7",
    "RANK8",
    "BackgroundSource",
    "family_by_id",
    "require_builtin",
]


def _family(name: str, lead: str, *terms: tuple[str, str]) -> FamilySpec:
    return FamilySpec(
        name=name,
        rank=1 + len(terms),
        lead=GhzLabel.parse(lead),
        background=tuple(
            BackgroundTerm(weight=Fraction(weight), label=GhzLabel.parse(label))
            for weight, label in terms
        ),
    )


RANK4 = _family("rank4", "1-", ("1/3", "2+"), ("1/3", "3+"), ("1/3", "4+"))
RANK5 = _family(
    "rank5",
    "1+",
    ("1/10", "1-"),
    ("3/10", "2+"),
    ("3/10", "3+"),
    ("3/10", "4+"),
)
RANK6 = _family(
    "rank6",
    "2-",
    ("1/11", "1+"),
    ("1/11", "1-"),
    ("3/11", "2+"),
    ("3/11", "3+"),
    ("3/11", "4+"),
)
RANK7 = _family(
    "rank7",
    "3-",
    ("1/34", "2-"),
    ("3/34", "1+"),
    ("3/34", "1-"),
    ("9/34", "2+"),
    ("9/34", "3+"),
    ("9/34", "4+"),
)
RANK8 = _family(
    "rank8",
    "4-",
    ("1/35", "3-"),
    ("1/35", "2-"),
    ("3/35", "1+"),
    ("3/35", "1-"),
    ("9/35", "2+"),
    ("9/35", "3+"),
    ("9/35", "4+"),
)

BUILTIN_FAMILIES: dict[str, FamilySpec] = {
    family.name: family for family in (RANK4, RANK5, RANK6, RANK7, RANK8)
}


def family_by_id(identifier: str) -> FamilySpec:
    try:
        return BUILTIN_FAMILIES[identifier.strip().lower()]
    except KeyError:
        known = ", ".join(BUILTIN_FAMILIES)
        raise UnsupportedFamilyError(
            f"Unknown family '{identifier}'; known families: {known}"
        ) from None


def require_builtin(family: FamilySpec) -> None:
    if BUILTIN_FAMILIES.get(family.name) != family:
        raise UnsupportedFamilyError(
            f"Family '{family.name}' is not one of the built-in families"
        )


class GOneCoefficients(BaseModel):
    """
    ``g(x) = x^2 + a x(1-x) - b (1-x)^2 - c sqrt(x (1-x)^3)``.

    This is the signed three-tangle polynomial of the zero-phase Z-state.

    Attributes:
        quadratic: ``a``.
        background: ``b``.
        root: ``c``, the coefficient of the square-root term.
    """

    model_config = ConfigDict(frozen=True)

    quadratic: float
    background: float
    root: float


G_ONE_COEFFICIENTS: dict[str, GOneCoefficients] = {
    # rank 4 has no printed g_I; this is its zero-phase closed form
    "rank4": GOneCoefficients(quadratic=2.0, background=1.0 / 3.0, root=0.0),
    "rank5": GOneCoefficients(
        quadratic=-2.0, background=2.0 / 25.0, root=6.0 * sqrt(30.0) / 25.0
    ),
    "rank6": GOneCoefficients(
        quadratic=6.0 / 11.0,
        background=(27.0 - 24.0 * sqrt(3.0)) / 121.0,
        root=24.0 * sqrt(11.0) / 121.0,
    ),
    "rank7": GOneCoefficients(
        quadratic=8.0 / 17.0,
        background=(56.0 - 72.0 * sqrt(3.0)) / 289.0,
        root=24.0 * sqrt(102.0) / 289.0,
    ),
    "rank8": GOneCoefficients(
        quadratic=2.0 / 5.0,
        background=(207.0 - 384.0 * sqrt(3.0)) / 1225.0,
        root=128.0 * sqrt(105.0) / 1225.0,
    ),
}


class BackgroundSource(NamedTuple):
    """The background mixture equals ``family`` evaluated at ``mix``."""

    family: str
    mix: Fraction


BACKGROUND_SOURCES: dict[str, BackgroundSource] = {
    "rank5": BackgroundSource("rank4", Fraction(1, 10)),
    "rank6": BackgroundSource("rank5", Fraction(1, 11)),
    "rank7": BackgroundSource("rank6", Fraction(1, 34)),
    "rank8": BackgroundSource("rank7", Fraction(1, 35)),
}

# phase rows of the eight optimal Z-states, "+" for 0 and "-" for pi;
# rank7 row 5 follows the ket of the printed projector
PRINTED_SIGN_ROWS: dict[str, tuple[str, ...]] = {
    "rank4": ("+++", "++-", "+-+", "+--", "-++", "-+-", "--+", "---"),
    "rank5": (
        "++++", "++--", "+-+-", "+--+", "-+++", "-+--", "--+-", "---+",
    ),
    "rank6": (
        "+++++", "+--++", "-+-+-", "--++-",
        "-+--+", "--+-+", "+++--", "+----",
    ),
    "rank7": (
        "++++++", "+-+---", "-++-+-", "--++-+",
        "+--++-", "++---+", "----++", "-+-+--",
    ),
    "rank8": (
        "+++++++", "+++----", "+--++--", "+----++",
        "-+-+-+-", "-+--+-+", "--++--+", "--+-++-",
    ),
}  # fmt: skip

PUBLISHED_CONSTANTS: dict[str, dict[str, float]] = {
    "rank4": {"x0": 0.134},
    "rank5": {"x0": 0.7377, "x1": 0.9559, "xstar": 0.9750},
    "rank6": {"x0": 0.2143, "x1": 0.8290},
    "rank7": {"x0": 0.2062, "x1": 0.8375},
    "rank8": {"x0": 0.2490, "x1": 0.8649},
}
