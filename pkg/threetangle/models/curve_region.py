from enum import Enum

__all__ = ["CurveRegion"]


class CurveRegion(Enum):
    ZERO = "zero"
    G_ONE = "gI"
    G_TWO = "gII"
