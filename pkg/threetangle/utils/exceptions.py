__all__ = [
    "ArityError",
    "DegenerateInputError",
    "DimensionMismatchError",
    "DomainError",
    "InfeasibleConfigurationError",
    "InfeasibleEnsembleError",
    "InvalidEnsembleError",
    "InvalidStateError",
    "InvalidSubsystemError",
    "NoBreakpointError",
    "NormalizationError",
    "NotHermitianError",
    "NotPsdError",
    "TangleError",
    "TooManyCurvesError",
    "TraceError",
    "UnsupportedFamilyError",
    "UnsupportedFileTypeError",
]


class TangleError(Exception):
    """Base class of every error raised by the toolkit.

    None of the subclasses derive from ``ValueError``: raised inside a
    pydantic validator they propagate unchanged instead of being folded
    into a ``ValidationError``.
    """


class InvalidStateError(TangleError):
    """State data violates a physical constraint."""


class NormalizationError(InvalidStateError):
    pass


class NotHermitianError(InvalidStateError):
    pass


class NotPsdError(InvalidStateError):
    pass


class TraceError(InvalidStateError):
    pass


class DimensionMismatchError(InvalidStateError):
    pass


class InvalidEnsembleError(InvalidStateError):
    pass


class InvalidSubsystemError(TangleError):
    pass


class DomainError(TangleError):
    """Parameter lies outside the range where a result is established."""


class ArityError(TangleError):
    pass


class UnsupportedFamilyError(TangleError):
    pass


class UnsupportedFileTypeError(TangleError):
    pass


class NoBreakpointError(TangleError):
    pass


class DegenerateInputError(TangleError):
    pass


class InfeasibleConfigurationError(TangleError):
    """Requested configuration cannot be carried out as stated."""


class InfeasibleEnsembleError(InfeasibleConfigurationError):
    pass


class TooManyCurvesError(InfeasibleConfigurationError):
    def __init__(self, *args: object, required_cap: int):
        super().__init__(*args)
        self.required_cap = required_cap
