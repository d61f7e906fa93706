"""Exception types shared across the package."""


class StarRamseyError(Exception):
    """Base class for all starramsey errors."""


class InvalidParameterError(StarRamseyError, ValueError):
    """An argument violates a documented precondition."""


class UnsupportedParametersError(StarRamseyError, ValueError):
    """The requested instance is outside the supported domain."""


class ConstructionFailedError(StarRamseyError, RuntimeError):
    """A builder's postcondition check failed; no coloring is returned."""


class InfeasibleInstanceError(StarRamseyError, RuntimeError):
    """An exhaustive search would exceed its configured budget."""


class ColoringFormatError(StarRamseyError, ValueError):
    """A coloring file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
