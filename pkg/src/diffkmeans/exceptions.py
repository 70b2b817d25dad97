"""Exception hierarchy shared across the package."""


class DiffKMeansError(Exception):
    """Base class for all package errors."""


class ValidationError(DiffKMeansError, ValueError):
    """Invalid argument or configuration value."""


class ParseError(ValidationError):
    """Malformed input file; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DegenerateBandwidthError(ValidationError):
    """A local bandwidth collapsed to zero (duplicate points)."""


class SizeGuardError(ValidationError):
    """A cost guard on an exhaustive computation was exceeded."""


class NumericalError(DiffKMeansError, RuntimeError):
    """An eigensolver failed or iterates became non-finite."""


class SelectionError(DiffKMeansError, RuntimeError):
    """Regularization-path selection found no eligible cluster count."""
