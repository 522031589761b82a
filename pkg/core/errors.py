"""
Exception hierarchy for SpectralBounds.
"""


class SpectralBoundsError(Exception):
    """Base class for all library errors."""


class MatrixMarketError(SpectralBoundsError, ValueError):
    """Malformed Matrix Market input. Carries the 1-based line number."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class ContractError(SpectralBoundsError, ValueError):
    """An operation was called outside its precondition."""


class DimensionError(ContractError):
    """Size mismatch, unsupported dimension, or index out of range."""


class ConvergenceError(SpectralBoundsError, RuntimeError):
    """An eigensolver did not converge or failed its residual certificate."""
