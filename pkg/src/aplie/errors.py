"""Exception types shared across the package."""


class ApLieError(Exception):
    """Base class for all package-specific errors."""


class ArithmeticDomainError(ApLieError):
    """Invalid exact-arithmetic operation (division by zero, missing variables)."""


class LinearAlgebraError(ApLieError):
    """Inconsistent or singular exact linear-algebra input."""


class NotInSpanError(LinearAlgebraError):
    """A vector expected to lie in a computed span does not."""


class DecompositionError(ApLieError):
    """Root/weight space decomposition failed (non-rational or non-semisimple action)."""


class UndecidedError(ApLieError):
    """A solver or Groebner budget was exhausted before reaching a verdict.

    Carries the residual state so callers can report what was left open
    instead of silently truncating.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class FrameError(ApLieError):
    """An embedded model-algebra frame failed verification."""


class SchemaError(ApLieError):
    """Malformed JSON payload for one of the documented schemas."""
