"""Exception hierarchy shared across the package."""


class LDataError(Exception):
    """Base class for all errors raised by ldata."""


class PoleError(LDataError, ValueError):
    """Evaluation requested at a pole of the gamma function."""


class DomainError(LDataError, ValueError):
    """Argument outside the validity region of a numerical scheme."""


class SupportError(LDataError, ValueError):
    """Test-function support window exits the allowed interval."""


class StripError(LDataError, ValueError):
    """Transform evaluated outside the configured horizontal strip."""


class QuadratureError(LDataError, RuntimeError):
    """Adaptive integration failed to converge within its budget."""


class NormalizationError(LDataError, ValueError):
    """Dirichlet-series coefficient stream is not normalized (a(1) != 1)."""


class NonPrimitiveCharacterError(LDataError, ValueError):
    """A primitive Dirichlet character was required."""


class ZeroTableError(LDataError, ValueError):
    """Zero-table text could not be parsed.

    Carries the 1-based line number of the offending row when known.
    """

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class CoverageError(LDataError, ValueError):
    """Zero-data coverage is absent, exceeded, or incompatible."""


class ResonanceError(LDataError, ZeroDivisionError):
    """delta_shift evaluated at the resonant point d*alpha = 2."""


class FitError(LDataError, RuntimeError):
    """Least-squares template fit is ill-conditioned or rank deficient."""


class SpecDocumentError(LDataError, ValueError):
    """Datum specification document is malformed."""
