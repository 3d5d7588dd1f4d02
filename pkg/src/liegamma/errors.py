"""Exception hierarchy for liegamma.

Every error raised deliberately by the library derives from ``LieGammaError``
so callers can catch library failures without masking programming errors.
"""


class LieGammaError(Exception):
    """Base class for all library errors."""


class AdjointGroupNotSupported(LieGammaError, ValueError):
    """An adjoint representation id was given where a base group is required."""


class SingularMatrix(LieGammaError, ArithmeticError):
    """Matrix inversion failed or the condition estimate was too large."""


class UnknownFamily(LieGammaError, KeyError):
    """The requested scalar coefficient family does not exist."""


class IndexOutOfRange(LieGammaError, IndexError):
    """The coefficient index is outside the range defined for its family."""


class NotImplementedClosedForm(LieGammaError, NotImplementedError):
    """No closed form is available; use the quadrature path instead."""


class UnsupportedAlgebra(LieGammaError, ValueError):
    """No minimal polynomial is known for this algebra."""


class SeriesNotConverged(LieGammaError, ArithmeticError):
    """A truncated series hit its term budget before meeting its tolerance."""


class UnknownSuite(LieGammaError, KeyError):
    """The requested check suite id is not registered."""


class BoundExceeded(LieGammaError, OverflowError):
    """An exact-arithmetic routine was asked for arguments beyond its cap."""
