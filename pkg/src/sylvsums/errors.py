"""Exception hierarchy shared by every module."""


class SylvError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SylvError, ValueError):
    """An index or argument lies outside the range where a quantity is defined."""


class NotApplicableError(DomainError):
    """The requested construction does not exist for this ``d`` (the gap ``m < d < n-1``)."""


class DuplicateRootError(DomainError):
    """A root list contains the same value twice."""


class NonMonicError(DomainError):
    """A polynomial given by coefficients does not have leading coefficient 1."""


class ShapeError(SylvError, ValueError):
    """Matrix dimensions do not fit the requested operation."""


class CorruptInputError(SylvError):
    """An internal invariant was violated by the input (e.g. a zero denominator)."""
