"""Exception types shared across the package."""


class YbopsError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(YbopsError):
    """Operands live on incompatible vector spaces."""


class InvalidStructureError(YbopsError):
    """Structure constants violate the algebra/coalgebra axioms."""


class SingularParameterError(YbopsError):
    """Parameter values violate an invertibility hypothesis."""


class NonIntegerExponentError(YbopsError):
    """Exact mode requires integer colours for exponential families."""


class UnknownFamilyError(YbopsError):
    """Requested operator family kind does not exist."""
