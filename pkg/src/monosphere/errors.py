"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the admissible domain of an operation."""


class EmptyTableError(DomainError):
    """A table request matched no admissible rows."""


class NumericError(ArithmeticError):
    """An iterative numerical method failed to converge or to bracket."""
