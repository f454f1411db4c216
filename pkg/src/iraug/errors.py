"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Raised when an argument violates a documented precondition."""


class UnsupportedMethodError(InvalidInputError):
    """Raised when an operation does not support the requested method."""


class BudgetExceededError(RuntimeError):
    """Raised when a search-tree enumeration exceeds its node budget."""


class InternalError(RuntimeError):
    """Raised when an internal invariant that callers cannot violate fails."""
