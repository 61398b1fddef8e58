"""Exception types shared across the package."""

__all__ = [
    "CycleDualityError",
    "GraphFormatError",
    "BudgetExceededError",
    "IntegralityError",
]


class CycleDualityError(Exception):
    """Base class for all package-specific errors."""


class GraphFormatError(CycleDualityError):
    """Raised for malformed graph input (JSON or constructor arguments)."""


class BudgetExceededError(CycleDualityError):
    """Raised when an enumeration exceeds its configured budget.

    Budgets abort loudly; results are never silently truncated.
    """

    def __init__(self, kind: str, limit: int):
        super().__init__(f"{kind} budget exceeded (limit {limit})")
        self.kind = kind
        self.limit = limit


class IntegralityError(CycleDualityError):
    """Raised when an LP route fails to deliver the integral optimum
    the construction needs.

    Directed inputs never reach this; general signed graphs can, when
    the relaxation has only fractional optima.  It maps to a distinct
    process exit code so callers can tell it apart from bad input.
    """
