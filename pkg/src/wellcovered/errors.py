"""Shared exception types."""


class BudgetExceededError(Exception):
    """A requested construction exceeds a configured resource budget.

    Raised before any large allocation happens; the message carries the
    exact size estimate that tripped the budget.
    """
