class CapExceeded(ValueError):
    """The input is larger than the configured size cap for an exact computation."""


class BudgetExceeded(RuntimeError):
    """A brute-force enumeration would exceed its state budget."""


class InconsistencyError(AssertionError):
    """Two independent routes to the same verdict disagreed."""
