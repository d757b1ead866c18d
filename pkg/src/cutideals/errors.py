"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed input file or argument."""


class BudgetExceeded(RuntimeError):
    """A configured size, degree, pair or time limit was hit.

    ``partial`` optionally carries whatever state existed when the limit hit,
    so callers can report it without mistaking it for a finished result.
    """

    def __init__(self, message, partial=None, reason=None):
        super().__init__(message)
        self.partial = partial
        self.reason = reason
