"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class CapacityError(RuntimeError):
    """A computation would exceed the configured enumeration limit."""


class PreconditionError(ValueError):
    """An input code does not satisfy the hypotheses of a construction."""


class InvariantViolation(AssertionError):
    """A construction produced output that breaks a proven postcondition.

    Raising this always indicates a bug in the implementation.
    """
