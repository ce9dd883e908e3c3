"""Error types shared across the package."""


class ContractViolation(ValueError):
    """An argument violates a documented precondition."""


class DomainError(ValueError):
    """A numeric argument lies outside the mathematical domain of the operation."""


class TruncationError(RuntimeError):
    """A truncated series could not reach the requested accuracy within its term cap."""
