"""Exception types shared across the package."""


class SeveriLatticeError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SeveriLatticeError, ValueError):
    """An argument violates a documented precondition (invalid input)."""


class InvariantViolation(SeveriLatticeError, RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
