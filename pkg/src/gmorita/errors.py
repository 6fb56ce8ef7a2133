"""Exception types shared across the package."""

__all__ = ["GmoritaError", "ValidationError", "InternalInconsistencyError"]


class GmoritaError(Exception):
    """Base class for all package errors."""


class ValidationError(GmoritaError):
    """An input failed a mathematical precondition or invariant."""


class InternalInconsistencyError(GmoritaError):
    """A step the theory guarantees has failed, so the inputs are inconsistent."""
