"""Exception types shared across the package."""


class SpinfoldError(Exception):
    """Base class for every error raised by spinfold."""


class DomainError(SpinfoldError, ValueError):
    """An argument lies outside the domain of the operation."""


class ResourceError(SpinfoldError):
    """The requested Hilbert space exceeds the desk-scale dimension cap."""


class BranchError(SpinfoldError):
    """A phase cannot be tracked because the overlap came too close to zero."""

    def __init__(self, message, sample=None):
        super().__init__(message)
        self.sample = sample


class ConvergenceError(SpinfoldError):
    """A numerical limit or quadrature failed its convergence check."""


class ConsistencyError(SpinfoldError):
    """A numerical identity that must hold up to rounding was violated."""
