"""Exception types shared across the package."""


class NhadmError(Exception):
    """Base class for all package-specific errors."""


class DegenerateEigensystem(NhadmError):
    """Raised when an operation needs a non-defective eigensystem but the
    two bands coalesce (h.h ~ 0) at the requested momentum."""


class SingularPoint(NhadmError):
    """Raised when a curvature/connection formula is evaluated at a momentum
    where its denominator vanishes."""


class BranchJump(NhadmError):
    """Raised by the plaquette curvature estimator when a single link overlap
    rotates by more than pi/2, i.e. the plaquette is too coarse to track the
    complex logarithm reliably."""


class NonConvergent(NhadmError):
    """Raised when adaptive integration cannot reach its tolerance near a
    band-degeneracy even at the maximum subdivision depth."""


class PreconditionViolation(NhadmError):
    """Raised when a special-case formula is called outside its domain."""
