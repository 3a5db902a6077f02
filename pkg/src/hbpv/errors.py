"""Exception types shared across the package."""


class HbpvError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HbpvError):
    """An argument lies outside the domain of validity of an operation."""


class PoleError(DomainError):
    """Evaluation requested at (or within 1e-12 of) a pole."""


class RegionError(DomainError):
    """Evaluation point lies outside the series convergence region."""


class NonConvergenceError(HbpvError):
    """An adaptive scheme hit its depth/shell cap before reaching tolerance."""
