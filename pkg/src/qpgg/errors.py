"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside its mathematical domain."""


class DegenerateRegimeError(DomainError):
    """The transfer-matrix spectrum collapses (single-eigenvalue regime)."""
