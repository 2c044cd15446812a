class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class HierarchyError(DomainError):
    """Payoff parameters violate 0 < 2d < v < i."""
