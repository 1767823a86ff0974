"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside its documented domain."""


class HeadroomError(ValueError):
    """The requested entanglement gain exceeds what the acceptor can absorb."""


class BracketError(RuntimeError):
    """A root bracket does not enclose a sign change."""


class SingularPointError(ValueError):
    """A closed-form derivative was requested at a singular point."""


class DegenerateDilutionError(ValueError):
    """Copy accounting is undefined when the diluted state is a product state."""
