"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class DeskScaleError(ValueError):
    """A desk-scale guard was exceeded (alphabet size or enumeration budget)."""


class RegimeMismatchError(ValueError):
    """A closed-form regime formula was applied outside its regime."""
