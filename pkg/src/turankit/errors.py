"""Exception types shared across the toolkit."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """A Pochhammer factor in a denominator vanishes within the used range."""


class TermCapError(RuntimeError):
    """A series evaluation hit its term cap before meeting the tolerance."""
