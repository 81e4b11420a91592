"""Exception types shared by every layer of the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ConsistencyError(RuntimeError):
    """A result contradicts a proven identity.

    Raised only when two independent computations disagree or a structural
    postcondition fails; it always indicates a bug, never bad input.
    """


class NoNonsingularColoring(DomainError):
    """The triangulation admits no nonsingular 4-coloring."""
