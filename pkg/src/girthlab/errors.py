"""Exception types shared across the package."""


class GirthLabError(Exception):
    """Base class for all girthlab errors."""


class Graph6Error(GirthLabError, ValueError):
    """Malformed graph6/sparse6 input.

    `offset` is the byte position within the line at which the problem was
    detected (0-based, after stripping the optional format header).
    """

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class CaseMismatch(GirthLabError):
    """The (root, vertex) pair does not match the requested audit case."""


class PropertyViolated(GirthLabError):
    """A second-stage audit was requested at a root where the common-neighbour
    containment property fails, so the distinguished vertices are ambiguous."""


class NotEligible(GirthLabError):
    """Input graph fails an audit precondition (regularity, girth, ...)."""


class InternalInconsistency(GirthLabError):
    """A quantity that must hold for every real graph failed: engine bug."""


class TheoremContradiction(InternalInconsistency):
    """A computed result lands in a parameter range excluded by theorem."""
