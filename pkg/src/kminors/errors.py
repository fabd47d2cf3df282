"""Exception types raised by the library."""


class GraphInputError(ValueError):
    """Malformed graph data or an argument that does not fit the graph."""


class PreconditionError(ValueError):
    """An operation was called outside its documented precondition."""


class StructuralError(ValueError):
    """A certificate refers to vertices that the graph does not have."""


class GuardExceeded(RuntimeError):
    """Instance is larger than an exhaustive routine is willing to handle."""


class LemmaViolation(AssertionError):
    """The exhaustive game search failed on some triangle multiset.

    This would mean a counterexample to the triangle-path lemma, so it is
    never expected to fire.
    """

    def __init__(self, message, triangles=None):
        super().__init__(message)
        self.triangles = triangles
