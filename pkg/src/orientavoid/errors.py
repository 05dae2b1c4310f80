"""Exception hierarchy for the orientavoid package."""


class OrientavoidError(Exception):
    """Base class for all package-specific errors."""


class LoopEdgeError(OrientavoidError):
    """An edge joins a vertex to itself; graphs here are loopless."""


class BadVertexIdError(OrientavoidError):
    """A vertex id lies outside 0..n-1."""


class NotADirectedPathError(OrientavoidError):
    """A claimed directed path is absent or misdirected in the orientation."""


class OutOfRangeForbiddenError(OrientavoidError):
    """A forbidden value lies outside 0..d(v)."""


class BudgetExceededError(OrientavoidError):
    """The instance has more edges than the enumeration budget allows."""


class DegreeTooHighError(OrientavoidError):
    """A subgraph handed to the max-degree-two orienter has a degree-3+ vertex."""


class NotRegularError(OrientavoidError):
    """The graph is not regular of the required degree."""


class DegreeTooSmallError(OrientavoidError):
    """The regular-graph solver needs degree at least 5."""


class MalformedBoundsError(OrientavoidError):
    """Out-degree bounds violate 0 <= lower <= upper <= degree."""


class HypothesisViolatedError(OrientavoidError):
    """The instance fails the precondition a solver relies on."""


class PreconditionViolatedError(OrientavoidError):
    """A lower-level operation was called outside its stated precondition."""


class StaleLassoError(OrientavoidError):
    """A lasso's recorded edge directions no longer match the orientation."""


class BoundViolatedError(OrientavoidError):
    """The forbidden lists are too large for a half-degree-bounded routine."""


class NonEmptyListAtLowDegreeError(OrientavoidError):
    """A degree-<=2 vertex carries a nonempty forbidden list."""


class NotTwoDegenerateError(OrientavoidError):
    """Peeling found a subgraph with minimum degree 3 or more."""


class BadDecompositionError(OrientavoidError):
    """The supplied edge bipartition fails a decomposition-solver check."""


class SubSolverFailedError(OrientavoidError):
    """The pluggable bipartite sub-solver returned no orientation."""


class ParityError(OrientavoidError):
    """Generator parameters admit no loopless pairing (e.g. odd stub count)."""


class ParseError(OrientavoidError):
    """An instance file is malformed; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InternalError(OrientavoidError):
    """A guaranteed step failed; indicates a bug, not bad input."""
