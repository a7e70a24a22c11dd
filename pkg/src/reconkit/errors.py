"""Exception hierarchy shared across the package."""


class ReconkitError(Exception):
    """Base class for all reconkit errors."""


class Graph6ParseError(ReconkitError):
    """Malformed graph6 input; `offset` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class DomainError(ReconkitError):
    """Input outside an operation's domain (edgeless graph, bad vertex, size guard)."""


class InvalidMatrixError(ReconkitError):
    """The given incidence matrix or poset cannot belong to any graph."""


class InconsistentDeckError(ReconkitError):
    """A deck (vertex deck or polynomial deck) violates a counting identity."""


class NotReconstructibleError(ReconkitError):
    """The requested invariant is not determined by the given data."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class ConsistencyError(ReconkitError):
    """An internal cross-check failed; indicates a genuine counterexample or a bug."""
