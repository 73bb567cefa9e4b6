"""Exception types raised across the package."""


class LDHError(Exception):
    """Base class for all library errors."""


class HypergraphError(LDHError, ValueError):
    """Invalid hypergraph construction input."""


class EmptyEdge(HypergraphError):
    pass


class UncoveredVertex(HypergraphError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} is not covered by any edge")
        self.vertex = vertex


class NotSperner(HypergraphError):
    pass


class NotConnected(HypergraphError):
    pass


class BadVertexId(HypergraphError, IndexError):
    def __init__(self, vertex, n: int):
        super().__init__(f"vertex id {vertex!r} out of range for n={n}")
        self.vertex = vertex


class HypergraphSyntaxError(LDHError, ValueError):
    """Malformed hypergraph text; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class InstanceTooLarge(LDHError):
    pass


class BadFamilyParams(LDHError, ValueError):
    pass


class NoConstructionAvailable(LDHError):
    pass


class ConstructionPreconditionFailed(LDHError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class BadK(LDHError, ValueError):
    pass


class NotAHypertree(LDHError):
    pass


class UnknownTheorem(LDHError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown theorem"


class RangeTooLarge(LDHError):
    pass
