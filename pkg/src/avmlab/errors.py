"""Exception hierarchy shared by every avmlab module."""


class AvmlabError(Exception):
    """Base class for all library errors."""


class GraphError(AvmlabError, ValueError):
    """A graph (or an input that should describe one) is malformed."""


class FormatError(GraphError):
    """Text input could not be parsed.

    ``line`` is the 1-based line number of the offending line when known.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotConnected(GraphError):
    pass


class EdgeNotInGraph(GraphError):
    pass


class NotAMatching(GraphError):
    pass


class EdgelessGraph(GraphError):
    pass


class TooManyEdges(GraphError):
    pass


class NotBicyclic(GraphError):
    pass


class InvalidCore(GraphError):
    pass


class InfeasibleSpec(AvmlabError, ValueError):
    pass


class OutOfRange(AvmlabError, ValueError):
    pass


class CounterOverflow(AvmlabError, OverflowError):
    """A 64-bit matching counter would have wrapped."""
