"""Exception hierarchy shared by every module."""


class ColoringError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(ColoringError, ValueError):
    """Input object is malformed (bad coloring, bad embedding, disconnected graph ...)."""


class InvalidParameter(ColoringError, ValueError):
    """A numeric parameter lies outside the operation's domain."""


class ResourceLimit(ColoringError, RuntimeError):
    """The exact solver exceeded its node budget before reaching a verdict."""

    def __init__(self, nodes: int):
        super().__init__(f"search node limit exceeded after {nodes} nodes")
        self.nodes = nodes


class InvariantViolation(ColoringError, RuntimeError):
    """An internal guarantee failed; points at an invalid partition or embedding."""


class ParseError(InvalidInput):
    """Positional parse error for the text graph/coloring formats."""

    kind = "parse"

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class MalformedHeader(ParseError):
    kind = "malformed-header"


class DuplicateEdge(ParseError):
    kind = "duplicate-edge"


class SelfLoop(ParseError):
    kind = "self-loop"


class IdOutOfRange(ParseError):
    kind = "id-out-of-range"


class BadEmbedding(ParseError):
    kind = "bad-embedding"
