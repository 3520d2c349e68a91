"""Exception hierarchy shared by the toolkit.

Everything a caller can trigger with bad input derives from ``CopwinError`` so
the command line can map it to exit status 1.
"""


class CopwinError(Exception):
    pass


class OrdinalSyntaxError(CopwinError, ValueError):
    """Malformed ordinal text; ``position`` is the 0-based offset of the bad token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class OrdinalNormalizationError(CopwinError, ValueError):
    """Ordinal text that parses but is not in Cantor normal form."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVertexError(CopwinError, KeyError):
    def __init__(self, vertex):
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return f"unknown vertex {self.vertex!r}"


class DisconnectedGraphError(CopwinError, ValueError):
    pass


class GraphFormatError(CopwinError, ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class GeneratorSpecError(CopwinError, ValueError):
    pass


class NotCopWinError(CopwinError, ValueError):
    pass
