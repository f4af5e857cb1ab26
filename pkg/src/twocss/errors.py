"""Exception hierarchy shared by the solver, oracle and CLI."""


class TwoCSSError(Exception):
    """Base class for every error raised by this package."""


class GraphError(TwoCSSError, ValueError):
    """An instance violates the simple-graph invariants."""


class ParseError(TwoCSSError, ValueError):
    """Base class for edge-list and certificate parse failures."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedLineError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class SelfLoopError(ParseError):
    pass


class VertexRangeError(ParseError):
    pass


class InfeasibleInputError(TwoCSSError):
    """The input graph admits no solution for the requested mode."""


class MisuseError(TwoCSSError, ValueError):
    """A precondition of an operation was violated by the caller."""


class OracleBudgetExceeded(TwoCSSError):
    """The exact solver hit its node budget before proving optimality."""

    def __init__(self, nodes: int, best: int | None):
        self.nodes = nodes
        self.best = best
        super().__init__(f"search budget of {nodes} nodes exceeded (best found: {best})")


class InvariantViolation(TwoCSSError, AssertionError):
    """An internal self-check failed; the result must not be trusted."""
