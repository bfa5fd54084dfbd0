"""Exception hierarchy shared by the package."""


class CtrlsetError(Exception):
    """Base class for all errors raised by ctrlset."""


class GraphError(CtrlsetError, ValueError):
    """Invalid graph construction input."""


class ParseError(CtrlsetError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MatchingError(CtrlsetError, ValueError):
    """A matching does not fit the graph it is checked against."""


class InvariantViolation(CtrlsetError, RuntimeError):
    """An internal consistency check failed (a bug, not bad input)."""


class OracleLimitError(CtrlsetError):
    """The exhaustive oracle was asked to handle too large an instance."""


class GeneratorError(CtrlsetError, ValueError):
    pass


class MethodDisagreement(CtrlsetError, RuntimeError):
    """Two methods returned different possible-input sets for one graph."""
