"""Exception types shared across the package."""


class AssortshiftError(Exception):
    """Base class for all package errors."""


class SelfLoopError(AssortshiftError):
    def __init__(self, node, line=None):
        self.node = node
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"self-loop at node {node}{where}")


class DuplicateEdgeError(AssortshiftError):
    def __init__(self, u, v, line=None):
        self.edge = (u, v)
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"duplicate edge ({u}, {v}){where}")


class MissingEdgeError(AssortshiftError):
    def __init__(self, u, v):
        self.edge = (u, v)
        super().__init__(f"edge ({u}, {v}) not present")


class EmptyGraphError(AssortshiftError):
    """Raised when an operation needs at least one edge."""


class DegenerateDegreesError(AssortshiftError):
    """Assortativity denominator is zero: every edge joins equal-degree
    endpoints (e.g. a regular graph), so the coefficient is undefined."""


class InfeasibleRewiringError(AssortshiftError):
    """A rewiring move can no longer be applied to the current graph."""


class ParseError(AssortshiftError):
    def __init__(self, message, line=None):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")


class BadParametersError(AssortshiftError):
    """Generator or CLI parameters are inconsistent."""


class TooLargeError(AssortshiftError):
    """Brute-force search space exceeds the configured guard."""
