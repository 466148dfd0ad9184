"""Exception types shared across the package."""


class InvalidEdgeError(ValueError):
    """Edge endpoints are out of range or form a loop."""


class InfeasibleOrderError(ValueError):
    """Requested order/parameters cannot produce the requested structure."""


class SizeLimitError(ValueError):
    """Input exceeds a documented size cap (vertex cap, enumeration cap)."""


class UndefinedTotalDominationError(ValueError):
    """Total domination is undefined: the graph has an isolated vertex."""


class GraphParseError(ValueError):
    """Malformed graph6 record or edge-list text.

    ``position`` is a 0-based byte offset for graph6 records and a 1-based
    line number for edge-list text.
    """

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class MixedOrderError(ValueError):
    """A graph stream contained graphs of differing vertex counts."""
