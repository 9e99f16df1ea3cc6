"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph construction or malformed input."""


class DisconnectedGraphError(GraphError):
    """A distance-based operation received a disconnected graph."""


class GuardrailError(RuntimeError):
    """An exact search was refused because the instance exceeds its size cap."""


class TruncationError(RuntimeError):
    """Basis enumeration hit its cap where an exact answer was required."""
