"""Shared exception types."""


class ParseError(ValueError):
    """Malformed input file; the message names the offending line."""


class GraphError(ValueError):
    """Node or dimension mismatch between graph-shaped inputs."""


class ParameterError(ValueError):
    """Out-of-range or inconsistent parameter value."""


class UndefinedModularityError(ValueError):
    """Modularity requested for a graph with zero total edge weight."""
