"""Exception hierarchy for spectral_anneal."""


class GraphConfigError(ValueError):
    """Bad (n, d) or optimizer configuration."""


class ParityViolation(GraphConfigError):
    """n and d are both odd, so no d-regular graph on n vertices exists."""


class DegreeTooLarge(GraphConfigError):
    """The degree is not strictly smaller than the vertex count."""


class InvalidCooling(GraphConfigError):
    """Cooling rates must lie strictly inside (0, 1)."""


class MalformedGraph(ValueError):
    """Adjacency data is not a simple regular graph."""


class UnsupportedLength(ValueError):
    """Cycle length outside the supported range."""


class DegenerateBase(ValueError):
    """A logarithm base of sqrt(d - 1) <= 1 was requested."""


class ConvergenceFailure(RuntimeError):
    """The symmetric eigensolver did not converge."""
