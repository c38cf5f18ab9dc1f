"""Dense adjacency representation of simple regular graphs.

Vertices are labelled ``0 .. n-1``. Graphs are immutable: the adjacency
array is flagged read-only on construction, so a :class:`RegularGraph` can
be shared freely between threads and annealing chains.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .exceptions import DegreeTooLarge, MalformedGraph, ParityViolation

__all__ = [
    "RegularGraph",
    "check_parity",
    "generate_regular_graph",
    "edges",
    "is_regular",
    "has_loops",
    "diameter",
    "diameter_lower_bound",
    "check_adjacency",
]

ADJ_DTYPE = np.int8


def check_parity(n: int, d: int) -> None:
    """Raise unless a simple d-regular graph on n vertices can exist.

    Raises
    ------
    DegreeTooLarge
        If ``d >= n`` (or either argument is not positive).
    ParityViolation
        If ``n * d`` is odd, since the degree sum ``n * d`` equals ``2|E|``.
    """
    if n < 1 or d < 1:
        raise DegreeTooLarge(f"need n > d >= 1, got n={n}, d={d}")
    if d >= n:
        raise DegreeTooLarge(f"degree {d} must be smaller than vertex count {n}")
    if (n * d) % 2:
        raise ParityViolation(
            f"n={n} and d={d} are both odd: the degree sum n*d = 2|E| must be even"
        )


def check_adjacency(adj) -> tuple[np.ndarray, int]:
    """Validate a square 0/1 adjacency matrix of a simple regular graph.

    Returns the matrix as a contiguous ``int8`` array together with its degree.
    Raises :class:`MalformedGraph` describing the first violated invariant.
    """
    a = np.asarray(adj)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise MalformedGraph(f"adjacency must be a non-empty square matrix, got shape {a.shape}")
    if not np.isin(a, (0, 1)).all():
        raise MalformedGraph("adjacency entries must be 0 or 1")
    a = np.ascontiguousarray(a, dtype=ADJ_DTYPE)
    if not np.array_equal(a, a.T):
        raise MalformedGraph("adjacency is not symmetric")
    if has_loops(a):
        raise MalformedGraph("adjacency has a nonzero diagonal entry")
    regular, d = is_regular(a)
    if not regular:
        raise MalformedGraph("row sums differ; graph is not regular")
    if d < 1:
        raise MalformedGraph("graph has no edges")
    return a, d


@dataclass(frozen=True, eq=False)
class RegularGraph:
    """A simple undirected d-regular graph held as a dense adjacency matrix.

    Build instances with :meth:`from_adjacency` (validating) or the
    constructors in this package. The direct constructor trusts its input.
    """

    adj: np.ndarray
    d: int

    def __post_init__(self):
        self.adj.flags.writeable = False

    @classmethod
    def from_adjacency(cls, adj) -> RegularGraph:
        a, d = check_adjacency(adj)
        return cls(a.copy(), d)

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    @property
    def n_edges(self) -> int:
        return self.n * self.d // 2

    def __eq__(self, other):
        if not isinstance(other, RegularGraph):
            return NotImplemented
        return self.d == other.d and np.array_equal(self.adj, other.adj)

    __hash__ = None

    def __repr__(self):
        return f"RegularGraph(n={self.n}, d={self.d})"


def generate_regular_graph(n: int, d: int) -> RegularGraph:
    """Deterministic circulant d-regular graph on n vertices.

    Vertex ``i`` is joined to ``i +/- s (mod n)`` for every offset
    ``s = 1 .. d // 2``; for odd ``d`` (which forces even ``n``) each vertex is
    also joined to its diametric opposite ``i + n/2``.

    Examples
    --------
    >>> generate_regular_graph(4, 3).adj.sum(axis=1).tolist()
    [3, 3, 3, 3]
    """
    check_parity(n, d)
    offsets = list(range(1, d // 2 + 1))
    if d % 2:
        offsets.append(n // 2)
    idx = np.arange(n)
    adj = np.zeros((n, n), dtype=ADJ_DTYPE)
    for s in offsets:
        adj[idx, (idx + s) % n] = 1
        adj[(idx + s) % n, idx] = 1
    return RegularGraph(adj, d)


def edges(graph: RegularGraph) -> np.ndarray:
    """Edge list as an ``(n*d/2, 2)`` array of pairs ``u < v`` in lexicographic order."""
    adj = graph.adj if isinstance(graph, RegularGraph) else np.asarray(graph)
    u, v = np.nonzero(adj)
    keep = u < v
    return np.column_stack((u[keep], v[keep]))


def is_regular(adj) -> tuple[bool, int | None]:
    """Return ``(True, degree)`` when all row sums agree, else ``(False, None)``."""
    a = adj.adj if isinstance(adj, RegularGraph) else np.asarray(adj)
    rows = a.sum(axis=1)
    if rows.size and (rows == rows[0]).all():
        return True, int(rows[0])
    return False, None


def has_loops(adj) -> bool:
    a = adj.adj if isinstance(adj, RegularGraph) else np.asarray(adj)
    return bool(np.diagonal(a).any())


def diameter(graph: RegularGraph) -> int | float:
    """Largest shortest-path distance; ``math.inf`` for a disconnected graph."""
    dist = shortest_path(csr_matrix(graph.adj), method="D", unweighted=True, directed=False)
    m = dist.max()
    return math.inf if np.isinf(m) else int(m)


def diameter_lower_bound(n: int, d: int) -> int:
    """Tree-counting estimate ``2 * ceil(log_d n)`` of the diameter.

    This is the radius argument for a d-ary tree. It is not a valid lower
    bound for arbitrary graphs (``K_4`` has diameter 1 while this returns 4)
    and is never substituted for :func:`diameter`.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    k = math.log(n) / math.log(d)
    nearest = round(k)
    if abs(k - nearest) < 1e-12:
        k = nearest
    return 2 * math.ceil(k)
