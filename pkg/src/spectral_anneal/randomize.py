"""Degree-preserving randomization by double edge switches.

A switch picks two edges ``(a, b)`` and ``(c, e)`` (stored with ``a < b``,
``c < e``) and rewires them to ``(a, e)`` and ``(c, b)``. The move is kept
only if the result is still a simple d-regular graph.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import UnsupportedLength
from .graph import RegularGraph, edges, generate_regular_graph

__all__ = [
    "SwitchOutcome",
    "switch_edges",
    "random_regular_graph",
    "n_switch_neighbor",
    "count_cycles",
]


@dataclass(frozen=True)
class SwitchOutcome:
    graph: RegularGraph
    accepted: bool


def _switch_inplace(adj: np.ndarray, rng: np.random.Generator) -> bool:
    """Attempt one switch on a writable matrix; return True if it changed."""
    el = edges(adj)
    i, j = rng.choice(len(el), size=2, replace=False)
    a, b = el[i]
    c, e = el[j]
    # orient the second edge at random so both rewirings are reachable;
    # without this the chain is not symmetric and undersamples triangles
    if rng.integers(2):
        c, e = e, c
    # (a, e) or (c, b) would be a loop
    if a == e or c == b:
        return False
    # shared endpoint a == c or b == e rewires onto the same two edges
    if a == c or b == e:
        return False
    # a crossed edge already present would collapse into a multi-edge
    if adj[a, e] or adj[c, b]:
        return False
    adj[a, b] = adj[b, a] = 0
    adj[c, e] = adj[e, c] = 0
    adj[a, e] = adj[e, a] = 1
    adj[c, b] = adj[b, c] = 1
    return True


def switch_edges(graph: RegularGraph, rng) -> SwitchOutcome:
    """One rejected-double-edge-switch attempt.

    Two distinct edges ``(a, b)`` and ``(c, e)`` are drawn uniformly without
    replacement from :func:`~spectral_anneal.graph.edges`, and the second is
    reversed with probability 1/2, which is the same as drawing both from the
    nonzero entries of the matrix. They are rewired to ``(a, e)`` and
    ``(c, b)``. A rejected attempt returns the input graph object itself.
    """
    rng = np.random.default_rng(rng)
    if graph.n_edges < 2:
        return SwitchOutcome(graph, False)
    adj = graph.adj.copy()
    if _switch_inplace(adj, rng):
        return SwitchOutcome(RegularGraph(adj, graph.d), True)
    return SwitchOutcome(graph, False)


def n_switch_neighbor(graph: RegularGraph, width: int, rng) -> RegularGraph:
    """Apply ``width`` successive switch attempts and return the final graph."""
    if width < 1:
        raise ValueError("width must be at least 1")
    rng = np.random.default_rng(rng)
    if graph.n_edges < 2:
        return graph
    adj = graph.adj.copy()
    changed = False
    for _ in range(width):
        changed |= _switch_inplace(adj, rng)
    return RegularGraph(adj, graph.d) if changed else graph


def random_regular_graph(n: int, d: int, switches: int, rng) -> tuple[RegularGraph, int]:
    """Circulant construction followed by ``switches`` switch attempts.

    Returns
    -------
    graph : RegularGraph
    accepted : int
        How many of the attempts changed the graph.
    """
    if switches < 0:
        raise ValueError("switches must be non-negative")
    graph = generate_regular_graph(n, d)
    rng = np.random.default_rng(rng)
    if switches == 0 or graph.n_edges < 2:
        return graph, 0
    adj = graph.adj.copy()
    accepted = 0
    for _ in range(switches):
        accepted += _switch_inplace(adj, rng)
    return RegularGraph(adj, d), accepted


def count_cycles(graph: RegularGraph, k: int) -> int:
    """Number of simple cycles of length ``k`` (3 <= k <= 6).

    Triangles come from ``trace(A^3) / 6``. Longer cycles are enumerated as
    paths rooted at the cycle's smallest vertex; each cycle is then seen
    once per orientation, hence the final halving.
    """
    if not 3 <= k <= 6:
        raise UnsupportedLength(f"cycle length must be in 3..6, got {k}")
    adj = graph.adj
    if k == 3:
        a = adj.astype(np.int64)
        return int(np.trace(a @ a @ a)) // 6
    nbrs = [np.flatnonzero(row).tolist() for row in adj]
    total = 0
    for root in range(graph.n):
        # path holds vertices > root after the root itself
        stack = [(root, (root,))]
        while stack:
            v, path = stack.pop()
            if len(path) == k:
                if adj[v, root]:
                    total += 1
                continue
            for w in nbrs[v]:
                if w > root and w not in path:
                    stack.append((w, path + (w,)))
    return total // 2

