"""Shared fixtures and independent oracles for the test-suite."""
from __future__ import annotations

import itertools
from collections import deque

import networkx as nx
import numpy as np
import pytest

from spectral_anneal import RegularGraph
from spectral_anneal.graph import edges


def complete(n: int) -> RegularGraph:
    return RegularGraph.from_adjacency(np.ones((n, n), dtype=int) - np.eye(n, dtype=int))


def cycle(n: int) -> RegularGraph:
    a = np.zeros((n, n), dtype=int)
    for i in range(n):
        a[i, (i + 1) % n] = a[(i + 1) % n, i] = 1
    return RegularGraph.from_adjacency(a)


def complete_bipartite(k: int) -> RegularGraph:
    a = np.zeros((2 * k, 2 * k), dtype=int)
    a[:k, k:] = 1
    a[k:, :k] = 1
    return RegularGraph.from_adjacency(a)


def disjoint_union(*graphs: RegularGraph) -> RegularGraph:
    n = sum(g.n for g in graphs)
    a = np.zeros((n, n), dtype=int)
    off = 0
    for g in graphs:
        a[off : off + g.n, off : off + g.n] = g.adj
        off += g.n
    return RegularGraph.from_adjacency(a)


def bfs_diameter(adj) -> float:
    """All-pairs BFS in pure Python; ``inf`` if some pair is unreachable."""
    adj = np.asarray(adj)
    n = len(adj)
    nbrs = [np.flatnonzero(r).tolist() for r in adj]
    worst = 0
    for s in range(n):
        dist = {s: 0}
        q = deque([s])
        while q:
            v = q.popleft()
            for w in nbrs[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    q.append(w)
        if len(dist) < n:
            return float("inf")
        worst = max(worst, max(dist.values()))
    return worst


def jacobi_eigenvalues(a, tol=1e-15, max_sweeps=100) -> np.ndarray:
    """Cyclic Jacobi rotations on a small symmetric matrix; ascending eigenvalues."""
    a = np.array(a, dtype=float)
    n = len(a)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2 * a[p, q])
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1)) if theta else 1.0
                c = 1 / np.sqrt(t * t + 1)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
    return np.sort(np.diag(a))


def literal_switch(adj, rng):
    """Full-matrix edge switch: rewrite, then accept iff still d-regular and loop-free.

    The second edge is reversed on a fair coin, as in the library.
    """
    a = np.asarray(adj)
    el = edges(a)
    i, j = rng.choice(len(el), size=2, replace=False)
    e1, e2 = el[i], el[j]
    if rng.integers(2):
        e2 = e2[::-1]
    new1 = (e1[0], e2[1])
    new2 = (e2[0], e1[1])
    b = a.copy()
    for u, v in (e1, e2):
        b[u, v] = b[v, u] = 0
    for u, v in (new1, new2):
        b[u, v] = b[v, u] = 1
    rows = b.sum(axis=1)
    if (rows == rows[0]).all() and rows[0] == a.sum(axis=1)[0] and not np.diagonal(b).any():
        return b
    return a


def labelled_regular_graphs(n: int, d: int):
    """All d-regular graphs on n vertices whose vertex 0 is adjacent to 1..d.

    Every isomorphism class has such a labelling, so the output covers all
    classes (with repeats).
    """
    adj = np.zeros((n, n), dtype=int)
    deg = [0] * n
    for w in range(1, d + 1):
        adj[0, w] = adj[w, 0] = 1
        deg[w] += 1
    deg[0] = d

    def fill(v):
        if v == n:
            yield adj.copy()
            return
        need = d - deg[v]
        cands = [w for w in range(v + 1, n) if deg[w] < d]
        if need < 0 or need > len(cands):
            return
        for chosen in itertools.combinations(cands, need):
            for w in chosen:
                adj[v, w] = adj[w, v] = 1
                deg[w] += 1
            deg[v] += need
            yield from fill(v + 1)
            deg[v] -= need
            for w in chosen:
                adj[v, w] = adj[w, v] = 0
                deg[w] -= 1

    yield from fill(1)


def regular_graph_classes(n: int) -> list[RegularGraph]:
    """One representative per isomorphism class of regular graphs on n vertices, d >= 1."""
    reps = []
    for d in range(1, n):
        if (n * d) % 2:
            continue
        seen: dict[str, list[nx.Graph]] = {}
        for a in labelled_regular_graphs(n, d):
            g = nx.from_numpy_array(a)
            h = nx.weisfeiler_lehman_graph_hash(g)
            bucket = seen.setdefault(h, [])
            if any(nx.is_isomorphic(g, other) for other in bucket):
                continue
            bucket.append(g)
            reps.append(RegularGraph.from_adjacency(a))
    return reps


def assert_graph_invariants(graph: RegularGraph, d: int | None = None) -> None:
    a = graph.adj
    assert np.array_equal(a, a.T)
    assert not np.diagonal(a).any()
    assert set(np.unique(a)) <= {0, 1}
    rows = a.sum(axis=1)
    assert (rows == (graph.d if d is None else d)).all()
    assert len(edges(graph)) == graph.n * graph.d // 2


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def c6():
    return cycle(6)


def assert_strict_bound(graph: RegularGraph) -> None:
    """lambda2 never falls below the diameter bound (when that bound exists)."""
    from spectral_anneal import diameter, lambda2, strict_lower_bound

    if graph.d < 2:
        return
    bound = strict_lower_bound(graph.d, diameter(graph))
    if bound is not None:
        assert lambda2(graph) >= bound - 1e-9
