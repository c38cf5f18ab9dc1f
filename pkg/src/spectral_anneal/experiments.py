"""Data generators for the switch-progression and cycle-count experiments."""
from __future__ import annotations

import numpy as np

from .graph import generate_regular_graph
from .randomize import count_cycles, random_regular_graph, switch_edges
from .spectrum import lambda2

__all__ = ["switch_trajectory", "fraction_below", "triangle_sample"]


def switch_trajectory(n: int, d: int, count: int, rng) -> np.ndarray:
    """lambda2 of the circulant graph followed by ``count`` successive single switches.

    Entry 0 is the unswitched graph, entry ``i`` the graph after ``i`` attempts.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    rng = np.random.default_rng(rng)
    graph = generate_regular_graph(n, d)
    out = np.empty(count + 1)
    out[0] = lam = lambda2(graph)
    for i in range(1, count + 1):
        step = switch_edges(graph, rng)
        if step.accepted:
            graph, lam = step.graph, lambda2(step.graph)
        out[i] = lam
    return out


def fraction_below(trajectory: np.ndarray, threshold: float) -> float:
    """Share of switched graphs (entries after the first) strictly below ``threshold``.

    With no switches the single constructor value is used.
    """
    vals = trajectory[1:] if len(trajectory) > 1 else trajectory
    return float(np.mean(vals < threshold))


def triangle_sample(n: int, d: int, graphs: int, min_accepted: int, rng) -> np.ndarray:
    """Triangle counts of ``graphs`` independent randomized graphs.

    Each graph keeps receiving switch attempts until at least ``min_accepted``
    of them have been accepted.
    """
    rng = np.random.default_rng(rng)
    counts = np.empty(graphs, dtype=np.int64)
    for g in range(graphs):
        graph, accepted = random_regular_graph(n, d, min_accepted, rng)
        while accepted < min_accepted:
            step = switch_edges(graph, rng)
            graph = step.graph
            accepted += step.accepted
        counts[g] = count_cycles(graph, 3)
    return counts
