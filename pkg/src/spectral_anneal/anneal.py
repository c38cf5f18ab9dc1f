"""Single-chain simulated annealing over regular graphs, minimizing lambda2."""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np

from .graph import RegularGraph
from .randomize import n_switch_neighbor
from .spectrum import lambda2

__all__ = ["AnnealChain", "acceptance_probability", "partial_anneal", "make_chain"]


@dataclass(frozen=True)
class AnnealChain:
    """State of one annealer.

    ``graph`` is the current solution and may be worse than ``best_graph``,
    which is kept separately as the chain's best-ever solution.
    ``step_lambda`` is the lowest lambda2 seen during the most recent
    :func:`partial_anneal` call (``nan`` before the first call).
    """

    graph: RegularGraph
    temperature: float
    cooling_rate: float
    neighbor_width: int
    current_lambda: float
    best_graph: RegularGraph
    best_lambda: float
    step_lambda: float = math.nan


def make_chain(
    graph: RegularGraph, temperature: float = 1.0, cooling_rate: float = 0.95, neighbor_width: int = 1
) -> AnnealChain:
    lam = lambda2(graph)
    return AnnealChain(
        graph=graph,
        temperature=temperature,
        cooling_rate=cooling_rate,
        neighbor_width=neighbor_width,
        current_lambda=lam,
        best_graph=graph,
        best_lambda=lam,
    )


def acceptance_probability(current: float, candidate: float, temperature: float) -> float:
    """Metropolis rule ``min(1, exp((current - candidate) / T))``."""
    if temperature <= 0:
        raise ValueError("temperature must be positive")
    delta = current - candidate
    if delta >= 0:
        return 1.0
    x = delta / temperature
    return math.exp(x) if x > -745.0 else 0.0


def partial_anneal(
    chain: AnnealChain,
    trials: int,
    rng,
    on_candidate: Optional[Callable[[RegularGraph, float], None]] = None,
    carry: str = "best",
) -> AnnealChain:
    """Run ``trials`` proposal/accept iterations, then cool once.

    Each trial proposes ``n_switch_neighbor(graph, neighbor_width)``. An
    improving candidate is always taken; otherwise it is taken with
    :func:`acceptance_probability`. The temperature is multiplied by the
    cooling rate a single time after the loop.

    ``carry`` selects the graph the chain holds afterwards: ``"best"`` keeps
    the lowest-lambda2 graph visited during this call (starting from the
    input graph), so a chain never ends a call worse than it began;
    ``"current"`` keeps wherever the Metropolis walk stopped.

    ``on_candidate`` is called with every proposed graph and its lambda2.
    """
    if trials < 0:
        raise ValueError("trials must be non-negative")
    if carry not in ("best", "current"):
        raise ValueError("carry must be 'best' or 'current'")
    rng = np.random.default_rng(rng)
    graph, lam = chain.graph, chain.current_lambda
    best_graph, best_lam = chain.best_graph, chain.best_lambda
    step_graph, step_lam = graph, lam
    T = chain.temperature
    for _ in range(trials):
        cand = n_switch_neighbor(graph, chain.neighbor_width, rng)
        cand_lam = lam if cand is graph else lambda2(cand)
        if on_candidate is not None:
            on_candidate(cand, cand_lam)
        if cand_lam < step_lam:
            step_graph, step_lam = cand, cand_lam
        if cand_lam < best_lam:
            best_graph, best_lam = cand, cand_lam
        if cand_lam < lam:
            graph, lam = cand, cand_lam
        elif acceptance_probability(lam, cand_lam, T) > rng.random():
            graph, lam = cand, cand_lam
    if carry == "best":
        graph, lam = step_graph, step_lam
    return replace(
        chain,
        graph=graph,
        current_lambda=lam,
        best_graph=best_graph,
        best_lambda=best_lam,
        step_lambda=step_lam,
        temperature=T * chain.cooling_rate,
    )
