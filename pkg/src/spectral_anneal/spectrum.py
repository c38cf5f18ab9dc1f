"""Normalized adjacency spectra and the second-eigenvalue objective."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ConvergenceFailure
from .graph import RegularGraph

__all__ = ["SpectrumReport", "normalized_spectrum", "lambda2", "eigen_histogram"]


@dataclass(frozen=True)
class SpectrumReport:
    """Adjacency eigenvalues divided by the degree, sorted descending.

    Attributes
    ----------
    eigs : ndarray, shape (n,)
    lambda2 : float
        Largest absolute value among ``eigs[1:]``, i.e. after dropping one
        copy of the Perron eigenvalue 1. Bipartite graphs give 1.
    degree : int
    n : int
    """

    eigs: np.ndarray
    lambda2: float
    degree: int
    n: int


def _eigvalsh(adj: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.eigvalsh(adj.astype(np.float64))
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure on symmetric input
        raise ConvergenceFailure(str(exc)) from exc


def _second(eigs_desc: np.ndarray) -> float:
    if eigs_desc.size < 2:
        return 0.0
    return float(np.abs(eigs_desc[1:]).max())


def normalized_spectrum(graph: RegularGraph) -> SpectrumReport:
    eigs = _eigvalsh(graph.adj)[::-1] / graph.d
    return SpectrumReport(eigs=eigs, lambda2=_second(eigs), degree=graph.d, n=graph.n)


def lambda2(graph: RegularGraph) -> float:
    """Normalized second eigenvalue in absolute value; the annealing objective."""
    eigs = _eigvalsh(graph.adj)
    # ascending order: the Perron value sits last
    return float(max(eigs[-2], -eigs[0])) / graph.d if eigs.size > 1 else 0.0


def eigen_histogram(graph: RegularGraph, bins: int) -> list[tuple[float, int]]:
    """Counts of normalized eigenvalues over ``bins`` equal bins on [-1, 1].

    Bins are half-open ``[lo, hi)`` except the last, which includes 1.
    Returns ``(lower_edge, count)`` pairs.
    """
    if bins < 1:
        raise ValueError("bins must be at least 1")
    eigs = normalized_spectrum(graph).eigs
    # round away solver noise so exact values such as 1 or -1/3 bin stably
    eigs = np.clip(np.round(eigs, 12), -1.0, 1.0)
    counts, bin_edges = np.histogram(eigs, bins=bins, range=(-1.0, 1.0))
    return [(float(lo), int(c)) for lo, c in zip(bin_edges[:-1], counts)]
