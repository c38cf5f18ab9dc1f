"""scikit-learn style wrappers.

:class:`CoupledAnnealingSearch` exposes the coupled annealer through
``fit``/``score``/``get_params`` so it can sit in grid searches and pipelines.
:class:`NormalizedSpectrum` turns a stack of adjacency matrices into rows of
sorted normalized eigenvalues.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .bounds import bound_set, classify
from .graph import RegularGraph, diameter
from .mcsa import McsaConfig, coupled_annealing
from .spectrum import lambda2, normalized_spectrum

__all__ = ["check_adjacency_stack", "CoupledAnnealingSearch", "NormalizedSpectrum"]


def check_adjacency_stack(X) -> list[RegularGraph]:
    """Validate one ``(n, n)`` matrix or an ``(k, n, n)`` stack of regular graphs."""
    if isinstance(X, RegularGraph):
        return [X]
    if isinstance(X, (list, tuple)) and X and all(isinstance(g, RegularGraph) for g in X):
        return list(X)
    arr = np.asarray(X)
    if arr.ndim == 2:
        arr = arr[None]
    if arr.ndim != 3:
        raise ValueError(f"expected an adjacency matrix or a stack of them, got shape {arr.shape}")
    return [RegularGraph.from_adjacency(a) for a in arr]


class CoupledAnnealingSearch(BaseEstimator):
    """Search for a d-regular graph on ``n_vertices`` vertices with small lambda2.

    Parameters mirror :class:`~spectral_anneal.mcsa.McsaConfig`. ``fit`` may
    be given an adjacency matrix instead of ``n_vertices``/``degree``; its
    order and degree are then used.

    Attributes
    ----------
    best_graph_ : RegularGraph
    adjacency_ : ndarray of shape (n_vertices, n_vertices)
    best_lambda2_ : float
    run_record_ : RunRecord
    classification_ : Classification
    """

    def __init__(
        self,
        n_vertices=None,
        degree=None,
        chains=5,
        min_cooling=0.90,
        max_cooling=0.99,
        t_min=1e-4,
        trials_per_step=10,
        stop_rule=None,
        swap_rule="unconditional",
        ranking="coldest_best",
        carry="best",
        warmup_switches=None,
        max_steps=None,
        n_jobs=1,
        random_state=None,
    ):
        self.n_vertices = n_vertices
        self.degree = degree
        self.chains = chains
        self.min_cooling = min_cooling
        self.max_cooling = max_cooling
        self.t_min = t_min
        self.trials_per_step = trials_per_step
        self.stop_rule = stop_rule
        self.swap_rule = swap_rule
        self.ranking = ranking
        self.carry = carry
        self.warmup_switches = warmup_switches
        self.max_steps = max_steps
        self.n_jobs = n_jobs
        self.random_state = random_state

    def _config(self, n, d) -> McsaConfig:
        return McsaConfig(
            vertices=n,
            degree=d,
            chains=self.chains,
            min_cooling=self.min_cooling,
            max_cooling=self.max_cooling,
            t_min=self.t_min,
            trials_per_step=self.trials_per_step,
            stop_rule=self.stop_rule,
            swap_rule=self.swap_rule,
            seed=self.random_state,
            warmup_switches=self.warmup_switches,
            ranking=self.ranking,
            carry=self.carry,
            n_jobs=self.n_jobs,
            max_steps=self.max_steps,
        )

    def fit(self, X=None, y=None):
        n, d = self.n_vertices, self.degree
        if X is not None:
            (template,) = check_adjacency_stack(X)
            n, d = template.n, template.d
        if n is None or d is None:
            raise ValueError("set n_vertices and degree, or pass an adjacency matrix")
        graph, lam, record = coupled_annealing(self._config(n, d))
        self.best_graph_ = graph
        self.adjacency_ = np.array(graph.adj)
        self.best_lambda2_ = lam
        self.run_record_ = record
        self.classification_ = classify(lam, bound_set(n, d, diameter(graph)))
        return self

    def score(self, X=None, y=None):
        """Negative lambda2 of ``X`` (or of the fitted graph), so larger is better."""
        if X is None:
            check_is_fitted(self, "best_lambda2_")
            return -self.best_lambda2_
        graphs = check_adjacency_stack(X)
        return -float(np.mean([lambda2(g) for g in graphs]))


class NormalizedSpectrum(TransformerMixin, BaseEstimator):
    """Map adjacency matrices to descending normalized eigenvalues.

    ``transform`` returns an array of shape ``(n_graphs, n)``. All graphs in a
    call must share the vertex count seen in ``fit``.
    """

    def fit(self, X, y=None):
        graphs = check_adjacency_stack(X)
        self.n_vertices_ = graphs[0].n
        return self

    def transform(self, X):
        check_is_fitted(self, "n_vertices_")
        graphs = check_adjacency_stack(X)
        if any(g.n != self.n_vertices_ for g in graphs):
            raise ValueError(f"all graphs must have {self.n_vertices_} vertices")
        return np.vstack([normalized_spectrum(g).eigs for g in graphs])
