"""Metropolis coupled simulated annealing (MCSA) over d-regular graphs.

Several annealing chains run side by side. Chain ``i`` (1-based) proposes
neighbours made of ``i`` edge switches. After each round the chain with the
best round score is handed the coldest temperature, and two randomly chosen
chains may exchange their solutions, temperatures and cooling rates.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .anneal import AnnealChain, make_chain, partial_anneal
from .bounds import ramanujan_threshold, weak_optimal_threshold
from .exceptions import GraphConfigError, InvalidCooling
from .graph import RegularGraph, check_parity
from .randomize import random_regular_graph

__all__ = [
    "McsaConfig",
    "StepRecord",
    "RunRecord",
    "parse_stop_rule",
    "chain_rngs",
    "define_coupling",
    "rank_temperatures",
    "perform_one_step",
    "coupled_annealing",
]

StopRule = Union[None, str, float]
STOP_NAMES = ("none", "ramanujan", "weak_optimal")
SWAP_RULES = ("unconditional", "metropolis")
RANKINGS = ("coldest_best", "permute")


def parse_stop_rule(value) -> StopRule:
    """Normalize ``'none' | 'ramanujan' | 'weak_optimal' | <float>``."""
    if value is None:
        return None
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return float(value)
    text = str(value).strip().lower().replace("-", "_")
    if text == "none":
        return None
    if text in STOP_NAMES:
        return text
    try:
        return float(text)
    except ValueError:
        raise GraphConfigError(f"unknown stop rule {value!r}") from None


@dataclass
class McsaConfig:
    """Parameters of a coupled annealing run.

    ``warmup_switches`` defaults to ``3 * n * d / 2`` switch attempts per chain.
    ``ranking='coldest_best'`` hands the coldest temperature to the chain with
    the best round score; ``'permute'`` instead reorders (graph, temperature)
    pairs by score while cooling rates stay in place. ``carry`` is passed to
    :func:`~spectral_anneal.anneal.partial_anneal`.
    """

    vertices: int
    degree: int
    chains: int = 5
    min_cooling: float = 0.90
    max_cooling: float = 0.99
    t_min: float = 1e-4
    trials_per_step: int = 10
    stop_rule: StopRule = None
    swap_rule: str = "unconditional"
    seed: Optional[int] = None
    warmup_switches: Optional[int] = None
    ranking: str = "coldest_best"
    carry: str = "best"
    n_jobs: int = 1
    max_steps: Optional[int] = None

    def __post_init__(self):
        self.stop_rule = parse_stop_rule(self.stop_rule)

    def validate(self) -> None:
        check_parity(self.vertices, self.degree)
        n_edges = self.vertices * self.degree // 2
        if not 1 <= self.chains <= n_edges:
            raise GraphConfigError(f"chains must be in 1..{n_edges}, got {self.chains}")
        if not (0.0 < self.min_cooling <= self.max_cooling < 1.0):
            raise InvalidCooling(
                f"need 0 < min_cooling <= max_cooling < 1, got {self.min_cooling}, {self.max_cooling}"
            )
        if self.t_min <= 0:
            raise GraphConfigError("t_min must be positive")
        if self.trials_per_step < 1:
            raise GraphConfigError("trials_per_step must be at least 1")
        if self.swap_rule not in SWAP_RULES:
            raise GraphConfigError(f"swap_rule must be one of {SWAP_RULES}")
        if self.ranking not in RANKINGS:
            raise GraphConfigError(f"ranking must be one of {RANKINGS}")
        if self.carry not in ("best", "current"):
            raise GraphConfigError("carry must be 'best' or 'current'")
        if self.warmup_switches is not None and self.warmup_switches < 0:
            raise GraphConfigError("warmup_switches must be non-negative")
        if self.n_jobs < 1:
            raise GraphConfigError("n_jobs must be at least 1")

    def cooling_rates(self) -> list[float]:
        """``chains`` rates starting at ``min_cooling`` with spacing ``(max - min) / chains``."""
        step = (self.max_cooling - self.min_cooling) / self.chains
        return [self.min_cooling + i * step for i in range(self.chains)]

    def threshold(self) -> Optional[float]:
        if self.stop_rule is None:
            return None
        if self.stop_rule == "ramanujan":
            return ramanujan_threshold(self.degree)
        if self.stop_rule == "weak_optimal":
            return weak_optimal_threshold(self.degree)
        return float(self.stop_rule)


@dataclass(frozen=True)
class StepRecord:
    step: int
    best_lambda2: float
    coldest_temperature: float
    seconds: float


@dataclass
class RunRecord:
    seed: int
    config: dict
    steps: list[StepRecord] = field(default_factory=list)
    stop_reason: str = ""
    best_lambda2: float = math.nan

    @property
    def total_steps(self) -> int:
        return len(self.steps)

    @property
    def seconds(self) -> float:
        return self.steps[-1].seconds if self.steps else 0.0

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "config": self.config,
            "stop_reason": self.stop_reason,
            "best_lambda2": self.best_lambda2,
            "total_steps": self.total_steps,
            "seconds": self.seconds,
            "steps": [asdict(s) for s in self.steps],
        }

    @classmethod
    def from_dict(cls, data: dict) -> RunRecord:
        return cls(
            seed=data["seed"],
            config=data["config"],
            steps=[StepRecord(**s) for s in data["steps"]],
            stop_reason=data["stop_reason"],
            best_lambda2=data["best_lambda2"],
        )


def chain_rngs(seed: int, chains: int) -> tuple[list[np.random.Generator], np.random.Generator]:
    """Independent per-slot generators plus a master generator for swaps."""
    children = np.random.SeedSequence(seed).spawn(chains + 1)
    return [np.random.default_rng(s) for s in children[:-1]], np.random.default_rng(children[-1])


def define_coupling(config: McsaConfig, rngs: Optional[Sequence[np.random.Generator]] = None) -> list[AnnealChain]:
    """Initial chains: warmed-up random graphs, temperature 1, width ``i`` for slot ``i``."""
    config.validate()
    if rngs is None:
        rngs, _ = chain_rngs(config.seed if config.seed is not None else 0, config.chains)
    n, d = config.vertices, config.degree
    warmup = 3 * (n * d // 2) if config.warmup_switches is None else config.warmup_switches
    chains = []
    for i, rate in enumerate(config.cooling_rates()):
        graph, _ = random_regular_graph(n, d, warmup, rngs[i])
        chains.append(make_chain(graph, temperature=1.0, cooling_rate=rate, neighbor_width=i + 1))
    return chains


def rank_temperatures(chains: Sequence[AnnealChain], ranking: str = "coldest_best") -> list[AnnealChain]:
    """Reassign temperatures by this round's score (``step_lambda``)."""
    scores = np.array([c.step_lambda for c in chains])
    order = np.argsort(scores, kind="stable")
    if ranking == "coldest_best":
        temps = sorted(c.temperature for c in chains)
        out = list(chains)
        for rank, idx in enumerate(order):
            out[idx] = replace(chains[idx], temperature=temps[rank])
        return out
    if ranking == "permute":
        return [
            replace(chains[idx], cooling_rate=chains[slot].cooling_rate, neighbor_width=chains[slot].neighbor_width)
            for slot, idx in enumerate(order)
        ]
    raise GraphConfigError(f"ranking must be one of {RANKINGS}")


def _exchange(a: AnnealChain, b: AnnealChain) -> tuple[AnnealChain, AnnealChain]:
    # neighbour width is a property of the slot and stays put
    return (
        replace(b, neighbor_width=a.neighbor_width),
        replace(a, neighbor_width=b.neighbor_width),
    )


def _swap_probability(a: AnnealChain, b: AnnealChain) -> float:
    x = (a.current_lambda - b.current_lambda) * (1.0 / a.temperature - 1.0 / b.temperature)
    return 1.0 if x >= 0 else math.exp(max(x, -745.0))


def perform_one_step(
    chains: Sequence[AnnealChain],
    rng,
    *,
    trials: int = 10,
    swap_rule: str = "unconditional",
    ranking: str = "coldest_best",
    carry: str = "best",
    rngs: Optional[Sequence[np.random.Generator]] = None,
    executor: Optional[ThreadPoolExecutor] = None,
) -> tuple[list[AnnealChain], float]:
    """Advance every chain once, rank, and maybe exchange two chains.

    ``rngs`` gives each slot its own generator; when omitted they are spawned
    from ``rng``. With an ``executor`` the chains are annealed concurrently;
    results are identical to the sequential path because every slot owns its
    generator.

    Returns the new chains and the lowest lambda2 seen this round.
    """
    rng = np.random.default_rng(rng)
    if not chains:
        raise ValueError("need at least one chain")
    if rngs is None:
        rngs = rng.spawn(len(chains))
    jobs = list(zip(chains, rngs))
    if executor is None:
        advanced = [partial_anneal(c, trials, r, carry=carry) for c, r in jobs]
    else:
        advanced = list(executor.map(lambda job: partial_anneal(job[0], trials, job[1], carry=carry), jobs))
    round_best = min(c.step_lambda for c in advanced)
    ranked = rank_temperatures(advanced, ranking)
    if len(ranked) > 2:
        i, j = (int(x) for x in rng.choice(len(ranked), size=2, replace=False))
        if swap_rule == "unconditional":
            accept = True
        elif swap_rule == "metropolis":
            accept = _swap_probability(ranked[i], ranked[j]) > rng.random()
        else:
            raise GraphConfigError(f"swap_rule must be one of {SWAP_RULES}")
        if accept:
            ranked[i], ranked[j] = _exchange(ranked[i], ranked[j])
    return ranked, round_best


def coupled_annealing(
    config: McsaConfig,
    on_step: Optional[Callable[[int, list[AnnealChain]], None]] = None,
) -> tuple[RegularGraph, float, RunRecord]:
    """Run MCSA until the hottest chain reaches ``t_min`` or the stop rule fires.

    The stop rule fires as soon as the global best lambda2 is strictly below
    its threshold. ``config.seed = None`` draws a fresh seed, which is stored
    in the returned :class:`RunRecord`.
    """
    config.validate()
    seed = config.seed if config.seed is not None else int(np.random.SeedSequence().entropy % 2**63)
    cfg = replace(config, seed=seed)
    rngs, master = chain_rngs(seed, cfg.chains)
    record = RunRecord(seed=seed, config=asdict(cfg))

    start = time.perf_counter()
    chains = define_coupling(cfg, rngs)
    best = min(chains, key=lambda c: c.best_lambda)
    best_graph, best_lam = best.best_graph, best.best_lambda
    threshold = cfg.threshold()

    executor = ThreadPoolExecutor(cfg.n_jobs) if cfg.n_jobs > 1 else None
    try:
        step = 0
        reason = "t_min"
        while max(c.temperature for c in chains) > cfg.t_min:
            if cfg.max_steps is not None and step >= cfg.max_steps:
                reason = "max_steps"
                break
            chains, _ = perform_one_step(
                chains,
                master,
                trials=cfg.trials_per_step,
                swap_rule=cfg.swap_rule,
                ranking=cfg.ranking,
                carry=cfg.carry,
                rngs=rngs,
                executor=executor,
            )
            step += 1
            lead = min(chains, key=lambda c: c.best_lambda)
            if lead.best_lambda < best_lam:
                best_graph, best_lam = lead.best_graph, lead.best_lambda
            record.steps.append(
                StepRecord(
                    step=step,
                    best_lambda2=best_lam,
                    coldest_temperature=min(c.temperature for c in chains),
                    seconds=time.perf_counter() - start,
                )
            )
            if on_step is not None:
                on_step(step, chains)
            if threshold is not None and best_lam < threshold:
                reason = cfg.stop_rule if isinstance(cfg.stop_rule, str) else "target"
                break
    finally:
        if executor is not None:
            executor.shutdown()

    record.stop_reason = reason
    record.best_lambda2 = best_lam
    return best_graph, best_lam, record

