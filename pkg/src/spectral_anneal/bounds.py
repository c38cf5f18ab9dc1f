"""Closed-form spectral thresholds, lower bounds and counting asymptotics.

All eigenvalue thresholds are in the normalized convention: divide an
adjacency eigenvalue by ``d`` before comparing. Multiply by ``d`` to recover
the classical statements such as ``|lambda_2| < 2 sqrt(d - 1)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .exceptions import DegenerateBase

__all__ = [
    "BoundSet",
    "Classification",
    "ramanujan_threshold",
    "weak_lower_bound",
    "weak_optimal_threshold",
    "strict_lower_bound",
    "log_graph_count",
    "expected_cycle_count",
    "bound_set",
    "classify",
]

_INTEGRAL_TOL = 1e-12


def ramanujan_threshold(d: int) -> float:
    """``2 sqrt(d - 1) / d``."""
    if d < 2:
        raise ValueError("d must be at least 2")
    return 2.0 * math.sqrt(d - 1) / d


def _weak_radius(n: int, d: int) -> int:
    # smallest integer r with log_{sqrt(d-1)}(n) <= r - 1
    k = math.log(n) / math.log(math.sqrt(d - 1))
    nearest = round(k)
    if abs(k - nearest) <= _INTEGRAL_TOL * max(1.0, abs(k)):
        return int(nearest) + 1
    return math.ceil(k) + 1


def weak_lower_bound(n: int, d: int) -> float:
    """Radius-based lower bound ``ramanujan(d) * (1 - 1/(2r))``.

    ``r`` is the smallest integer with ``log_{sqrt(d-1)} n <= r - 1``.

    Raises
    ------
    DegenerateBase
        For ``d <= 2``, where ``sqrt(d - 1) <= 1`` is not a usable log base.
    """
    if d <= 2:
        raise DegenerateBase(f"log base sqrt(d-1) is degenerate for d={d}")
    if n < d + 1:
        raise ValueError(f"need n >= d + 1, got n={n}, d={d}")
    r = _weak_radius(n, d)
    return ramanujan_threshold(d) * (1.0 - 1.0 / (2 * r))


def weak_optimal_threshold(d: int) -> float:
    """``ramanujan(d) * (1 - 1/(2d))``; the practical search target."""
    return ramanujan_threshold(d) * (1.0 - 1.0 / (2 * d))


def strict_lower_bound(d: int, m) -> float | None:
    """Diameter-based lower bound on the normalized second eigenvalue.

    ``2 sqrt(d-1)/d - (2 sqrt(d-1) - 1) / (d * floor(m/2))``. Returns ``None``
    when ``floor(m/2)`` is zero or ``m`` is infinite (disconnected graph).
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    if m is None or math.isinf(m):
        return None
    half = int(m) // 2
    if half < 1:
        return None
    s = 2.0 * math.sqrt(d - 1)
    return s / d - (s - 1.0) / (d * half)


def log_graph_count(n: int, d: int) -> float:
    """Natural log of the asymptotic number of labelled d-regular graphs on n vertices."""
    nd = n * d
    if nd % 2 or d < 1:
        raise ValueError(f"need n*d even and d >= 1, got n={n}, d={d}")
    return nd / 2 * (math.log(nd) - 1) + math.log(2) / 2 + (1 - d * d) / 4


def expected_cycle_count(d: int, k: int) -> float:
    """Poisson mean ``(d-1)^k / (2k)`` of k-cycles in a random d-regular graph."""
    if d < 2 or k < 3:
        raise ValueError("need d >= 2 and k >= 3")
    return (d - 1) ** k / (2 * k)


@dataclass(frozen=True)
class BoundSet:
    """Thresholds for one ``(n, d)`` and optionally a measured diameter ``m``.

    ``weak_lower`` is ``None`` for ``d = 2``; ``strict_lower`` is ``None`` when
    no finite diameter of at least 2 is supplied.
    """

    n: int | None
    d: int
    m: int | float | None
    ramanujan: float
    weak_lower: float | None
    weak_optimal: float
    strict_lower: float | None


def bound_set(n: int | None, d: int, m=None) -> BoundSet:
    """Collect every threshold available for ``(n, d, m)``; ``n`` and ``m`` are optional."""
    weak = None
    if n is not None and d > 2 and n > d:
        weak = weak_lower_bound(n, d)
    return BoundSet(
        n=n,
        d=d,
        m=m,
        ramanujan=ramanujan_threshold(d),
        weak_lower=weak,
        weak_optimal=weak_optimal_threshold(d),
        strict_lower=strict_lower_bound(d, m),
    )


@dataclass(frozen=True)
class Classification:
    """Where a measured ``lambda2`` falls against a :class:`BoundSet`.

    ``ramanujan_margin`` and ``weak_optimal_margin`` are ``threshold - lambda2``
    (positive means below); ``strict_margin`` is ``lambda2 - strict_lower``
    (positive means above). Comparisons are strict with no epsilon; use the
    margins to apply a tolerance.
    """

    lambda2: float
    is_ramanujan: bool
    below_weak_optimal: bool
    below_weak_lower: bool | None
    above_strict: bool | None
    ramanujan_margin: float
    weak_optimal_margin: float
    strict_margin: float | None


def classify(lambda2: float, bounds: BoundSet) -> Classification:
    if not 0.0 <= lambda2 <= 1.0:
        raise ValueError(f"lambda2 must lie in [0, 1], got {lambda2}")
    strict = bounds.strict_lower
    weak = bounds.weak_lower
    return Classification(
        lambda2=lambda2,
        is_ramanujan=lambda2 < bounds.ramanujan,
        below_weak_optimal=lambda2 < bounds.weak_optimal,
        below_weak_lower=None if weak is None else lambda2 < weak,
        above_strict=None if strict is None else lambda2 > strict,
        ramanujan_margin=bounds.ramanujan - lambda2,
        weak_optimal_margin=bounds.weak_optimal - lambda2,
        strict_margin=None if strict is None else lambda2 - strict,
    )
