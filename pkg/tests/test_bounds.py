import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spectral_anneal import (
    DegenerateBase,
    bound_set,
    classify,
    expected_cycle_count,
    log_graph_count,
    ramanujan_threshold,
    strict_lower_bound,
    weak_lower_bound,
    weak_optimal_threshold,
)


def exact_log_count(n, d):
    """log of (nd)! exp((1-d^2)/4) / ((nd/2)! 2^(nd/2)) with exact factorials."""
    nd = n * d
    return (
        math.log(math.factorial(nd))
        - math.log(math.factorial(nd // 2))
        - (nd // 2) * math.log(2)
        + (1 - d * d) / 4
    )


def smallest_r(n, d):
    # log_{sqrt(d-1)} n <= r - 1  <=>  n^2 <= (d-1)^(r-1), exact in integers
    r = 1
    while n * n > (d - 1) ** (r - 1):
        r += 1
    return r


@pytest.mark.parametrize("d,expected,tol", [(7, 0.69985, 1e-5), (3, 0.9428, 1e-4), (4, 0.866, 1e-3)])
def test_ramanujan_threshold(d, expected, tol):
    assert ramanujan_threshold(d) == pytest.approx(expected, abs=tol)


def test_weak_lower_50_7():
    k = math.log(50) / math.log(math.sqrt(6))
    assert 4 < k < 5
    assert smallest_r(50, 7) == 6
    assert weak_lower_bound(50, 7) == pytest.approx(ramanujan_threshold(7) * 11 / 12, abs=1e-15)
    assert weak_lower_bound(50, 7) == pytest.approx(0.64153, abs=1e-5)


@pytest.mark.parametrize("d,n", [(5, 16), (5, 64), (10, 81), (10, 729), (17, 256)])
def test_weak_lower_integral_boundary(d, n):
    # log_{sqrt(d-1)} n is an integer k here; the smallest r with k <= r - 1 is k + 1
    k = round(math.log(n) / math.log(math.sqrt(d - 1)))
    assert (d - 1) ** k == n * n
    assert smallest_r(n, d) == k + 1
    assert weak_lower_bound(n, d) == pytest.approx(ramanujan_threshold(d) * (1 - 1 / (2 * (k + 1))))


@given(st.integers(3, 40), st.integers(0, 10**6))
def test_weak_lower_matches_brute_r(d, extra):
    n = d + 1 + extra
    r = smallest_r(n, d)
    assert weak_lower_bound(n, d) == pytest.approx(ramanujan_threshold(d) * (1 - 1 / (2 * r)), abs=1e-15)


@given(st.integers(3, 30), st.integers(4, 10**5), st.integers(0, 10**5))
def test_weak_lower_monotone_in_n(d, n, extra):
    n = max(n, d + 1)
    assert weak_lower_bound(n + extra, d) >= weak_lower_bound(n, d)


def test_weak_lower_limits_and_errors():
    # n = 1e9: k = log_{sqrt 6} 1e9 ~ 23.13, r = 25, gap ramanujan/50 ~ 0.014
    assert smallest_r(10**9, 7) == 25
    assert weak_lower_bound(10**9, 7) == pytest.approx(ramanujan_threshold(7) * 0.98, abs=1e-15)
    assert abs(weak_lower_bound(10**15, 7) - ramanujan_threshold(7)) < 0.01
    with pytest.raises(DegenerateBase):
        weak_lower_bound(10, 2)
    with pytest.raises(ValueError):
        weak_lower_bound(5, 7)


def test_weak_optimal():
    assert weak_optimal_threshold(7) == pytest.approx(0.649865, abs=1e-6)
    assert weak_optimal_threshold(3) == pytest.approx(0.7857, abs=1e-4)
    for d in range(2, 60):
        assert weak_optimal_threshold(d) < ramanujan_threshold(d)


def test_strict_lower():
    assert strict_lower_bound(7, 2) == pytest.approx(1 / 7, abs=1e-12)
    assert strict_lower_bound(7, 3) == pytest.approx(1 / 7, abs=1e-12)
    assert strict_lower_bound(3, 4) == pytest.approx(0.6381, abs=1e-4)
    assert abs(strict_lower_bound(7, 10**6) - ramanujan_threshold(7)) < 1e-4
    assert strict_lower_bound(7, 1) is None
    assert strict_lower_bound(7, math.inf) is None
    assert strict_lower_bound(7, None) is None


def test_ordering_sweep():
    for d in range(3, 51):
        ram, opt = ramanujan_threshold(d), weak_optimal_threshold(d)
        s = 2 * math.sqrt(d - 1)
        # ram - strict = (s-1)/(d h) and ram - opt = s/(2 d^2), h = floor(m/2)
        crossover = 2 * d * (s - 1) / s
        for m in range(4, 101):
            strict = strict_lower_bound(d, m)
            assert strict < ram
            assert opt < ram
            assert (strict < opt) == (m // 2 < crossover)


def test_log_graph_count_17_4():
    value = log_graph_count(17, 4)
    assert value == pytest.approx(106.06, abs=0.01)
    assert 1.0e46 <= math.exp(value) <= 1.3e46


def test_log_graph_count_close_to_exact_beyond_tiny_cases():
    for n in range(2, 201):
        for d in range(1, n):
            nd = n * d
            if nd > 200 or nd % 2 or nd < 8:
                continue
            exact = exact_log_count(n, d)
            assert abs(log_graph_count(n, d) - exact) <= 0.005 * abs(exact)


def test_log_graph_count_monotone():
    for d in range(1, 8):
        prev = None
        for n in range(d + 1, 60):
            if n * d % 2 or n * d < 3:
                continue
            cur = log_graph_count(n, d)
            if prev is not None:
                assert cur > prev
            prev = cur


def test_log_graph_count_rejects_odd():
    with pytest.raises(ValueError):
        log_graph_count(7, 3)


@pytest.mark.parametrize("d,k,expected", [(3, 3, 4 / 3), (7, 3, 36.0), (2, 5, 0.1), (2, 3, 1 / 6)])
def test_expected_cycle_count(d, k, expected):
    assert expected_cycle_count(d, k) == pytest.approx(expected)


def test_boundset_invariants():
    for d in range(3, 30):
        for m in (2, 3, 5, 8):
            bs = bound_set(200, d, m)
            assert bs.strict_lower <= bs.ramanujan
            assert bs.weak_lower < bs.ramanujan
            assert bs.weak_optimal < bs.ramanujan
            for v in (bs.ramanujan, bs.weak_lower, bs.weak_optimal, bs.strict_lower):
                assert 0 < v < 1


def test_boundset_optional_parts():
    bs = bound_set(None, 7)
    assert bs.weak_lower is None and bs.strict_lower is None
    assert bound_set(20, 2, 4).weak_lower is None


def test_classify_known_graphs():
    c = classify(0.598987, bound_set(50, 7))
    assert c.is_ramanujan and c.below_weak_optimal
    assert classify(0.69407, bound_set(2000, 7)).is_ramanujan


def test_classify_margins_and_strict():
    bs = bound_set(50, 7, 2)
    c = classify(0.5, bs)
    assert c.above_strict
    assert c.ramanujan_margin == pytest.approx(bs.ramanujan - 0.5)
    assert c.strict_margin == pytest.approx(0.5 - 1 / 7)
    # strict comparison: equality is not "below"
    assert not classify(bs.ramanujan, bs).is_ramanujan


@pytest.mark.parametrize("d", range(2, 30))
def test_classify_one_is_never_ramanujan(d):
    assert not classify(1.0, bound_set(100, d)).is_ramanujan


def test_classify_range_check():
    with pytest.raises(ValueError):
        classify(1.2, bound_set(10, 3))
