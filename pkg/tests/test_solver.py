import math
import random

import pytest
from hypothesis import given

from bdom.broadcast import is_dominating
from bdom.generator import named, random_connected_subcubic
from bdom.graph import build, disjoint_union
from bdom.solver import (
    Method,
    SizeLimitExceeded,
    SolveTimeout,
    counting_lower_bound,
    gamma_brute_force,
    gamma_exact,
    greedy_upper_bound,
    solve,
    verify_certificate,
)

from helpers import subcubic_graphs

# values computed once by gamma_brute_force and frozen
FROZEN = {
    "k1": 1,
    "k2": 1,
    "k3": 1,
    "k4": 1,
    "k13": 1,
    "k4star": 2,
    "c4": 2,
    "k33": 2,
    "prism": 2,
    "p5": 2,
    "c6": 2,
    "petersen": 2,
    "cube": 2,
}


@pytest.mark.parametrize("name, gamma", sorted(FROZEN.items()))
@pytest.mark.parametrize("method", list(Method))
def test_frozen_values_both_methods(name, gamma, method):
    res = solve(named(name), method)
    assert res.gamma == gamma
    assert res.method is method
    assert verify_certificate(res)


@pytest.mark.parametrize("k", range(1, 21))
def test_paths_and_cycles_closed_form(k):
    # one unit of cost covers at most three vertices of a path or cycle
    assert gamma_exact(named(f"p{k}")).gamma == math.ceil(k / 3)
    if k >= 3:
        assert gamma_exact(named(f"c{k}")).gamma == math.ceil(k / 3)


@given(subcubic_graphs(max_n=11))
def test_branch_and_bound_matches_brute_force(g):
    a = gamma_exact(g)
    b = gamma_brute_force(g)
    assert a.gamma == b.gamma
    assert verify_certificate(a) and verify_certificate(b)


@given(subcubic_graphs(max_n=12))
def test_bounds_bracket_gamma(g):
    gamma = gamma_exact(g).gamma
    ub, f = greedy_upper_bound(g)
    assert is_dominating(f) and f.cost == ub
    assert counting_lower_bound(g) <= gamma <= ub


@given(subcubic_graphs(max_n=8), subcubic_graphs(max_n=8))
def test_gamma_adds_over_components(g, h):
    assert gamma_exact(disjoint_union(g, h)).gamma == gamma_exact(g).gamma + gamma_exact(h).gamma


def test_certificate_lives_on_input_graph():
    g = build([(0, 1), (2, 3), (3, 4), (4, 5), (5, 6)], 8)
    res = gamma_exact(g)
    assert res.certificate.graph == g
    assert res.gamma == 1 + 2 + 1 and is_dominating(res.certificate)


def test_empty_graph():
    g = build([], 0)
    assert gamma_exact(g).gamma == 0
    assert gamma_brute_force(g).gamma == 0


def test_caps():
    g = named("p13")
    with pytest.raises(SizeLimitExceeded):
        gamma_brute_force(g)
    with pytest.raises(SizeLimitExceeded):
        gamma_exact(g, cap=10)
    assert gamma_brute_force(g, cap=13).gamma == 5


def test_timeout_raises():
    g = random_connected_subcubic(60, extra=30, rng=random.Random(5))
    with pytest.raises(SolveTimeout):
        gamma_exact(g, timeout=0.0)


def test_deterministic_certificate():
    g = named("petersen")
    assert gamma_exact(g).certificate == gamma_exact(g).certificate


def test_medium_random_instances_are_certified():
    rng = random.Random(11)
    for n in (20, 30, 40):
        res = gamma_exact(random_connected_subcubic(n, extra=n // 2, rng=rng))
        assert verify_certificate(res)
        assert res.gamma <= math.ceil(4 * n / 9)
