import itertools
from collections import defaultdict

import networkx as nx
import pytest

from bdom.generator import (
    GraphStream,
    SizeLimitExceeded,
    UnknownName,
    enumerate_connected,
    named,
    random_connected_subcubic,
    random_subcubic,
)
from bdom.graph import distance

from helpers import to_nx

# connected graphs with maximum degree at most 3, by order (OEIS A112410)
PUBLISHED_SUBCUBIC = {1: 1, 2: 1, 3: 2, 4: 6, 5: 10, 6: 29, 7: 64, 8: 194, 9: 531, 10: 1733}


def _atlas_counts(triangle_free: bool) -> dict[int, int]:
    counts = defaultdict(int)
    for h in nx.graph_atlas_g()[1:]:
        if not nx.is_connected(h) or max(d for _, d in h.degree()) > 3:
            continue
        if triangle_free and sum(nx.triangles(h).values()):
            continue
        counts[h.number_of_nodes()] += 1
    return counts


@pytest.mark.parametrize("n", range(1, 8))
def test_subcubic_counts_match_networkx_atlas(n):
    assert len(enumerate_connected(n)) == _atlas_counts(False)[n]


@pytest.mark.parametrize("n", range(1, 8))
def test_triangle_free_counts_match_networkx_atlas(n):
    assert len(enumerate_connected(n, triangle_free=True)) == _atlas_counts(True)[n]


@pytest.mark.parametrize("n, count", sorted(PUBLISHED_SUBCUBIC.items()))
def test_subcubic_counts_match_published(n, count):
    assert len(enumerate_connected(n)) == count


@pytest.mark.parametrize("n, count", [(4, 1), (6, 2), (8, 5), (10, 19)])
def test_cubic_counts(n, count):
    stream = enumerate_connected(n, cubic_only=True)
    assert len(stream) == count
    assert all(g.is_cubic and g.is_connected for g in stream)


def test_cubic_six_is_k33_and_prism():
    stream = enumerate_connected(6, cubic_only=True)
    got = {frozenset(nx.weisfeiler_lehman_graph_hash(to_nx(g)) for g in stream)}
    want = {frozenset(nx.weisfeiler_lehman_graph_hash(to_nx(named(x))) for x in ("k33", "prism"))}
    assert got == want


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 13])
def test_cubic_odd_order_is_empty(n):
    assert len(enumerate_connected(n, cubic_only=True)) == 0


@pytest.mark.parametrize("n", [7, 8, 9])
def test_stream_is_pairwise_non_isomorphic(n):
    buckets = defaultdict(list)
    for g in enumerate_connected(n):
        h = to_nx(g)
        assert nx.is_connected(h) and max(d for _, d in h.degree()) <= 3
        buckets[nx.weisfeiler_lehman_graph_hash(h, iterations=4)].append(h)
    for group in buckets.values():
        for a, b in itertools.combinations(group, 2):
            assert not nx.is_isomorphic(a, b)


def test_stream_is_deterministic():
    a = [g.adjacency for g in enumerate_connected(6)]
    b = [g.adjacency for g in enumerate_connected(6)]
    assert a == b
    assert isinstance(enumerate_connected(6), GraphStream)


def test_size_limits():
    with pytest.raises(SizeLimitExceeded):
        enumerate_connected(11)
    with pytest.raises(SizeLimitExceeded):
        enumerate_connected(16, cubic_only=True)
    with pytest.raises(SizeLimitExceeded):
        enumerate_connected(0)
    assert len(enumerate_connected(4, cap=4)) == 6


def test_named_fixtures():
    k4s = named("k4star")
    assert k4s.n == 5 and sorted(k4s.degrees) == [2, 3, 3, 3, 3]
    pet = named("petersen")
    h = to_nx(pet)
    assert pet.is_cubic and nx.girth(h) == 5 and nx.diameter(h) == 2
    assert named("c4").degrees == (2, 2, 2, 2)
    assert named("K3,3") == named("k33")
    assert nx.is_isomorphic(to_nx(named("cube")), nx.hypercube_graph(3))
    assert named("p1").n == 1


@pytest.mark.parametrize("bad", ["nope", "c2", "p0", ""])
def test_named_unknown(bad):
    with pytest.raises(UnknownName):
        named(bad)


def test_petersen_distance_two_everywhere():
    g = named("petersen")
    assert max(distance(g, u, v) for u in range(10) for v in range(10)) == 2


def test_random_generators_respect_degree():
    import random

    rng = random.Random(0)
    for _ in range(50):
        g = random_subcubic(12, rng=rng)
        assert max(g.degrees, default=0) <= 3
        h = random_connected_subcubic(12, rng=rng)
        assert h.is_connected and max(h.degrees) <= 3
