"""Connected subcubic and cubic graphs up to isomorphism, plus named fixtures.

Enumeration adds one vertex at a time.  Every connected graph has a vertex
whose removal leaves it connected, so all connected graphs on ``k + 1``
vertices arise from the connected graphs on ``k`` vertices by attaching a new
vertex to one, two or three existing vertices of degree below 3.  Duplicates
are rejected by canonical form.  For cubic targets, prefixes that cannot be
completed to a cubic graph with the remaining vertices are dropped early.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .canon import canonical_form, canonical_graph, canonical_labelling
from .graph import SubcubicGraph, build

__all__ = [
    "GraphStream",
    "UnknownName",
    "SizeLimitExceeded",
    "CUBIC_CAP",
    "SUBCUBIC_CAP",
    "KNOWN_CUBIC_COUNTS",
    "enumerate_connected",
    "canonical_form",
    "named",
    "random_subcubic",
    "random_connected_subcubic",
]

CUBIC_CAP = 14
SUBCUBIC_CAP = 10

# connected cubic graphs by order (OEIS A002851)
KNOWN_CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}


class UnknownName(KeyError):
    pass


class SizeLimitExceeded(ValueError):
    pass


@dataclass
class GraphStream:
    graphs: list[SubcubicGraph]
    provenance: str = "generated"
    params: dict = field(default_factory=dict)

    def __iter__(self) -> Iterator[SubcubicGraph]:
        return iter(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)


def _cubic_prefix_ok(g: SubcubicGraph, target: int) -> bool:
    r = target - g.n
    deficits = [3 - d for d in g.degrees]
    total = sum(deficits)
    if r == 0:
        return total == 0
    if max(deficits) > r or total > 3 * r or (total - r) % 2:
        return False
    # the r new vertices have at most r(r-1)/2 edges among themselves
    return total >= 3 * r - r * (r - 1)


def _extensions(
    g: SubcubicGraph, triangle_free: bool
) -> Iterator[SubcubicGraph]:
    open_vs = [v for v in range(g.n) if g.degree(v) < 3]
    new = g.n
    for size in (1, 2, 3):
        for s in itertools.combinations(open_vs, size):
            if triangle_free and any(g.has_edge(a, b) for a, b in itertools.combinations(s, 2)):
                continue
            edges = list(g.edges) + [(v, new) for v in s]
            yield SubcubicGraph.from_edges(new + 1, edges)


_LEVEL_CACHE: dict[tuple[bool], list[list[SubcubicGraph]]] = {}


def _grow(
    level: list[SubcubicGraph], triangle_free: bool, keep
) -> list[SubcubicGraph]:
    seen: dict[bytes, SubcubicGraph] = {}
    for h in level:
        for child in _extensions(h, triangle_free):
            if not keep(child):
                continue
            lab = canonical_labelling(child).position
            cg = SubcubicGraph.from_edges(child.n, [(lab[u], lab[v]) for u, v in child.edges])
            key = (cg.n, cg.adjacency)
            if key not in seen:
                seen[key] = cg
    return sorted(seen.values(), key=lambda x: (x.m, x.adjacency))


def _general_levels(n: int, triangle_free: bool) -> list[list[SubcubicGraph]]:
    levels = _LEVEL_CACHE.setdefault((triangle_free,), [[build([], 1)]])
    while len(levels) < n:
        levels.append(_grow(levels[-1], triangle_free, lambda _: True))
    return levels


def enumerate_connected(
    n: int,
    cubic_only: bool = False,
    triangle_free: bool = False,
    cap: int | None = None,
) -> GraphStream:
    """One representative per isomorphism class of connected graphs on ``n`` vertices.

    Every graph in the stream is canonically labelled, and the stream is
    ordered by edge count then adjacency, so identical parameters give an
    identical stream.
    """
    limit = cap if cap is not None else (CUBIC_CAP if cubic_only else SUBCUBIC_CAP)
    if n < 1 or n > limit:
        raise SizeLimitExceeded(f"n={n} outside 1..{limit}")
    params = {"n": n, "cubic_only": cubic_only, "triangle_free": triangle_free}
    if not cubic_only:
        return GraphStream(list(_general_levels(n, triangle_free)[n - 1]), "generated", params)
    if n % 2 or n < 4:
        return GraphStream([], "generated", params)
    level = [build([], 1)]
    for _ in range(1, n):
        level = _grow(level, triangle_free, lambda h: _cubic_prefix_ok(h, n))
    return GraphStream(level, "generated", params)


# -- named fixtures -----------------------------------------------------------------


def _path(k: int) -> SubcubicGraph:
    return build([(i, i + 1) for i in range(k - 1)], k)


def _cycle(k: int) -> SubcubicGraph:
    if k < 3:
        raise UnknownName(f"c{k}: cycles need at least 3 vertices")
    return build([(i, (i + 1) % k) for i in range(k)], k)


_FIXED = {
    "k1": lambda: build([], 1),
    "k2": lambda: build([(0, 1)], 2),
    "k3": lambda: _cycle(3),
    "k4": lambda: build([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 4),
    # K4 with edge 0-1 subdivided by vertex 4
    "k4star": lambda: build([(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 1)], 5),
    "k13": lambda: build([(0, 1), (0, 2), (0, 3)], 4),
    "k33": lambda: build([(a, b) for a in range(3) for b in range(3, 6)], 6),
    "prism": lambda: build([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)], 6),
    "petersen": lambda: build(
        [(i, (i + 1) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
        10,
    ),
    "cube": lambda: build(
        [(v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)], 8
    ),
}
_ALIASES = {"k4*": "k4star", "k3,3": "k33", "k1,3": "k13", "claw": "k13", "star": "k13", "q3": "cube"}


def named(name: str) -> SubcubicGraph:
    """Standard small graphs: k1, k2, k3, k4, k4star, k13, k33, prism, petersen,
    cube, and parameterised paths ``p<k>`` and cycles ``c<k>``."""
    key = name.strip().lower().replace("_", "")
    key = _ALIASES.get(key, key)
    if key in _FIXED:
        return _FIXED[key]()
    m = re.fullmatch(r"(p|path|c|cycle)(\d+)", key)
    if m:
        k = int(m.group(2))
        if k < 1:
            raise UnknownName(name)
        return _path(k) if m.group(1) in ("p", "path") else _cycle(k)
    raise UnknownName(name)


# -- random graphs ------------------------------------------------------------------


def random_subcubic(n: int, m: int | None = None, rng: random.Random | None = None) -> SubcubicGraph:
    """Random simple subcubic graph: shuffled pairs added while degrees allow.

    Stops after ``m`` edges when given.  Not uniform over anything.
    """
    rng = rng or random.Random()
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    for u, v in pairs:
        if m is not None and len(edges) >= m:
            break
        if deg[u] < 3 and deg[v] < 3:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return build(edges, n)


def random_connected_subcubic(
    n: int, extra: int | None = None, rng: random.Random | None = None
) -> SubcubicGraph:
    """Random spanning tree of maximum degree 3 plus up to ``extra`` further edges."""
    rng = rng or random.Random()
    order = list(range(n))
    rng.shuffle(order)
    deg = [0] * n
    present = set()
    for i in range(1, n):
        v = order[i]
        u = rng.choice([w for w in order[:i] if deg[w] < 3])
        present.add((min(u, v), max(u, v)))
        deg[u] += 1
        deg[v] += 1
    if extra is None:
        extra = rng.randint(0, n)
    pairs = [p for p in itertools.combinations(range(n), 2) if p not in present]
    rng.shuffle(pairs)
    for u, v in pairs:
        if extra <= 0:
            break
        if deg[u] < 3 and deg[v] < 3:
            present.add((u, v))
            deg[u] += 1
            deg[v] += 1
            extra -= 1
    return build(sorted(present), n)


def dedupe(graphs: Iterable[SubcubicGraph]) -> list[SubcubicGraph]:
    seen = set()
    out = []
    for g in graphs:
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            out.append(canonical_graph(g))
    return out
