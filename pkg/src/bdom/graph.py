"""Subcubic graphs and the set operators used on them.

Vertex sets are plain ``int`` bitmasks: bit ``v`` is set iff vertex ``v`` is a
member.  Graphs are small (the solver caps them at 64 vertices), so every set
operation is a handful of integer instructions.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

VertexSet = int
Edge = tuple[int, int]

__all__ = [
    "VertexSet",
    "Edge",
    "GraphError",
    "DegreeExceeded",
    "LoopEdge",
    "DuplicateEdge",
    "NotSuppressible",
    "SubcubicGraph",
    "WeightReport",
    "Smoothing",
    "ClosureParts",
    "build",
    "mask_of",
    "members",
    "closed_neighborhood",
    "ball2",
    "distance",
    "boundary",
    "components",
    "classify_bad_components",
    "omega",
    "vertex_weight",
    "set_weight",
    "closure",
    "closure_parts",
    "suppress_degree2",
    "delete_vertices",
    "delete_edge",
    "induced_subgraph",
    "disjoint_union",
    "is_c4_component",
    "is_k4star_component",
]


class GraphError(ValueError):
    """Invalid graph construction or surgery."""


class DegreeExceeded(GraphError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class NotSuppressible(GraphError):
    """Smoothing a 2-vertex would create a loop."""


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: VertexSet) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True, eq=False)
class SubcubicGraph:
    """Immutable simple graph with maximum degree at most 3.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.  Graphs
    produced by surgery carry ``parent``, mapping each vertex to its index in
    the original graph; the map composes across repeated surgery.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    parent: tuple[int, ...] | None = field(default=None, compare=False)

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Sequence[int]], parent: Sequence[int] | None = None
    ) -> "SubcubicGraph":
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if v in adj[u]:
                raise DuplicateEdge(f"edge ({u}, {v}) given twice")
            adj[u].add(v)
            adj[v].add(u)
            for x in (u, v):
                if len(adj[x]) > 3:
                    raise DegreeExceeded(f"vertex {x} would have degree {len(adj[x])}")
        if parent is not None:
            parent = tuple(parent)
            if len(parent) != n:
                raise GraphError("parent map length differs from vertex count")
        return cls(n, tuple(tuple(sorted(a)) for a in adj), parent)

    # -- basic accessors ------------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @cached_property
    def nbr_mask(self) -> tuple[int, ...]:
        return tuple(mask_of(a) for a in self.adjacency)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        return tuple(m | (1 << v) for v, m in enumerate(self.nbr_mask))

    @cached_property
    def ball2_masks(self) -> tuple[int, ...]:
        closed = self.closed_masks
        out = []
        for v in range(self.n):
            m = closed[v]
            for u in self.adjacency[v]:
                m |= closed[u]
            out.append(m)
        return tuple(out)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((u, v) for u in range(self.n) for v in self.adjacency[u] if u < v)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.nbr_mask[u] >> v & 1)

    def degree_tally(self) -> tuple[int, int, int, int]:
        t = [0, 0, 0, 0]
        for d in self.degrees:
            t[d] += 1
        return (t[0], t[1], t[2], t[3])

    @property
    def is_cubic(self) -> bool:
        return all(d == 3 for d in self.degrees)

    @property
    def is_connected(self) -> bool:
        return self.n == 0 or len(components(self)) == 1

    def root_index(self, v: int) -> int:
        """Index of ``v`` in the original graph (``v`` itself if uncut)."""
        return v if self.parent is None else self.parent[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubcubicGraph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"SubcubicGraph(n={self.n}, edges={list(self.edges)})"


def build(edges: Iterable[Sequence[int]], n: int) -> SubcubicGraph:
    """Validated graph on vertices ``0..n-1``."""
    return SubcubicGraph.from_edges(n, edges)


# -- neighbourhoods and distances ---------------------------------------------


def closed_neighborhood(g: SubcubicGraph, v: int) -> VertexSet:
    return g.closed_masks[v]


def ball2(g: SubcubicGraph, v: int) -> VertexSet:
    """All vertices at distance at most two from ``v``."""
    return g.ball2_masks[v]


def distance(g: SubcubicGraph, u: int, v: int) -> float:
    """Number of edges on a shortest ``u``-``v`` path, ``math.inf`` if none."""
    if u == v:
        return 0
    seen = 1 << u
    frontier = 1 << u
    d = 0
    target = 1 << v
    while frontier:
        d += 1
        nxt = 0
        for x in members(frontier):
            nxt |= g.nbr_mask[x]
        nxt &= ~seen
        if nxt & target:
            return d
        seen |= nxt
        frontier = nxt
    return math.inf


def boundary(g: SubcubicGraph, x: VertexSet) -> list[Edge]:
    """Edges with exactly one end in ``x``, oriented (inside, outside)."""
    out = []
    for u in members(x):
        for w in g.adjacency[u]:
            if not x >> w & 1:
                out.append((u, w))
    return out


def components(g: SubcubicGraph) -> list[VertexSet]:
    """Connected components, ordered by their smallest vertex."""
    left = g.full_mask
    out = []
    while left:
        start = left & -left
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for x in members(frontier):
                nxt |= g.nbr_mask[x]
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        left &= ~comp
    return out


# -- bad components and weights -----------------------------------------------


def _component_degrees(g: SubcubicGraph, comp: VertexSet) -> list[int]:
    return [g.degree(v) for v in members(comp)]


def is_c4_component(g: SubcubicGraph, comp: VertexSet) -> bool:
    """``comp`` is a connected component isomorphic to the 4-cycle."""
    return comp.bit_count() == 4 and all(d == 2 for d in _component_degrees(g, comp))


def is_k4star_component(g: SubcubicGraph, comp: VertexSet) -> bool:
    """``comp`` is a component isomorphic to K4 with one edge subdivided."""
    if comp.bit_count() != 5:
        return False
    vs = members(comp)
    degs = sorted(g.degree(v) for v in vs)
    if degs != [2, 3, 3, 3, 3]:
        return False
    s = next(v for v in vs if g.degree(v) == 2)
    a, b = g.adjacency[s]
    return not g.has_edge(a, b)


@dataclass(frozen=True)
class WeightReport:
    n0: int
    n1: int
    n2: int
    n3: int
    b1: int
    b2: int

    @property
    def b(self) -> int:
        return self.b1 + self.b2

    @property
    def omega(self) -> int:
        return 9 * self.n0 + 5 * self.n1 + 4 * self.n2 + 3 * self.n3 + 2 * self.b

    @property
    def vertex_count(self) -> int:
        return self.n0 + self.n1 + self.n2 + self.n3


def classify_bad_components(g: SubcubicGraph) -> WeightReport:
    """Degree tallies, C4- and K4*-component counts, and the graph weight."""
    b1 = b2 = 0
    for comp in components(g):
        size = comp.bit_count()
        if size == 4 and is_c4_component(g, comp):
            b1 += 1
        elif size == 5 and is_k4star_component(g, comp):
            b2 += 1
    n0, n1, n2, n3 = g.degree_tally()
    return WeightReport(n0, n1, n2, n3, b1, b2)


def omega(g: SubcubicGraph) -> int:
    """Graph weight 9n0 + 5n1 + 4n2 + 3n3 + 2b.

    Not the same as ``set_weight(g, g.full_mask)``, which omits the ``2b`` term.
    """
    return classify_bad_components(g).omega


def vertex_weight(g: SubcubicGraph, v: int) -> int:
    d = g.degree(v)
    return 9 if d == 0 else 6 - d


def set_weight(g: SubcubicGraph, x: VertexSet) -> int:
    """Sum of vertex weights over ``x`` (weights taken in ``g``)."""
    return sum(vertex_weight(g, v) for v in members(x))


# -- closure --------------------------------------------------------------------


@dataclass(frozen=True)
class ClosureParts:
    """What the closure of ``x`` absorbs from ``G - x``."""

    x: VertexSet
    c4_components: tuple[VertexSet, ...]
    isolated: tuple[int, ...]

    @property
    def closure(self) -> VertexSet:
        m = self.x
        for c in self.c4_components:
            m |= c
        for w in self.isolated:
            m |= 1 << w
        return m


def _components_within(g: SubcubicGraph, allowed: VertexSet) -> list[VertexSet]:
    left = allowed
    out = []
    while left:
        start = left & -left
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for x in members(frontier):
                nxt |= g.nbr_mask[x]
            nxt &= allowed & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        left &= ~comp
    return out


def closure_parts(g: SubcubicGraph, x: VertexSet) -> ClosureParts:
    rest = g.full_mask & ~x
    c4s = []
    iso = []
    for comp in _components_within(g, rest):
        size = comp.bit_count()
        if size == 1:
            iso.append(comp.bit_length() - 1)
        elif size == 4:
            vs = members(comp)
            if all((g.nbr_mask[v] & comp).bit_count() == 2 for v in vs):
                c4s.append(comp)
    return ClosureParts(x, tuple(c4s), tuple(iso))


def closure(g: SubcubicGraph, x: VertexSet) -> VertexSet:
    """``x`` together with the isolated vertices and C4-components of ``G - x``."""
    return closure_parts(g, x).closure


# -- surgery --------------------------------------------------------------------


def induced_subgraph(g: SubcubicGraph, x: VertexSet) -> SubcubicGraph:
    """``G[x]`` relabelled to ``0..|x|-1`` in increasing parent order."""
    keep = members(x)
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges if x >> u & 1 and x >> v & 1]
    parent = [g.root_index(v) for v in keep]
    return SubcubicGraph.from_edges(len(keep), edges, parent)


def delete_vertices(g: SubcubicGraph, x: VertexSet) -> SubcubicGraph:
    return induced_subgraph(g, g.full_mask & ~x)


def delete_edge(g: SubcubicGraph, u: int, v: int) -> SubcubicGraph:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    e = (min(u, v), max(u, v))
    return SubcubicGraph.from_edges(g.n, [f for f in g.edges if f != e], g.parent)


def disjoint_union(g1: SubcubicGraph, g2: SubcubicGraph) -> SubcubicGraph:
    """``g1`` on ``0..n1-1`` followed by ``g2`` shifted by ``n1``."""
    k = g1.n
    edges = list(g1.edges) + [(u + k, v + k) for u, v in g2.edges]
    return SubcubicGraph.from_edges(g1.n + g2.n, edges)


@dataclass(frozen=True)
class Smoothing:
    """Result of suppressing every 2-vertex; may be a multigraph.

    ``kept`` lists the surviving vertices of the input in their new order and
    ``edges`` is the edge multiset in new indices.
    """

    kept: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def n(self) -> int:
        return len(self.kept)

    @property
    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    @property
    def graph(self) -> SubcubicGraph:
        if not self.is_simple:
            raise GraphError("smoothing produced parallel edges")
        return SubcubicGraph.from_edges(self.n, self.edges, self.kept)


def suppress_degree2(g: SubcubicGraph) -> Smoothing:
    """Smooth every 2-vertex: replace its two edges by one joining its neighbours.

    Raises ``NotSuppressible`` when a smoothing step would create a loop, which
    is what happens on a cycle component or on a 2-vertex whose two current
    neighbours coincide.
    """
    if g.n and not any(d == 3 for d in g.degrees):
        raise NotSuppressible("graph has no 3-vertex")
    # multigraph as adjacency lists with repetition
    adj: list[list[int]] = [list(a) for a in g.adjacency]
    alive = [True] * g.n
    for v in range(g.n):
        if g.degree(v) != 2:
            continue
        a, b = adj[v]
        if a == b:
            raise NotSuppressible(f"smoothing vertex {v} creates a loop at {a}")
        adj[a].remove(v)
        adj[b].remove(v)
        adj[a].append(b)
        adj[b].append(a)
        adj[v] = []
        alive[v] = False
    kept = tuple(v for v in range(g.n) if alive[v])
    index = {v: i for i, v in enumerate(kept)}
    edges = []
    for u in kept:
        for w in adj[u]:
            if u < w:
                edges.append((index[u], index[w]))
    edges.sort()
    return Smoothing(tuple(g.root_index(v) for v in kept), tuple(edges))


def iter_pairs(mask: VertexSet) -> Iterator[tuple[int, int]]:
    vs = members(mask)
    for i, u in enumerate(vs):
        for v in vs[i + 1 :]:
            yield u, v


def bfs_distances(g: SubcubicGraph, source: int) -> list[float]:
    """Distances from ``source`` to every vertex (``math.inf`` if unreachable)."""
    dist: list[float] = [math.inf] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        x = q.popleft()
        for y in g.adjacency[x]:
            if dist[y] == math.inf:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist
