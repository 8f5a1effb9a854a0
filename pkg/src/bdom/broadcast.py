"""2-limited broadcasts: cost, hearing, domination, and value surgery."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graph import SubcubicGraph, VertexSet, disjoint_union, members

__all__ = [
    "Broadcast",
    "BroadcastError",
    "NotDominatingAfterNormalize",
    "OverlappingDomains",
    "MAX_VALUE",
    "cost",
    "covered_set",
    "is_dominating",
    "normalize_away_2",
    "union",
    "to_literal",
    "from_literal",
    "to_json",
]

MAX_VALUE = 2


class BroadcastError(ValueError):
    pass


class NotDominatingAfterNormalize(BroadcastError):
    pass


class OverlappingDomains(BroadcastError):
    pass


@dataclass(frozen=True)
class Broadcast:
    """A function V(G) -> {0, 1, 2} bound to one graph.

    Validity is recomputed on every call; nothing is cached here.
    """

    graph: SubcubicGraph
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.graph.n:
            raise BroadcastError(
                f"{len(self.values)} values for a graph on {self.graph.n} vertices"
            )
        for v, x in enumerate(self.values):
            if not 0 <= x <= MAX_VALUE:
                raise BroadcastError(f"f({v}) = {x} outside 0..{MAX_VALUE}")

    @classmethod
    def zeros(cls, g: SubcubicGraph) -> "Broadcast":
        return cls(g, (0,) * g.n)

    @classmethod
    def from_mapping(cls, g: SubcubicGraph, values: Mapping[int, int]) -> "Broadcast":
        vals = [0] * g.n
        for v, x in values.items():
            vals[v] = x
        return cls(g, tuple(vals))

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def with_value(self, v: int, x: int) -> "Broadcast":
        vals = list(self.values)
        vals[v] = x
        return Broadcast(self.graph, tuple(vals))

    @property
    def cost(self) -> int:
        return sum(self.values)

    @property
    def support(self) -> VertexSet:
        """Vertices with a positive value."""
        m = 0
        for v, x in enumerate(self.values):
            if x:
                m |= 1 << v
        return m

    def level_set(self, i: int) -> VertexSet:
        m = 0
        for v, x in enumerate(self.values):
            if x == i:
                m |= 1 << v
        return m

    def covered(self) -> VertexSet:
        return covered_set(self)

    def is_dominating(self) -> bool:
        return is_dominating(self)


def cost(f: Broadcast) -> int:
    return f.cost


def covered_set(f: Broadcast) -> VertexSet:
    """Vertices that hear from some positive vertex of ``f``."""
    g = f.graph
    m = 0
    for v, x in enumerate(f.values):
        if x == 1:
            m |= g.closed_masks[v]
        elif x == 2:
            m |= g.ball2_masks[v]
    return m


def is_dominating(f: Broadcast) -> bool:
    return covered_set(f) == f.graph.full_mask


def normalize_away_2(f: Broadcast, w: int) -> Broadcast:
    """Replace ``f(w) = 2`` by ``f(w) = 0`` and at least 1 on every neighbour of ``w``.

    The result is checked; ``NotDominatingAfterNormalize`` is raised when it no
    longer dominates (e.g. ``w`` isolated, or a vertex two steps from ``w``
    loses its only source).
    """
    if f[w] != 2:
        raise BroadcastError(f"f({w}) = {f[w]}, expected 2")
    vals = list(f.values)
    vals[w] = 0
    for x in f.graph.adjacency[w]:
        vals[x] = max(vals[x], 1)
    out = Broadcast(f.graph, tuple(vals))
    if not is_dominating(out):
        missing = members(f.graph.full_mask & ~covered_set(out))
        raise NotDominatingAfterNormalize(f"vertices {missing} hear from nothing")
    return out


def union(f1: Broadcast, f2: Broadcast, ambient: SubcubicGraph | None = None) -> Broadcast:
    """Pointwise combination of broadcasts on disjoint vertex sets.

    With ``ambient`` given, both graphs must be subgraphs of it (their parent
    maps say where each vertex lives) and the result is a broadcast on
    ``ambient``; vertices covered by neither part get 0.  Without ``ambient``
    the result lives on the disjoint union of the two graphs.
    """
    if ambient is None:
        return Broadcast(disjoint_union(f1.graph, f2.graph), f1.values + f2.values)
    g1, g2 = f1.graph, f2.graph
    dom1 = [g1.root_index(v) for v in range(g1.n)]
    dom2 = [g2.root_index(v) for v in range(g2.n)]
    clash = set(dom1) & set(dom2)
    if clash:
        raise OverlappingDomains(f"both parts contain ambient vertices {sorted(clash)}")
    vals = [0] * ambient.n
    for v, x in zip(dom1, f1.values):
        vals[v] = x
    for v, x in zip(dom2, f2.values):
        vals[v] = x
    return Broadcast(ambient, tuple(vals))


def lift_to_parent(f: Broadcast, parent: SubcubicGraph) -> Broadcast:
    """Place a broadcast on a subgraph into its parent graph (zeros elsewhere)."""
    vals = [0] * parent.n
    for v, x in enumerate(f.values):
        vals[f.graph.root_index(v)] = x
    return Broadcast(parent, tuple(vals))


def combine(parts: Iterable[Broadcast], ambient: SubcubicGraph) -> Broadcast:
    vals = [0] * ambient.n
    seen: set[int] = set()
    for f in parts:
        for v, x in enumerate(f.values):
            r = f.graph.root_index(v)
            if r in seen:
                raise OverlappingDomains(f"ambient vertex {r} appears twice")
            seen.add(r)
            vals[r] = x
    return Broadcast(ambient, tuple(vals))


# -- text forms -------------------------------------------------------------------


def to_literal(f: Broadcast) -> str:
    """``"v:f(v),..."`` listing the positive entries only."""
    return ",".join(f"{v}:{x}" for v, x in enumerate(f.values) if x)


def from_literal(g: SubcubicGraph, text: str) -> Broadcast:
    vals = [0] * g.n
    text = text.strip()
    if text:
        for item in text.split(","):
            try:
                v_s, x_s = item.split(":")
                v, x = int(v_s), int(x_s)
            except ValueError:
                raise BroadcastError(f"bad broadcast entry {item!r}") from None
            if not 0 <= v < g.n:
                raise BroadcastError(f"vertex {v} outside 0..{g.n - 1}")
            vals[v] = x
    return Broadcast(g, tuple(vals))


def to_json(f: Broadcast) -> str:
    return json.dumps(list(f.values))


def from_values(g: SubcubicGraph, values: Sequence[int]) -> Broadcast:
    return Broadcast(g, tuple(int(x) for x in values))
