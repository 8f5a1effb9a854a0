"""Contracting a 4-cycle that hangs on exactly two edges, and lifting broadcasts back.

Given an induced 4-cycle ``C`` whose only edges to the rest of the graph are
``u1 v1`` and ``u2 v2`` with ``u1 != u2``, the contracted graph replaces ``C``
by a single new vertex ``w`` adjacent to ``u1`` and ``u2``.  Any dominating
broadcast of the contracted graph with ``f(w) != 2`` lifts to one of the
original graph costing exactly one more.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .broadcast import Broadcast, covered_set, is_dominating, normalize_away_2
from .graph import (
    GraphError,
    SubcubicGraph,
    VertexSet,
    boundary,
    classify_bad_components,
    delete_edge,
    mask_of,
    omega,
    set_weight,
)
from .solver import gamma_exact

__all__ = [
    "ReductionError",
    "Case1NotSupported",
    "LiftFailed",
    "SeparatedC4",
    "ContractionResult",
    "LiftOutcome",
    "EdgeDeletionDelta",
    "induced_four_cycles",
    "find_two_edge_c4s",
    "find_separated_c4",
    "contract_c4",
    "lift_broadcast",
    "lift_with_details",
    "round_trip",
    "edge_deletion_weight_delta",
    "hang_c4",
]


class ReductionError(ValueError):
    pass


class Case1NotSupported(ReductionError):
    """Both boundary edges of the 4-cycle meet the same outside vertex."""


class LiftFailed(RuntimeError):
    pass


@dataclass(frozen=True)
class SeparatedC4:
    """``cycle`` lists the four vertices in cyclic order; ``u_i v_i`` are the
    two boundary edges with ``v_i`` on the cycle."""

    cycle: tuple[int, int, int, int]
    u1: int
    u2: int
    v1: int
    v2: int

    @property
    def case(self) -> Literal[1, 2]:
        return 1 if self.u1 == self.u2 else 2

    @property
    def mask(self) -> VertexSet:
        return mask_of(self.cycle)

    def swapped(self) -> "SeparatedC4":
        return SeparatedC4(self.cycle, self.u2, self.u1, self.v2, self.v1)

    def opposite(self, v: int) -> int:
        """The cycle vertex not adjacent to ``v``."""
        k = self.cycle.index(v)
        return self.cycle[(k + 2) % 4]


def induced_four_cycles(g: SubcubicGraph) -> list[tuple[int, int, int, int]]:
    """Chordless 4-cycles as ``(a, b, c, d)`` with ``a`` smallest and ``b < d``."""
    out = []
    for a in range(g.n):
        nb = [x for x in g.adjacency[a] if x > a]
        for i, b in enumerate(nb):
            for d in nb[i + 1 :]:
                if g.has_edge(b, d):
                    continue
                for c in g.adjacency[b]:
                    if c > a and c != d and g.has_edge(c, d) and not g.has_edge(a, c):
                        out.append((a, b, c, d))
    return sorted(out)


def find_two_edge_c4s(g: SubcubicGraph) -> list[SeparatedC4]:
    """Every induced 4-cycle with exactly two boundary edges, both cases included."""
    found = []
    for cyc in induced_four_cycles(g):
        edges = boundary(g, mask_of(cyc))
        if len(edges) != 2:
            continue
        (v1, u1), (v2, u2) = sorted(edges, key=lambda e: (e[1], e[0]))
        found.append(SeparatedC4(cyc, u1, u2, v1, v2))
    return found


def hang_c4(base: SubcubicGraph, u1: int, u2: int, opposite: bool = False) -> SubcubicGraph:
    """Append a 4-cycle ``n, n+1, n+2, n+3`` joined to ``base`` by ``u1 - n``
    and ``u2 - (n+2 if opposite else n+1)``."""
    n = base.n
    a, b, c, d = n, n + 1, n + 2, n + 3
    edges = list(base.edges) + [(a, b), (b, c), (c, d), (d, a), (u1, a), (u2, c if opposite else b)]
    return SubcubicGraph.from_edges(n + 4, edges)


def find_separated_c4(g: SubcubicGraph) -> list[SeparatedC4]:
    """Induced 4-cycles hanging on two edges to two distinct outside vertices."""
    return [s for s in find_two_edge_c4s(g) if s.case == 2]


def _validate(g: SubcubicGraph, s: SeparatedC4) -> None:
    a, b, c, d = s.cycle
    if not all(g.has_edge(x, y) for x, y in ((a, b), (b, c), (c, d), (d, a))):
        raise ReductionError(f"{s.cycle} is not a 4-cycle")
    if g.has_edge(a, c) or g.has_edge(b, d):
        raise ReductionError(f"{s.cycle} has a chord")
    got = {tuple(e) for e in boundary(g, s.mask)}
    if got != {(s.v1, s.u1), (s.v2, s.u2)}:
        raise ReductionError(f"boundary of {s.cycle} is {sorted(got)}")


@dataclass(frozen=True)
class ContractionResult:
    """``back_map[i]`` is the original vertex behind contracted vertex ``i``,
    ``None`` for ``w``.

    ``weight_delta_checked`` is false when ``b(G)`` or ``b(G')`` is nonzero,
    in which case the drop of 10 in ``omega`` is not expected.
    """

    contracted_graph: SubcubicGraph
    w: int
    back_map: tuple[int | None, ...]
    omega_before: int
    omega_after: int
    b_before: int
    b_after: int
    cycle_weight: int

    @property
    def weight_delta(self) -> int:
        return self.omega_after - self.omega_before

    @property
    def weight_delta_checked(self) -> bool:
        return self.b_before == 0 and self.b_after == 0

    @property
    def weight_delta_ok(self) -> bool | None:
        if not self.weight_delta_checked:
            return None
        return self.weight_delta == -10

    def index_of(self, original: int) -> int:
        return self.back_map.index(original)


def contract_c4(g: SubcubicGraph, s: SeparatedC4) -> ContractionResult:
    _validate(g, s)
    if s.case == 1:
        raise Case1NotSupported(f"both boundary edges of {s.cycle} meet vertex {s.u1}")
    keep = [v for v in range(g.n) if not s.mask >> v & 1]
    new_index = {v: i for i, v in enumerate(keep)}
    w = len(keep)
    edges = [
        (new_index[u], new_index[v]) for u, v in g.edges if u in new_index and v in new_index
    ]
    edges += [(new_index[s.u1], w), (new_index[s.u2], w)]
    h = SubcubicGraph.from_edges(w + 1, edges)
    rep_g = classify_bad_components(g)
    rep_h = classify_bad_components(h)
    return ContractionResult(
        contracted_graph=h,
        w=w,
        back_map=tuple(keep) + (None,),
        omega_before=rep_g.omega,
        omega_after=rep_h.omega,
        b_before=rep_g.b,
        b_after=rep_h.b,
        cycle_weight=set_weight(g, s.mask),
    )


@dataclass(frozen=True)
class LiftOutcome:
    broadcast: Broadcast
    v_star: int
    rule: str
    labelling_swapped: bool = False


def _extend(g: SubcubicGraph, cr: ContractionResult, f: Broadcast) -> list[int]:
    vals = [0] * g.n
    for i, x in enumerate(f.values):
        orig = cr.back_map[i]
        if orig is not None:
            vals[orig] = x
    return vals


def _attempt(g: SubcubicGraph, vals: list[int], v_star: int, value: int) -> Broadcast | None:
    out = list(vals)
    out[v_star] = value
    b = Broadcast(g, tuple(out))
    return b if is_dominating(b) else None


def _rule_choice(
    g: SubcubicGraph, s: SeparatedC4, vals: list[int], fw: int
) -> tuple[int, str, bool] | None:
    if fw == 1:
        ball_u1 = g.ball2_masks[s.u1]
        ball_u2 = g.ball2_masks[s.u2]
        for v in sorted(s.cycle):
            if ball_u1 >> v & 1 and ball_u2 >> v & 1:
                return v, "within-two-of-both", False
        return None
    heard = covered_set(Broadcast(g, tuple(vals)))
    # w heard through one of its two neighbours; name that side u1
    for side in (s, s.swapped()):
        if heard >> side.u1 & 1 and heard >> side.v1 & 1:
            swapped = side is not s
            if heard >> side.u2 & 1:
                return side.opposite(side.v1), "opposite-v1", swapped
            return side.v2, "v2", swapped
    return None


def lift_with_details(
    g: SubcubicGraph, cr: ContractionResult, s: SeparatedC4, f: Broadcast
) -> LiftOutcome:
    """Lift ``f`` to ``g`` by raising one cycle vertex to ``f(w) + 1``.

    Raises ``ReductionError`` when ``f`` is not dominating or ``f(w) = 2``
    and ``LiftFailed`` when neither the rule's choice nor any other cycle
    vertex yields a dominating broadcast.
    """
    if f.graph != cr.contracted_graph:
        raise ReductionError("broadcast is not on the contracted graph")
    if not is_dominating(f):
        raise ReductionError("broadcast on the contracted graph is not dominating")
    fw = f[cr.w]
    if fw == 2:
        raise ReductionError("f(w) = 2; normalise it away first")
    vals = _extend(g, cr, f)
    choice = _rule_choice(g, s, vals, fw)
    if choice is not None:
        v_star, rule, swapped = choice
        out = _attempt(g, vals, v_star, fw + 1)
        if out is not None:
            return LiftOutcome(out, v_star, rule, swapped)
    for v_star in s.cycle:
        out = _attempt(g, vals, v_star, fw + 1)
        if out is not None:
            return LiftOutcome(out, v_star, "fallback")
    raise LiftFailed(f"no vertex of {s.cycle} completes the lift of {f.values}")


def lift_broadcast(
    g: SubcubicGraph, cr: ContractionResult, s: SeparatedC4, f: Broadcast
) -> Broadcast:
    return lift_with_details(g, cr, s, f).broadcast


@dataclass(frozen=True)
class RoundTrip:
    separated: SeparatedC4
    contraction: ContractionResult
    gamma_contracted: int
    gamma_original: int
    lifted: LiftOutcome

    @property
    def ok(self) -> bool:
        f = self.lifted.broadcast
        return (
            is_dominating(f)
            and f.cost == self.gamma_contracted + 1
            and self.gamma_original <= self.gamma_contracted + 1
        )


def round_trip(g: SubcubicGraph, s: SeparatedC4) -> RoundTrip:
    """Contract, solve the contracted graph exactly, clear ``f(w) = 2``, lift."""
    cr = contract_c4(g, s)
    sol = gamma_exact(cr.contracted_graph)
    f = sol.certificate
    if f[cr.w] == 2:
        f = normalize_away_2(f, cr.w)
    lifted = lift_with_details(g, cr, s, f)
    return RoundTrip(s, cr, sol.gamma, gamma_exact(g).gamma, lifted)


@dataclass(frozen=True)
class EdgeDeletionDelta:
    """``delta = omega(G - e) - omega(G)``.

    ``condition_held`` is true when neither endpoint has degree 1 and
    ``b(G) = b(G - e) = 0``; then ``delta`` is exactly 2.
    """

    edge: tuple[int, int]
    delta: int
    b_before: int
    b_after: int
    endpoint_degrees: tuple[int, int]

    @property
    def condition_held(self) -> bool:
        return 1 not in self.endpoint_degrees and self.b_before == 0 and self.b_after == 0

    @property
    def predicted(self) -> int:
        """Per-endpoint weight changes plus twice the change in ``b``."""
        per_end = sum(4 if d == 1 else 1 for d in self.endpoint_degrees)
        return per_end + 2 * (self.b_after - self.b_before)


def edge_deletion_weight_delta(g: SubcubicGraph, e: tuple[int, int]) -> EdgeDeletionDelta:
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    h = delete_edge(g, u, v)
    b0 = classify_bad_components(g).b
    b1 = classify_bad_components(h).b
    return EdgeDeletionDelta(
        edge=(min(u, v), max(u, v)),
        delta=omega(h) - omega(g),
        b_before=b0,
        b_after=b1,
        endpoint_degrees=(g.degree(u), g.degree(v)),
    )
