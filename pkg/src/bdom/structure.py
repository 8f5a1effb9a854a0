"""Local structure around a vertex: second-neighbourhood profiles, the
components that ``G - N_2[v]`` leaves behind, and the (r, a, i) case labels.

Several relations below are only guaranteed in a minimal counterexample to
the weight bound (minimum degree 2, no isolated 1-vertices, C4-components with
boundary 3 or 4, ...).  On arbitrary graphs each such relation sits behind an
explicit hypothesis check whose outcome is reported rather than assumed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .graph import (
    SubcubicGraph,
    VertexSet,
    ball2,
    boundary,
    classify_bad_components,
    closed_neighborhood,
    closure_parts,
    delete_vertices,
    induced_subgraph,
    iter_pairs,
    members,
    set_weight,
)
from .solver import gamma_exact

__all__ = [
    "StructureError",
    "NotInVStar",
    "NotApplicable",
    "StructureProfile",
    "SetProfile",
    "QCase",
    "CaseRow",
    "Q_CASES",
    "TABLE1",
    "Status",
    "InequalityCheck",
    "ChainReport",
    "profile",
    "set_profile",
    "classify_case",
    "check_boundary_identity",
    "check_chain_inequalities",
    "closure_weight_identity",
    "removal_identity",
    "on_triangle",
    "triangle_free",
    "IdentityCheck",
    "weight_parity",
    "weight_from_sizes",
    "weight_after_removing_3vertex",
    "closure_gamma",
]


class StructureError(ValueError):
    pass


class NotInVStar(StructureError):
    pass


class NotApplicable(StructureError):
    pass


def on_triangle(g: SubcubicGraph, v: int) -> bool:
    nb = g.adjacency[v]
    return any(g.has_edge(a, b) for i, a in enumerate(nb) for b in nb[i + 1 :])


@dataclass(frozen=True)
class StructureProfile:
    """Counts describing ``v``, its neighbours, and the annulus ``B = N_2[v] - N[v]``.

    ``beta`` is ``|B|``.  In a graph of minimum degree 2 it equals
    ``beta2 + beta3``; ``beta1`` records the 1-vertices that break that.
    """

    vertex: int
    degree: int
    p1: int
    p2: int
    p3: int
    B: VertexSet
    beta1: int
    beta2: int
    beta3: int
    ell: int
    on_triangle: bool

    @property
    def beta(self) -> int:
        return self.beta1 + self.beta2 + self.beta3

    @property
    def in_Vt(self) -> bool:
        """A 3-vertex on no triangle."""
        return self.degree == 3 and not self.on_triangle

    @property
    def in_Vstar(self) -> bool:
        return self.in_Vt and self.beta <= 5

    @property
    def in_Vstarstar(self) -> bool:
        """In ``V*`` and adjacent to a 2-vertex."""
        return self.in_Vstar and self.p2 >= 1

    @property
    def locally_min_degree_2(self) -> bool:
        """No 1-vertex among the neighbours of ``v`` or in ``B``."""
        return self.p1 == 0 and self.beta1 == 0


def profile(g: SubcubicGraph, v: int) -> StructureProfile:
    nb = g.adjacency[v]
    p = [0, 0, 0, 0]
    for u in nb:
        p[g.degree(u)] += 1
    B = ball2(g, v) & ~closed_neighborhood(g, v)
    beta = [0, 0, 0, 0]
    for u in members(B):
        beta[g.degree(u)] += 1
    ell = sum((g.nbr_mask[u] & B).bit_count() for u in members(B)) // 2
    return StructureProfile(
        vertex=v,
        degree=len(nb),
        p1=p[1],
        p2=p[2],
        p3=p[3],
        B=B,
        beta1=beta[1],
        beta2=beta[2],
        beta3=beta[3],
        ell=ell,
        on_triangle=on_triangle(g, v),
    )


@dataclass(frozen=True)
class SetProfile:
    """What ``G - X`` looks like from ``X``.

    ``a`` counts C4-components of ``G - X`` and ``a_by_boundary[t]`` those with
    ``t`` boundary edges; ``i`` counts isolated vertices of ``G - X`` and
    ``i_by_degree[t]`` those of degree ``t`` in ``G``.
    """

    X: VertexSet
    boundary_size: int
    c4_components: tuple[VertexSet, ...]
    isolated: tuple[int, ...]
    a_by_boundary: tuple[int, ...]
    i_by_degree: tuple[int, ...]
    closure: VertexSet

    @property
    def a(self) -> int:
        return len(self.c4_components)

    @property
    def i(self) -> int:
        return len(self.isolated)

    @property
    def a3(self) -> int:
        return self.a_by_boundary[3]

    @property
    def a4(self) -> int:
        return self.a_by_boundary[4]

    @property
    def i2(self) -> int:
        return self.i_by_degree[2]

    @property
    def i3(self) -> int:
        return self.i_by_degree[3]

    @property
    def standard(self) -> bool:
        """Every C4-component has 3 or 4 boundary edges and every isolated
        vertex has degree 2 or 3 in ``G``."""
        return self.a == self.a3 + self.a4 and self.i == self.i2 + self.i3


def set_profile(g: SubcubicGraph, x: VertexSet) -> SetProfile:
    parts = closure_parts(g, x)
    a_t = [0] * 5
    for c in parts.c4_components:
        a_t[len(boundary(g, c))] += 1
    i_t = [0] * 4
    for w in parts.isolated:
        i_t[g.degree(w)] += 1
    return SetProfile(
        X=x,
        boundary_size=len(boundary(g, x)),
        c4_components=parts.c4_components,
        isolated=parts.isolated,
        a_by_boundary=tuple(a_t),
        i_by_degree=tuple(i_t),
        closure=parts.closure,
    )


# -- case classification ------------------------------------------------------------


@dataclass(frozen=True)
class CaseRow:
    """One surviving case (r, a, i) and its side conditions."""

    tag: str
    r: int
    a: int
    i: int
    max_beta2_plus_ell: int
    i2: int | None = None
    beta: int | None = None
    max_beta2: int | None = None
    need_beta2_ell_zero: bool = False

    def side_conditions(self, prof: StructureProfile, sp: SetProfile) -> bool:
        b2l = prof.beta2 + prof.ell
        if b2l > self.max_beta2_plus_ell:
            return False
        if self.need_beta2_ell_zero and (prof.beta2 or prof.ell):
            return False
        if self.i2 is not None and sp.i2 != self.i2:
            return False
        if self.beta is not None and prof.beta != self.beta:
            return False
        if self.max_beta2 is not None and prof.beta2 > self.max_beta2:
            return False
        if self.tag == "Q301" and prof.beta2 == 0 and prof.ell == 0:
            return sp.boundary_size >= 2 * sp.i2 + 3 * sp.i3 + 2
        return True


Q_CASES: tuple[CaseRow, ...] = (
    CaseRow("Q301", r=3, a=0, i=1, max_beta2_plus_ell=1),
    CaseRow("Q402", r=4, a=0, i=2, max_beta2_plus_ell=2, i2=2, beta=5, max_beta2=1),
    CaseRow("Q410", r=4, a=1, i=0, max_beta2_plus_ell=0, need_beta2_ell_zero=True),
)

# cells of the (a, i) x r table that survive both r <= 2a + i + 2 and
# 9r > 16a + 6i + 2(beta2 + ell) + 18: (a, i) -> {r: largest allowed beta2 + ell}
TABLE1: dict[tuple[int, int], dict[int, int]] = {
    (0, 1): {3: 1},
    (0, 2): {4: 2},
    (0, 3): {5: 4},
    (1, 0): {4: 0},
    (1, 1): {5: 2},
    (1, 2): {6: 3},
    (1, 3): {6: 0, 7: 5},
    (2, 0): {6: 1},
    (2, 1): {7: 3},
    (2, 2): {7: 0},
}


@dataclass(frozen=True)
class QCase:
    vertex: int
    r: int
    a: int
    i: int
    beta2: int
    ell: int
    matched: str
    table_cell: bool
    set_profile: SetProfile = field(repr=False)

    @property
    def rai(self) -> tuple[int, int, int]:
        return (self.r, self.a, self.i)


def _table_cell(r: int, a: int, i: int, beta2: int, ell: int) -> bool:
    cond = TABLE1.get((a, i), {}).get(r)
    return cond is not None and beta2 + ell <= cond


def closure_gamma(g: SubcubicGraph, x: VertexSet) -> int:
    return gamma_exact(induced_subgraph(g, x)).gamma


def classify_case(g: SubcubicGraph, v: int) -> QCase:
    """(r, a, i) at ``X = N_2[v]`` and the matching surviving case, or ``"other"``."""
    prof = profile(g, v)
    if not prof.in_Vstar:
        raise NotInVStar(
            f"vertex {v}: degree {prof.degree}, on_triangle={prof.on_triangle}, beta={prof.beta}"
        )
    sp = set_profile(g, ball2(g, v))
    r = closure_gamma(g, sp.closure)
    matched = "other"
    for row in Q_CASES:
        if (r, sp.a, sp.i) == (row.r, row.a, row.i) and row.side_conditions(prof, sp):
            matched = row.tag
            break
    return QCase(
        vertex=v,
        r=r,
        a=sp.a,
        i=sp.i,
        beta2=prof.beta2,
        ell=prof.ell,
        matched=matched,
        table_cell=_table_cell(r, sp.a, sp.i, prof.beta2, prof.ell),
        set_profile=sp,
    )


# -- identities and inequalities ----------------------------------------------------


def _boundary_formula(prof: StructureProfile) -> int:
    return 2 * prof.beta2 + 3 * prof.beta3 - (3 + prof.p3 + 2 * prof.ell)


def check_boundary_identity(g: SubcubicGraph, v: int) -> bool:
    """Compare ``|boundary(N_2[v])|`` with ``2*beta2 + 3*beta3 - (3 + p3 + 2*ell)``.

    Needs a 3-vertex on no triangle with no 1-vertex within distance two.
    """
    prof = profile(g, v)
    if not prof.in_Vt:
        raise NotApplicable(f"vertex {v} is not a 3-vertex off every triangle")
    if not prof.locally_min_degree_2:
        raise NotApplicable(f"vertex {v} has a 1-vertex within distance two")
    direct = len(boundary(g, ball2(g, v)))
    return direct == _boundary_formula(prof)


class Status(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    HYPOTHESES_NOT_MET = "hypotheses-not-met"


@dataclass(frozen=True)
class InequalityCheck:
    name: str
    lhs: int
    rhs: int
    status: Status


@dataclass(frozen=True)
class ChainReport:
    vertex: int
    set_profile: SetProfile
    structure: StructureProfile
    r: int
    checks: tuple[InequalityCheck, ...]

    def by_name(self, name: str) -> InequalityCheck:
        return next(c for c in self.checks if c.name == name)

    @property
    def ok(self) -> bool:
        return all(c.status is not Status.FAILS for c in self.checks)


def _ineq(name: str, lhs: int, rhs: int, gate: bool) -> InequalityCheck:
    if not gate:
        return InequalityCheck(name, lhs, rhs, Status.HYPOTHESES_NOT_MET)
    return InequalityCheck(name, lhs, rhs, Status.HOLDS if lhs <= rhs else Status.FAILS)


def check_chain_inequalities(g: SubcubicGraph, v: int) -> ChainReport:
    """Evaluate the boundary chain and the two closure-cost bounds at ``X = N_2[v]``.

    Checked relations, each with its own gate:

    * ``3a + 2i <= 3a3 + 4a4 + 2i2 + 3i3``   (gate: ``a = a3 + a4``, ``i = i2 + i3``)
    * ``3a3 + 4a4 + 2i2 + 3i3 <= |boundary(X)|``  (no gate)
    * ``|boundary(X)| <= 2*beta - beta2 - 2*ell``   (gate: no 1-vertex near ``v``)
    * ``r <= 2a + i + 2``   (no gate)
    * ``r <= a3 + p3 + 3``  (gate: standard components, no 1-vertex near ``v``, ``p3 >= 1``)

    where ``r`` is the domination cost of ``G`` induced on the closure of ``X``.
    """
    prof = profile(g, v)
    if not prof.in_Vt:
        raise NotApplicable(f"vertex {v} is not a 3-vertex off every triangle")
    x = ball2(g, v)
    sp = set_profile(g, x)
    r = closure_gamma(g, sp.closure)
    weighted = 3 * sp.a3 + 4 * sp.a4 + 2 * sp.i2 + 3 * sp.i3
    local = prof.locally_min_degree_2
    checks = (
        _ineq("3a+2i<=3a3+4a4+2i2+3i3", 3 * sp.a + 2 * sp.i, weighted, sp.standard),
        _ineq("3a3+4a4+2i2+3i3<=|dX|", weighted, sp.boundary_size, True),
        _ineq("|dX|<=2beta-beta2-2ell", sp.boundary_size, 2 * prof.beta - prof.beta2 - 2 * prof.ell, local),
        _ineq("r<=2a+i+2", r, 2 * sp.a + sp.i + 2, True),
        _ineq("r<=a3+p3+3", r, sp.a3 + prof.p3 + 3, sp.standard and local and prof.p3 >= 1),
    )
    return ChainReport(v, sp, prof, r, checks)


@dataclass(frozen=True)
class IdentityCheck:
    applicable: bool
    lhs: int
    rhs: int
    reason: str = ""

    @property
    def holds(self) -> bool:
        return self.applicable and self.lhs == self.rhs


def closure_weight_identity(g: SubcubicGraph, v: int) -> IdentityCheck:
    """``w(C(X)) - |boundary(C(X))| = 16a + 6i + 2(beta2 + ell) + 18`` at ``X = N_2[v]``.

    Gate: ``v`` a 3-vertex off every triangle, no 1-vertex among its
    neighbours or in ``B``, every C4-component of ``G - X`` with 3 or 4
    boundary edges, every isolated vertex of ``G - X`` of degree 2 or 3.
    """
    prof = profile(g, v)
    x = ball2(g, v)
    sp = set_profile(g, x)
    lhs = set_weight(g, sp.closure) - len(boundary(g, sp.closure))
    rhs = 16 * sp.a + 6 * sp.i + 2 * (prof.beta2 + prof.ell) + 18
    if not prof.in_Vt:
        return IdentityCheck(False, lhs, rhs, "not a 3-vertex off every triangle")
    if not prof.locally_min_degree_2:
        return IdentityCheck(False, lhs, rhs, "1-vertex within distance two")
    if not sp.standard:
        return IdentityCheck(False, lhs, rhs, "C4-component or isolated vertex outside the standard range")
    return IdentityCheck(True, lhs, rhs)


def removal_identity(g: SubcubicGraph, x: VertexSet) -> IdentityCheck:
    """``|boundary(X)| + 3 n0(G-X) = w(G-X) - 2 b1(G-X) + w_G(X) - w(G)``.

    Gate: ``b(G) = 0``, ``b2(G - X) = 0`` and ``n0(G) = 0``.  The last one is
    implicit where the identity is used; without it an isolated vertex of ``G``
    outside ``X`` is counted on the left but contributes nothing on the right.
    """
    rep_g = classify_bad_components(g)
    rest = delete_vertices(g, x)
    rep_r = classify_bad_components(rest)
    lhs = len(boundary(g, x)) + 3 * rep_r.n0
    rhs = rep_r.omega - 2 * rep_r.b1 + set_weight(g, x) - rep_g.omega
    if rep_g.b or rep_r.b2 or rep_g.n0:
        return IdentityCheck(False, lhs, rhs, "b(G), b2(G-X) or n0(G) nonzero")
    return IdentityCheck(True, lhs, rhs)


def weight_parity(g: SubcubicGraph) -> IdentityCheck:
    """``w(G)`` is even (gate: ``n0(G) = 0``); reported as ``lhs = w(G) % 2``, ``rhs = 0``."""
    rep = classify_bad_components(g)
    if rep.n0:
        return IdentityCheck(False, rep.omega % 2, 0, "isolated vertex present")
    return IdentityCheck(True, rep.omega % 2, 0)


def weight_from_sizes(g: SubcubicGraph) -> IdentityCheck:
    """``w(G) = 6|V| - 2|E|`` (gate: ``n0(G) = 0`` and ``b(G) = 0``)."""
    rep = classify_bad_components(g)
    lhs, rhs = rep.omega, 6 * g.n - 2 * g.m
    if rep.n0 or rep.b:
        return IdentityCheck(False, lhs, rhs, "isolated vertex or bad component present")
    return IdentityCheck(True, lhs, rhs)


def weight_after_removing_3vertex(g: SubcubicGraph, v: int) -> IdentityCheck:
    """``w(G) = w(G - v)`` for a 3-vertex ``v``.

    Gate: ``n0(G) = 0``, ``b(G) = 0``, and ``G - v`` has no isolated vertex
    and no bad component.
    """
    rep = classify_bad_components(g)
    rest = classify_bad_components(delete_vertices(g, 1 << v))
    if g.degree(v) != 3 or rep.n0 or rep.b or rest.n0 or rest.b:
        return IdentityCheck(False, rep.omega, rest.omega, "hypotheses not met")
    return IdentityCheck(True, rep.omega, rest.omega)


def triangle_free(g: SubcubicGraph) -> bool:
    return not any(
        g.has_edge(a, b) for v in range(g.n) for a, b in iter_pairs(g.nbr_mask[v])
    )
