import pytest
from hypothesis import given, strategies as st

from bdom.formats import from_graph6
from bdom.generator import enumerate_connected, named
from bdom.graph import (
    ball2,
    boundary,
    build,
    closed_neighborhood,
    closure_parts,
    induced_subgraph,
    mask_of,
    set_weight,
    vertex_weight,
)
from bdom.solver import gamma_brute_force
from bdom.structure import (
    Q_CASES,
    TABLE1,
    NotApplicable,
    NotInVStar,
    Status,
    check_boundary_identity,
    check_chain_inequalities,
    classify_case,
    closure_weight_identity,
    profile,
    removal_identity,
    set_profile,
    weight_after_removing_3vertex,
    weight_from_sizes,
    weight_parity,
)

from helpers import subcubic_graphs

# hand fixtures located by search over small triangle-free graphs, or built by hand;
# each case label below was confirmed by the exact solver on the closure
Q301_FIXTURE = ("FCOPW", 6)
Q410_FIXTURE = ("IO?B_WKCW", 6)
# v = 0 with one 2-neighbour, |B| = 5, two 2-vertices w1 = 9, w2 = 10 left isolated
Q402_EDGES = [
    (0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (2, 6), (3, 7), (3, 8), (9, 5), (9, 7),
    (10, 6), (10, 8), (4, 11), (5, 11), (6, 12), (7, 13), (8, 14), (11, 12), (12, 13), (13, 14),
]


# -- profile -------------------------------------------------------------------------


def test_petersen_profile():
    g = named("petersen")
    for v in range(g.n):
        p = profile(g, v)
        assert (p.p2, p.p3, p.beta, p.beta2, p.beta3) == (0, 3, 6, 0, 6)
        # 15 edges: 3 at v, 6 from N(v) into B, the remaining 6 lie inside B
        assert p.ell == 6
        assert p.in_Vt and not p.in_Vstar and not p.in_Vstarstar


def test_k4_vertices_on_triangles():
    g = named("k4")
    for v in range(4):
        p = profile(g, v)
        assert p.on_triangle and not p.in_Vt


def test_vstarstar_vertex():
    # v = 0 with neighbours 1 (degree 2), 2, 3; no triangle; |B| = 5
    g = build([(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (2, 6), (3, 7), (3, 8)], 9)
    p = profile(g, 0)
    assert p.p2 == 1 and p.beta == 5
    assert p.in_Vstar and p.in_Vstarstar


@given(subcubic_graphs())
def test_profile_invariants(g):
    for v in range(g.n):
        p = profile(g, v)
        assert p.B == ball2(g, v) & ~closed_neighborhood(g, v)
        assert p.beta == p.B.bit_count()
        assert p.p1 + p.p2 + p.p3 == p.degree
        if p.in_Vt:
            assert p.beta <= 3 + p.p3 - p.p1
        if p.in_Vstarstar:
            assert p.in_Vstar
        if p.in_Vstar:
            assert p.in_Vt and p.beta <= 5


# -- set profile ---------------------------------------------------------------------


def test_set_profile_whole_vertex_set():
    g = named("prism")
    sp = set_profile(g, g.full_mask)
    assert (sp.a, sp.i, sp.boundary_size) == (0, 0, 0)


def test_set_profile_star_center():
    sp = set_profile(named("k13"), 1 << 0)
    assert sp.i == 3 and sp.i_by_degree[1] == 3 and not sp.standard


def test_set_profile_c4_with_pendant_path():
    # C4 on 0..3, path 0-4-5
    g = build([(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)], 6)
    sp = set_profile(g, mask_of([4, 5]))
    assert sp.a == 1 and sp.a_by_boundary[1] == 1 and sp.a3 == sp.a4 == 0


@given(subcubic_graphs(), st.integers(0, 2**12 - 1))
def test_set_profile_tallies(g, raw):
    x = raw & g.full_mask
    sp = set_profile(g, x)
    assert sp.a3 + sp.a4 <= sp.a and sp.i2 + sp.i3 <= sp.i
    assert sp.boundary_size == len(boundary(g, x))
    assert sp.closure == closure_parts(g, x).closure


# -- identities ----------------------------------------------------------------------


@pytest.mark.parametrize("n", range(4, 10))
def test_boundary_identity_triangle_free(n):
    for g in enumerate_connected(n, triangle_free=True):
        for v in range(g.n):
            p = profile(g, v)
            if p.in_Vt and p.locally_min_degree_2:
                assert check_boundary_identity(g, v)


def test_boundary_identity_petersen():
    g = named("petersen")
    assert all(check_boundary_identity(g, v) for v in range(10))


def test_boundary_identity_not_applicable():
    with pytest.raises(NotApplicable):
        check_boundary_identity(named("c6"), 0)
    with pytest.raises(NotApplicable):
        check_boundary_identity(named("k4"), 0)
    with pytest.raises(NotApplicable):
        check_boundary_identity(named("k13"), 0)


@given(subcubic_graphs(), st.integers(0, 2**12 - 1))
def test_closure_decompositions(g, raw):
    x = raw & g.full_mask
    parts = closure_parts(g, x)
    cx = parts.closure
    assert set_weight(g, cx) == (
        set_weight(g, x)
        + sum(16 - len(boundary(g, c)) for c in parts.c4_components)
        + sum(vertex_weight(g, w) for w in parts.isolated)
    )
    assert len(boundary(g, cx)) == (
        len(boundary(g, x))
        - sum(len(boundary(g, c)) for c in parts.c4_components)
        - sum(g.degree(w) for w in parts.isolated)
    )


@given(subcubic_graphs(), st.integers(0, 2**12 - 1))
def test_removal_identity_under_gate(g, raw):
    chk = removal_identity(g, raw & g.full_mask)
    if chk.applicable:
        assert chk.lhs == chk.rhs


def test_removal_identity_gate_needs_no_isolated_vertex():
    # an isolated vertex of G outside X breaks the identity, so the gate must catch it
    g = build([(0, 1)], 3)
    chk = removal_identity(g, 1 << 0)
    assert not chk.applicable and chk.lhs != chk.rhs


@given(subcubic_graphs())
def test_weight_facts(g):
    for chk in (weight_parity(g), weight_from_sizes(g)):
        if chk.applicable:
            assert chk.holds
    for v in range(g.n):
        chk = weight_after_removing_3vertex(g, v)
        if chk.applicable:
            assert chk.holds


@pytest.mark.parametrize("n", range(4, 10))
def test_closure_weight_identity_under_gate(n):
    for g in enumerate_connected(n, triangle_free=True):
        for v in range(g.n):
            chk = closure_weight_identity(g, v)
            if chk.applicable:
                assert chk.holds, (g, v, chk)


def test_closure_weight_identity_reports_gate():
    chk = closure_weight_identity(named("k13"), 0)
    assert not chk.applicable and chk.reason


# -- chain inequalities --------------------------------------------------------------


@pytest.mark.parametrize("n", range(4, 10))
def test_chain_never_fails_when_gated(n):
    for g in enumerate_connected(n):
        for v in range(g.n):
            if not profile(g, v).in_Vt:
                continue
            rep = check_chain_inequalities(g, v)
            assert rep.ok, [c for c in rep.checks if c.status is Status.FAILS]


def test_chain_reports_unmet_hypotheses():
    # C4 hanging from v's second neighbourhood by a single edge
    g = build(
        [(0, 1), (0, 2), (0, 3), (1, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 5)], 9
    )
    rep = check_chain_inequalities(g, 0)
    assert rep.set_profile.a == 1 and rep.set_profile.a_by_boundary[1] == 1
    assert rep.by_name("3a+2i<=3a3+4a4+2i2+3i3").status is Status.HYPOTHESES_NOT_MET
    assert rep.by_name("r<=a3+p3+3").status is Status.HYPOTHESES_NOT_MET
    assert rep.by_name("r<=2a+i+2").status is Status.HOLDS


def test_chain_on_q410_fixture():
    g6, v = Q410_FIXTURE
    rep = check_chain_inequalities(from_graph6(g6), v)
    assert (rep.r, rep.set_profile.a, rep.set_profile.i) == (4, 1, 0)
    assert rep.by_name("r<=2a+i+2").status is Status.HOLDS


def test_chain_not_applicable_off_vt():
    with pytest.raises(NotApplicable):
        check_chain_inequalities(named("k4"), 0)


# -- case classification -------------------------------------------------------------


def test_table_matches_its_defining_inequalities():
    derived = {}
    for a in range(3):
        for i in range(4):
            if (a, i) == (0, 0) or a + i > 4:
                continue
            for r in range(3, 8):
                if r > 2 * a + i + 2:
                    continue
                slack = 9 * r - (16 * a + 6 * i + 18)
                if slack <= 0:
                    continue
                derived.setdefault((a, i), {})[r] = (slack - 1) // 2
    assert derived == TABLE1


def test_q_case_rows_are_table_cells():
    for row in Q_CASES:
        assert row.r in TABLE1[(row.a, row.i)]
        assert row.max_beta2_plus_ell == TABLE1[(row.a, row.i)][row.r]


def test_classify_petersen_not_in_vstar():
    with pytest.raises(NotInVStar):
        classify_case(named("petersen"), 0)


def test_classify_q301_fixture():
    g6, v = Q301_FIXTURE
    q = classify_case(from_graph6(g6), v)
    assert q.rai == (3, 0, 1) and q.matched == "Q301" and q.table_cell


def test_classify_q410_fixture():
    g6, v = Q410_FIXTURE
    q = classify_case(from_graph6(g6), v)
    assert q.rai == (4, 1, 0) and q.matched == "Q410"


def test_classify_q402_fixture():
    g = build(Q402_EDGES, 15)
    p = profile(g, 0)
    assert (p.p2, p.beta, p.beta2, p.ell) == (1, 5, 1, 0)
    q = classify_case(g, 0)
    assert q.rai == (4, 0, 2) and q.matched == "Q402"
    assert q.set_profile.i2 == 2


def test_r_matches_brute_force_on_small_closures():
    for n in range(4, 9):
        for g in enumerate_connected(n, triangle_free=True):
            for v in range(g.n):
                if profile(g, v).in_Vstar:
                    q = classify_case(g, v)
                    sub = induced_subgraph(g, q.set_profile.closure)
                    assert q.r == gamma_brute_force(sub).gamma


def test_other_is_legitimate_on_arbitrary_graphs():
    tags = set()
    for g in enumerate_connected(8, triangle_free=True):
        for v in range(g.n):
            if profile(g, v).in_Vstar:
                tags.add(classify_case(g, v).matched)
    assert "other" in tags
