"""
Second neighbourhoods and their closures
========================================

Profile a vertex, close off its ball of radius 2, and classify it.
"""

from bdom import check_boundary_identity, classify_case, closure_weight_identity, from_graph6, named, profile
from bdom.generator import enumerate_connected
from collections import Counter

# Petersen: every vertex sees 6 vertices at distance 2, all of degree 3
p = profile(named("petersen"), 0)
print("Petersen:", "beta =", p.beta, "beta3 =", p.beta3, "edges inside B =", p.ell)
print("boundary identity:", check_boundary_identity(named("petersen"), 0))

# a 7-vertex graph whose vertex 6 has two neighbours of degree 2
g = from_graph6("FCOPW")
p = profile(g, 6)
print("p2 =", p.p2, "beta =", p.beta, "in V* =", p.in_Vstar)
q = classify_case(g, 6)
print("case (r, a, i) =", q.rai, "->", q.matched)

# the closure identity only applies without 1-vertices nearby
print("here:", closure_weight_identity(g, 6).reason)
chk = closure_weight_identity(from_graph6("GgGO_["), 7)
print("on GgGO_[ at 7:", chk.lhs, "==", chk.rhs)

# how often each case shows up on triangle-free graphs of order 9
tags = Counter(
    classify_case(h, v).matched
    for h in enumerate_connected(9, triangle_free=True)
    for v in range(h.n)
    if profile(h, v).in_Vstar
)
print(dict(tags))
