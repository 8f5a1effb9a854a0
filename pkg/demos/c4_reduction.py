"""
Contracting a 4-cycle that hangs on two edges
=============================================

Find the cycle, shrink it to one vertex, solve, and lift the answer back.
"""

from bdom import build, contract_c4, find_separated_c4, gamma_exact, is_dominating
from bdom.broadcast import to_literal
from bdom.reductions import hang_c4, lift_with_details, round_trip

# a 6-cycle with a 4-cycle attached at two opposite vertices
g = hang_c4(build([(i, (i + 1) % 6) for i in range(6)], 6), 0, 3, opposite=True)
(s,) = find_separated_c4(g)
print("cycle", s.cycle, "attached to", (s.u1, s.u2), "through", (s.v1, s.v2))

# contraction replaces the four cycle vertices with one vertex w of degree 2
cr = contract_c4(g, s)
print("n:", g.n, "->", cr.contracted_graph.n, " weight change:", cr.weight_delta)

# solve the smaller graph and lift the broadcast back
f = gamma_exact(cr.contracted_graph).certificate
out = lift_with_details(g, cr, s, f)
print("lifted", to_literal(out.broadcast), "rule:", out.rule, "dominating:", is_dominating(out.broadcast))

# the round trip checks cost gamma(G') + 1 against gamma(G)
rt = round_trip(g, s)
print("gamma(G') =", rt.gamma_contracted, " gamma(G) =", rt.gamma_original, " ok:", rt.ok)
