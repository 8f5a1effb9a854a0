"""
Exact 2-limited broadcast domination on small graphs
=====================================================

Solve a few named graphs both ways and look at the certificates.
"""

from bdom import gamma_brute_force, gamma_exact, named
from bdom.broadcast import to_literal

# K_{3,3} has diameter 2, so one vertex broadcasting 2 reaches everything
g = named("k33")
sol = gamma_exact(g)
print("K3,3   gamma =", sol.gamma, " certificate", to_literal(sol.certificate))

# the Petersen graph also has diameter 2
pet = named("petersen")
print("Petersen gamma =", gamma_exact(pet).gamma, "(brute force", gamma_brute_force(pet).gamma, ")")

# paths and cycles need one unit per three vertices
for k in (5, 7, 9, 12):
    print(f"P{k}: {gamma_exact(named(f'p{k}')).gamma}   C{k}: {gamma_exact(named(f'c{k}')).gamma}")

# the search reports how much work it did
print("nodes explored on the cube:", gamma_exact(named("cube")).nodes_explored)
