"""
The weight 9n0 + 5n1 + 4n2 + 3n3 + 2b
=====================================

Compute the weight of some graphs and compare it with 9 gamma.
"""

from bdom import classify_bad_components, gamma_exact, named, omega
from bdom.generator import enumerate_connected
from bdom.formats import to_graph6

# the two bad components each weigh 18 and need cost 2
for name in ("c4", "k4star"):
    g = named(name)
    print(f"{name:7s} omega = {omega(g)}  9*gamma = {9 * gamma_exact(g).gamma}",
          classify_bad_components(g))

# a cubic graph has omega = 3n, so the weight bound reads gamma <= n/3
g = named("k33")
print("K3,3    omega =", omega(g), " 9*gamma =", 9 * gamma_exact(g).gamma)

# every connected subcubic graph on 7 vertices, smallest slack first
rows = sorted((omega(h) - 9 * gamma_exact(h).gamma, to_graph6(h)) for h in enumerate_connected(7))
print("n = 7:", len(rows), "graphs, slack range", rows[0][0], "to", rows[-1][0])
print("tight ones:", [g6 for s, g6 in rows if s == 0])
