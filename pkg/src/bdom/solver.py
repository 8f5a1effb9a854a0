"""Exact 2-limited broadcast domination number.

The search treats every vertex ``v`` as two candidate actions, ``(v, 1)``
covering ``N[v]`` at cost 1 and ``(v, 2)`` covering the radius-2 ball at cost
2, and solves the resulting minimum-cost cover by branch-and-bound.  The
brute-force oracle shares none of that machinery: it computes its own BFS
distances and enumerates broadcasts by increasing total cost.
"""

from __future__ import annotations

import enum
import itertools
import math
import time
from collections import deque
from dataclasses import dataclass

from .broadcast import Broadcast, combine, is_dominating
from .graph import SubcubicGraph, components, induced_subgraph, members

__all__ = [
    "Method",
    "SolveResult",
    "SizeLimitExceeded",
    "SolveTimeout",
    "DEFAULT_CAP",
    "BRUTE_FORCE_CAP",
    "gamma_exact",
    "gamma_brute_force",
    "greedy_upper_bound",
    "counting_lower_bound",
    "solve",
]

DEFAULT_CAP = 64
BRUTE_FORCE_CAP = 12


class SizeLimitExceeded(ValueError):
    pass


class SolveTimeout(RuntimeError):
    pass


class Method(str, enum.Enum):
    BRUTE_FORCE = "brute"
    BRANCH_AND_BOUND = "bb"


@dataclass(frozen=True)
class SolveResult:
    gamma: int
    certificate: Broadcast
    nodes_explored: int
    method: Method


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


# -- bounds -------------------------------------------------------------------------


def counting_lower_bound(g: SubcubicGraph) -> int:
    """Sum over components of ceil(|component| / 5).

    A value-2 vertex reaches at most 10 vertices and a value-1 vertex at most
    4, so one unit of cost never covers more than 5 vertices.
    """
    return sum(_ceil_div(c.bit_count(), 5) for c in components(g))


def greedy_upper_bound(g: SubcubicGraph) -> tuple[int, Broadcast]:
    """Dominating broadcast built by best newly-covered-per-cost steps.

    Ties go to the lower vertex index, then the lower value.  Raising a vertex
    from 1 to 2 is charged 1.
    """
    vals = [0] * g.n
    covered = 0
    full = g.full_mask
    while covered != full:
        unc = full & ~covered
        best = None  # (gain, extra_cost, v, value)
        for v in range(g.n):
            for value, mask in ((1, g.closed_masks[v]), (2, g.ball2_masks[v])):
                if value <= vals[v]:
                    continue
                extra = value - vals[v]
                gain = (mask & unc).bit_count()
                if gain == 0:
                    continue
                if best is None or gain * best[1] > best[0] * extra:
                    best = (gain, extra, v, value)
        assert best is not None
        _, _, v, value = best
        vals[v] = value
        covered |= g.closed_masks[v] if value == 1 else g.ball2_masks[v]
    f = Broadcast(g, tuple(vals))
    return f.cost, f


# -- branch and bound ---------------------------------------------------------------


class _Search:
    def __init__(self, g: SubcubicGraph, deadline: float | None) -> None:
        self.g = g
        self.n = g.n
        self.full = g.full_mask
        self.deadline = deadline
        # action index a: vertex a >> 1, value (a & 1) + 1
        masks = []
        for v in range(g.n):
            masks.append(g.closed_masks[v])
            masks.append(g.ball2_masks[v])
        self.masks = masks
        # actions covering each vertex, sorted by index for determinism
        self.covering: list[list[int]] = [[] for _ in range(g.n)]
        for a, m in enumerate(masks):
            for u in members(m):
                self.covering[u].append(a)
        self.nodes = 0
        ub, f = greedy_upper_bound(g)
        self.best_cost = ub
        self.best_vals = list(f.values)

    def run(self) -> None:
        self._rec(0, 0, 0, [])

    def _lower_bound(self, unc: int, used: int) -> int:
        # best coverage per two units of cost among unused vertices
        best2 = 0
        masks = self.masks
        for v in range(self.n):
            if used >> v & 1:
                continue
            g1 = (masks[2 * v] & unc).bit_count() * 2
            g2 = (masks[2 * v + 1] & unc).bit_count()
            if g1 > best2:
                best2 = g1
            if g2 > best2:
                best2 = g2
        if best2 == 0:
            return math.inf  # type: ignore[return-value]
        return _ceil_div(2 * unc.bit_count(), best2)

    def _rec(self, covered: int, cost: int, used: int, chosen: list[int]) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes & 1023 == 1 and time.monotonic() > self.deadline:
            raise SolveTimeout("branch-and-bound exceeded its time budget")
        if covered == self.full:
            if cost < self.best_cost:
                self.best_cost = cost
                vals = [0] * self.n
                for a in chosen:
                    vals[a >> 1] = (a & 1) + 1
                self.best_vals = vals
            return
        unc = self.full & ~covered
        if cost + self._lower_bound(unc, used) >= self.best_cost:
            return
        # fail-first: uncovered vertex with the fewest available actions
        branch_u = -1
        branch_count = 1 << 30
        for u in members(unc):
            c = 0
            for a in self.covering[u]:
                if not used >> (a >> 1) & 1:
                    c += 1
            if c < branch_count:
                branch_count = c
                branch_u = u
                if c <= 1:
                    break
        cands = [a for a in self.covering[branch_u] if not used >> (a >> 1) & 1]
        gains = {a: self.masks[a] & unc for a in cands}
        kept = []
        for a in cands:
            sa = gains[a]
            ca = (a & 1) + 1
            dominated = False
            for b in cands:
                if b == a:
                    continue
                sb = gains[b]
                cb = (b & 1) + 1
                if cb > ca or sa & ~sb:
                    continue
                # b covers everything a still needs, no dearer
                if sb != sa or cb < ca or b < a:
                    dominated = True
                    break
            if not dominated:
                kept.append(a)
        kept.sort(key=lambda a: (-gains[a].bit_count() * (2 if a & 1 == 0 else 1), a))
        for a in kept:
            c = (a & 1) + 1
            if cost + c >= self.best_cost:
                continue
            chosen.append(a)
            self._rec(covered | self.masks[a], cost + c, used | (1 << (a >> 1)), chosen)
            chosen.pop()


def _check_cap(g: SubcubicGraph, cap: int) -> None:
    if g.n > cap:
        raise SizeLimitExceeded(f"{g.n} vertices exceeds the cap of {cap}")


def _solve_connected_bb(g: SubcubicGraph, deadline: float | None) -> tuple[int, Broadcast, int]:
    s = _Search(g, deadline)
    s.run()
    return s.best_cost, Broadcast(g, tuple(s.best_vals)), s.nodes


def gamma_exact(
    g: SubcubicGraph, cap: int = DEFAULT_CAP, timeout: float | None = None
) -> SolveResult:
    """Exact gamma_{b,2} by branch-and-bound, solved component by component."""
    _check_cap(g, cap)
    deadline = None if timeout is None else time.monotonic() + timeout
    comps = components(g)
    if len(comps) == 1:
        gamma, cert, nodes = _solve_connected_bb(g, deadline)
        return SolveResult(gamma, cert, nodes, Method.BRANCH_AND_BOUND)
    total = 0
    nodes = 0
    parts = []
    for comp in comps:
        h = induced_subgraph(g, comp)
        # parent indices of h point at g's own root; re-anchor on g
        h = _reanchor(h, comp)
        gamma, cert, k = _solve_connected_bb(h, deadline)
        total += gamma
        nodes += k
        parts.append(cert)
    return SolveResult(total, combine(parts, g), nodes, Method.BRANCH_AND_BOUND)


def _reanchor(h: SubcubicGraph, comp: int) -> SubcubicGraph:
    return SubcubicGraph(h.n, h.adjacency, tuple(members(comp)))


# -- brute force oracle -------------------------------------------------------------


def _all_pairs_distances(g: SubcubicGraph) -> list[list[float]]:
    out = []
    for s in range(g.n):
        dist = [math.inf] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.adjacency[x]:
                if dist[y] == math.inf:
                    dist[y] = dist[x] + 1
                    q.append(y)
        out.append(dist)
    return out


def gamma_brute_force(g: SubcubicGraph, cap: int = BRUTE_FORCE_CAP) -> SolveResult:
    """Iterative deepening on total cost; the first dominating broadcast is optimal."""
    _check_cap(g, cap)
    n = g.n
    dist = _all_pairs_distances(g)
    # reach[k][v]: bitmask of vertices within distance k of v
    reach = [
        [sum(1 << u for u in range(n) if dist[v][u] <= k) for v in range(n)] for k in (0, 1, 2)
    ]
    full = (1 << n) - 1
    nodes = 0
    for total in range(0, n + 1):
        for twos in range(total // 2, -1, -1):
            ones = total - 2 * twos
            if twos + ones > n:
                continue
            for two_set in itertools.combinations(range(n), twos):
                m2 = 0
                for v in two_set:
                    m2 |= reach[2][v]
                rest = [v for v in range(n) if v not in two_set]
                for one_set in itertools.combinations(rest, ones):
                    nodes += 1
                    m = m2
                    for v in one_set:
                        m |= reach[1][v]
                    if m == full:
                        vals = [0] * n
                        for v in two_set:
                            vals[v] = 2
                        for v in one_set:
                            vals[v] = 1
                        return SolveResult(total, Broadcast(g, tuple(vals)), nodes, Method.BRUTE_FORCE)
    raise AssertionError("no dominating broadcast found; value-1 everywhere always dominates")


def solve(
    g: SubcubicGraph, method: Method | str = Method.BRANCH_AND_BOUND, cap: int | None = None,
    timeout: float | None = None,
) -> SolveResult:
    method = Method(method)
    if method is Method.BRUTE_FORCE:
        return gamma_brute_force(g, BRUTE_FORCE_CAP if cap is None else cap)
    return gamma_exact(g, DEFAULT_CAP if cap is None else cap, timeout)


def verify_certificate(result: SolveResult) -> bool:
    f = result.certificate
    return f.cost == result.gamma and is_dominating(f)
