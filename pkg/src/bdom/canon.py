"""Canonical labelling by colour refinement plus individualisation.

The search tree is the usual one: refine to an equitable colouring, pick the
first non-singleton cell, individualise each of its vertices in turn, recurse.
Leaves are compared by their relabelled adjacency rows and the largest one is
kept.  Automorphisms found at equal leaves prune siblings lying in the same
orbit under the automorphisms that fix the current prefix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import SubcubicGraph

__all__ = ["Labelling", "canonical_labelling", "canonical_form", "canonical_graph"]

Perm = tuple[int, ...]


def _refine(adj: tuple[tuple[int, ...], ...], colors: list[int], k: int) -> tuple[list[int], int]:
    n = len(colors)
    while True:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in adj[v]]))) for v in range(n)]
        uniq = sorted(set(sigs))
        if len(uniq) == k:
            return colors, k
        rank = {s: i for i, s in enumerate(uniq)}
        colors = [rank[s] for s in sigs]
        k = len(uniq)


def _individualise(colors: list[int], v: int) -> list[int]:
    c = colors[v]
    return [2 * x + (1 if x == c and u != v else 0) for u, x in enumerate(colors)]


def _normalise(colors: list[int]) -> tuple[list[int], int]:
    uniq = sorted(set(colors))
    rank = {s: i for i, s in enumerate(uniq)}
    return [rank[x] for x in colors], len(uniq)


@dataclass(frozen=True)
class Labelling:
    """``position[v]`` is the canonical label of vertex ``v``."""

    position: Perm
    certificate: tuple[int, ...]
    automorphisms: tuple[Perm, ...]


class _Canon:
    def __init__(self, g: SubcubicGraph) -> None:
        self.adj = g.adjacency
        self.n = g.n
        self.first: tuple[tuple[int, ...], Perm] | None = None
        self.best: tuple[tuple[int, ...], Perm] | None = None
        self.autos: list[Perm] = []

    def _cert(self, lab: list[int]) -> tuple[int, ...]:
        rows = [0] * self.n
        for v in range(self.n):
            r = 0
            for u in self.adj[v]:
                r |= 1 << lab[u]
            rows[lab[v]] = r
        return tuple(rows)

    def _leaf(self, lab: list[int]) -> None:
        cert = self._cert(lab)
        perm = tuple(lab)
        if self.first is None:
            self.first = self.best = (cert, perm)
            return
        assert self.best is not None
        for ref_cert, ref_lab in (self.first, self.best):
            if cert == ref_cert:
                inv = [0] * self.n
                for v, p in enumerate(ref_lab):
                    inv[p] = v
                self.autos.append(tuple(inv[perm[x]] for x in range(self.n)))
                return
        if cert > self.best[0]:
            self.best = (cert, perm)

    def _orbit_rep(self, prefix: list[int], cell: list[int]) -> dict[int, int]:
        parent = {v: v for v in cell}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in self.autos:
            if any(a[p] != p for p in prefix):
                continue
            for v in cell:
                w = a[v]
                if w in parent:
                    rv, rw = find(v), find(w)
                    if rv != rw:
                        if rv < rw:
                            parent[rw] = rv
                        else:
                            parent[rv] = rw
        return {v: find(v) for v in cell}

    def search(self, colors: list[int], k: int, prefix: list[int]) -> None:
        if k == self.n:
            self._leaf(colors)
            return
        counts = [0] * k
        for c in colors:
            counts[c] += 1
        target = next(c for c in range(k) if counts[c] > 1)
        cell = [v for v in range(self.n) if colors[v] == target]
        done: list[int] = []
        n_autos = -1
        reps: dict[int, int] = {}
        for v in cell:
            if done:
                if len(self.autos) != n_autos:
                    reps = self._orbit_rep(prefix, cell)
                    n_autos = len(self.autos)
                if any(reps[v] == reps[d] for d in done):
                    continue
            done.append(v)
            child, ck = _normalise(_individualise(colors, v))
            child, ck = _refine(self.adj, child, ck)
            prefix.append(v)
            self.search(child, ck, prefix)
            prefix.pop()


def canonical_labelling(g: SubcubicGraph) -> Labelling:
    c = _Canon(g)
    if g.n == 0:
        return Labelling((), (), ())
    colors, k = _normalise(list(g.degrees))
    colors, k = _refine(g.adjacency, colors, k)
    c.search(colors, k, [])
    assert c.best is not None
    return Labelling(c.best[1], c.best[0], tuple(c.autos))


def canonical_graph(g: SubcubicGraph) -> SubcubicGraph:
    """Copy of ``g`` relabelled canonically; isomorphic inputs give equal outputs."""
    lab = canonical_labelling(g).position
    return SubcubicGraph.from_edges(g.n, [(lab[u], lab[v]) for u, v in g.edges])


def canonical_form(g: SubcubicGraph) -> bytes:
    """Isomorphism-invariant byte string: equal iff the graphs are isomorphic."""
    from .formats import to_graph6

    return to_graph6(canonical_graph(g)).encode("ascii")
