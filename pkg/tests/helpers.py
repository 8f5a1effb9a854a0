"""Shared test helpers: networkx conversion and a subcubic graph strategy."""

import os

import networkx as nx
from hypothesis import strategies as st

from bdom.graph import SubcubicGraph, build

EXTENDED = os.environ.get("BDOM_EXTENDED") == "1"


def to_nx(g: SubcubicGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> SubcubicGraph:
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return build([(index[u], index[v]) for u, v in h.edges], h.number_of_nodes())


@st.composite
def subcubic_graphs(draw, min_n=1, max_n=12):
    """Random subcubic graph: candidate pairs kept while degrees allow."""
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return build([], n)
    pairs = draw(
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n)
    )
    deg = [0] * n
    seen = set()
    edges = []
    for u, v in pairs:
        e = (min(u, v), max(u, v))
        if u == v or e in seen or deg[u] >= 3 or deg[v] >= 3:
            continue
        seen.add(e)
        deg[u] += 1
        deg[v] += 1
        edges.append(e)
    return build(edges, n)

