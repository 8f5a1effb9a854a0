"""graph6 / sparse6 codecs and the plain adjacency-list fixture format.

The graph6 and sparse6 encoders follow nauty's ``formats.txt`` byte for byte,
including the sparse6 padding rule for ``n`` a small power of two.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import GraphError, SubcubicGraph

__all__ = [
    "FormatError",
    "to_graph6",
    "from_graph6",
    "to_sparse6",
    "from_sparse6",
    "parse_graph_line",
    "read_graphs",
    "write_graph6_lines",
    "to_adjacency_text",
    "from_adjacency_text",
]

GRAPH6_HEADER = ">>graph6<<"
SPARSE6_HEADER = ">>sparse6<<"


class FormatError(GraphError):
    pass


def _encode_n(n: int) -> str:
    if n < 0:
        raise FormatError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise FormatError("too many vertices for graph6")


def _decode_n(data: str) -> tuple[int, int]:
    """Return (n, number of characters consumed)."""
    if not data:
        raise FormatError("empty graph6 body")
    if data[0] != "~":
        return ord(data[0]) - 63, 1
    if len(data) > 1 and data[1] == "~":
        chunk = data[2:8]
        width, used = 6, 8
    else:
        chunk = data[1:4]
        width, used = 3, 4
    if len(chunk) != width:
        raise FormatError("truncated vertex count")
    n = 0
    for ch in chunk:
        n = (n << 6) | _sixbits(ch)
    return n, used


def _sixbits(ch: str) -> int:
    x = ord(ch) - 63
    if not 0 <= x <= 63:
        raise FormatError(f"character {ch!r} outside the printable range")
    return x


def _pack_bits(bits: list[int]) -> str:
    out = []
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        x = 0
        for b in chunk:
            x = (x << 1) | b
        out.append(chr(x + 63))
    return "".join(out)


def _unpack_bits(data: str) -> Iterator[int]:
    for ch in data:
        x = _sixbits(ch)
        for s in range(5, -1, -1):
            yield (x >> s) & 1


def to_graph6(g: SubcubicGraph, header: bool = False) -> str:
    n = g.n
    bits = []
    for j in range(1, n):
        row = g.nbr_mask[j]
        for i in range(j):
            bits.append((row >> i) & 1)
    body = _encode_n(n) + _pack_bits(bits)
    return (GRAPH6_HEADER + body) if header else body


def from_graph6(text: str) -> SubcubicGraph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    n, used = _decode_n(s)
    need = n * (n - 1) // 2
    body = s[used:]
    if len(body) != (need + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6}")
    edges = []
    it = _unpack_bits(body)
    for j in range(1, n):
        for i in range(j):
            if next(it):
                edges.append((i, j))
    return SubcubicGraph.from_edges(n, edges)


def _sparse6_k(n: int) -> int:
    k = 0
    while (1 << k) < n:
        k += 1
    return k


def to_sparse6(g: SubcubicGraph, header: bool = False) -> str:
    n = g.n
    k = _sparse6_k(n)

    def enc(x: int) -> list[int]:
        return [(x >> (k - 1 - i)) & 1 for i in range(k)]

    bits: list[int] = []
    cur = 0
    for v, u in sorted((max(e), min(e)) for e in g.edges):
        if v == cur:
            bits += [0] + enc(u)
        elif v == cur + 1:
            cur = v
            bits += [1] + enc(u)
        else:
            cur = v
            bits += [1] + enc(v) + [0] + enc(u)
    pad = -len(bits) % 6
    if k < 6 and n == (1 << k) and cur == n - 2 and pad >= k + 1:
        bits.append(0)
        pad = -len(bits) % 6
    bits += [1] * pad
    body = ":" + _encode_n(n) + _pack_bits(bits)
    return (SPARSE6_HEADER + body) if header else body


def from_sparse6(text: str) -> SubcubicGraph:
    s = text.strip()
    if s.startswith(SPARSE6_HEADER):
        s = s[len(SPARSE6_HEADER) :]
    if not s.startswith(":"):
        raise FormatError("sparse6 string must start with ':'")
    n, used = _decode_n(s[1:])
    k = _sparse6_k(n)
    bits = list(_unpack_bits(s[1 + used :]))
    edges = []
    v = 0
    pos = 0
    while pos + 1 + k <= len(bits):
        b = bits[pos]
        x = 0
        for t in bits[pos + 1 : pos + 1 + k]:
            x = (x << 1) | t
        pos += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        else:
            edges.append((x, v))
    return SubcubicGraph.from_edges(n, edges)


def parse_graph_line(line: str) -> SubcubicGraph:
    """Decode one line holding either graph6 or sparse6."""
    s = line.strip()
    if s.startswith(SPARSE6_HEADER) or s.startswith(":"):
        return from_sparse6(s)
    return from_graph6(s)


def read_graphs(stream: TextIO | Iterable[str]) -> Iterator[SubcubicGraph]:
    for line in stream:
        if line.strip():
            yield parse_graph_line(line)


def write_graph6_lines(graphs: Iterable[SubcubicGraph], out: TextIO) -> int:
    count = 0
    for g in graphs:
        out.write(to_graph6(g) + "\n")
        count += 1
    return count


def to_adjacency_text(g: SubcubicGraph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def from_adjacency_text(text: str) -> SubcubicGraph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise FormatError("empty adjacency text")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (IndexError, ValueError) as exc:
        raise FormatError(f"malformed adjacency text: {exc}") from None
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    return SubcubicGraph.from_edges(n, edges)
