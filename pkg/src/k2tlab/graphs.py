"""Immutable bitset-backed simple graphs, exact density, and graph6 I/O.

Vertices are 0..n-1. Adjacency is stored as one Python int per vertex,
bit u of ``adj[v]`` set iff uv is an edge. Graphs are immutable after
construction and safe to share across workers; every operation here is a
pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Sequence

GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Malformed graph construction or codec input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph; symmetry and irreflexivity are enforced."""

    __slots__ = ("n", "adj", "_edge_count", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        if len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows for {n} vertices")
        full = (1 << n) - 1
        count = 0
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"adjacency row {v} mentions vertices >= {n}")
            if (row >> v) & 1:
                raise GraphError(f"loop at vertex {v}")
            count += row.bit_count()
        if count % 2:
            raise GraphError("adjacency is not symmetric")
        for v, row in enumerate(adj):
            rest = row >> (v + 1)
            for u in bits(rest):
                if not (adj[v + 1 + u] >> v) & 1:
                    raise GraphError(f"asymmetric pair ({v}, {v + 1 + u})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_edge_count", count // 2)
        object.__setattr__(self, "_hash", hash((n,) + tuple(adj)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbours(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v, lexicographic."""
        out = []
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1)):
                out.append((v, v + 1 + u))
        return out

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(
            self.n, [~row & full & ~(1 << v) for v, row in enumerate(self.adj)]
        )


@dataclass(frozen=True)
class DensityStats:
    """Edge count, exact edge density alpha, and missing-pair count."""

    edge_count: int
    alpha: Fraction
    missing_count: int


@dataclass(frozen=True)
class InducedSubgraph:
    """An induced subgraph plus the relabelling back to the parent.

    ``vertices[i]`` is the parent label of local vertex ``i``, so any
    certificate found in ``graph`` can be lifted to the parent.
    """

    graph: Graph
    vertices: tuple[int, ...]

    def to_parent(self, local: int) -> int:
        return self.vertices[local]


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate pairs collapse.

    Raises GraphError for out-of-range endpoints or loops.
    """
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def density(g: Graph) -> DensityStats:
    """Exact density stats; alpha = edge_count / C(n,2). Requires n >= 2."""
    if g.n < 2:
        raise GraphError(f"alpha undefined for n={g.n} (need n >= 2)")
    pairs = comb(g.n, 2)
    return DensityStats(
        edge_count=g.edge_count,
        alpha=Fraction(g.edge_count, pairs),
        missing_count=pairs - g.edge_count,
    )


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> InducedSubgraph:
    """Induced subgraph on the given vertices (sorted), with relabelling."""
    vs = sorted(set(vertices))
    if vs and not (0 <= vs[0] and vs[-1] < g.n):
        raise GraphError(f"vertices out of range for n={g.n}")
    index = {v: i for i, v in enumerate(vs)}
    adj = [0] * len(vs)
    for i, v in enumerate(vs):
        row = g.adj[v]
        for u in vs[i + 1 :]:
            if (row >> u) & 1:
                j = index[u]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return InducedSubgraph(Graph(len(vs), adj), tuple(vs))


def neighbourhood_subgraph(g: Graph, v: int) -> InducedSubgraph:
    """G_v: the subgraph induced on the neighbourhood of v."""
    if not (0 <= v < g.n):
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    return induced_subgraph(g, bits(g.adj[v]))


def missing_edges(g: Graph) -> list[tuple[int, int]]:
    """All non-adjacent unordered pairs, lexicographically sorted."""
    out = []
    for v in range(g.n):
        non = ~g.adj[v] & g.full_mask & ~((1 << (v + 1)) - 1)
        for u in bits(non):
            out.append((v, u))
    return out


def common_neighbourhood(g: Graph, u: int, v: int) -> frozenset[int]:
    """Vertices adjacent to both u and v (never contains u or v)."""
    if u == v:
        raise GraphError("common neighbourhood needs two distinct vertices")
    return frozenset(bits(g.adj[u] & g.adj[v]))


def triangle_count(g: Graph) -> int:
    total = 0
    for v in range(g.n):
        row = g.adj[v]
        for u in bits(row >> (v + 1)):
            u += v + 1
            total += (g.adj[u] & row & ~((1 << u) - 1)).bit_count()
    return total


# ---------------------------------------------------------------------------
# graph6 codec (McKay's format: 6-bit groups of the upper triangle,
# column-major, padded with zero bits, each group offset by 63).
# ---------------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(
            chr(((n >> s) & 63) + 63) for s in (12, 6, 0)
        )
    if n <= 68719476735:
        return chr(126) + chr(126) + "".join(
            chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0)
        )
    raise GraphError(f"n={n} exceeds the graph6 limit of 2^36 - 1")


def _decode_n(text: str) -> tuple[int, int]:
    """Return (n, chars consumed) from the front of a graph6 body."""
    if not text:
        raise GraphError("empty graph6 string")
    vals = []
    for ch in text:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise GraphError(f"byte {o} outside graph6 range 63..126")
        vals.append(o - 63)
    if vals[0] != 63:
        return vals[0], 1
    if len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphError("truncated graph6 vertex count")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        return n, 8
    if len(vals) < 4:
        raise GraphError("truncated graph6 vertex count")
    n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
    return n, 4


def graph6_encode(g: Graph) -> str:
    """Encode a graph as a canonical graph6 string."""
    out = [_encode_n(g.n)]
    bit_buf = 0
    bit_len = 0
    for col in range(1, g.n):
        column = g.adj[col]
        for row in range(col):
            bit_buf = (bit_buf << 1) | ((column >> row) & 1)
            bit_len += 1
            if bit_len == 6:
                out.append(chr(bit_buf + 63))
                bit_buf = 0
                bit_len = 0
    if bit_len:
        out.append(chr((bit_buf << (6 - bit_len)) + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    """Decode a graph6 string (optional '>>graph6<<' header allowed)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :].strip()
    n, used = _decode_n(s)
    body = s[used:]
    nbits = comb(n, 2)
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise GraphError(
            f"graph6 body has {len(body)} groups, expected {expected} for n={n}"
        )
    stream = 0
    for ch in body:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise GraphError(f"byte {o} outside graph6 range 63..126")
        stream = (stream << 6) | (o - 63)
    pad = 6 * expected - nbits
    if pad and stream & ((1 << pad) - 1):
        raise GraphError("nonzero padding bits in graph6 string")
    stream >>= pad
    adj = [0] * n
    pos = nbits - 1
    for col in range(1, n):
        for row in range(col):
            if (stream >> pos) & 1:
                adj[col] |= 1 << row
                adj[row] |= 1 << col
            pos -= 1
    return Graph(n, adj)


# ---------------------------------------------------------------------------
# Secondary plain-text format: one "u v" pair per line, 0-indexed. An
# optional first line holding a single integer fixes the vertex count
# (otherwise n = max endpoint + 1).
# ---------------------------------------------------------------------------


def parse_edge_text(text: str) -> Graph:
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1 and n is None and not edges:
            n = int(parts[0])
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        n = 1 + max((max(u, v) for u, v in edges), default=-1)
    return build(n, edges)


def format_edge_text(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
