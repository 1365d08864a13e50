"""Generators: the prime-order polarity graph, standard fixtures, seeded
random graphs, and exhaustive labelled-graph streams.

The labelled enumeration is deliberately not isomorphism-reduced: the
exhaustive claims in the verification suites stay trivial to argue, and
the redundancy is affordable at n <= 7. Random graphs use a fixed,
versioned xorshift64* generator so every randomised report can name its
seed and reproduce bit-identically on any platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from . import detect
from .graphs import Graph, GraphError, build, triangle_count

ENUMERATION_CAP = 7
PRNG_NAME = "xorshift64star-v1"


# ---------------------------------------------------------------------------
# Polarity graph of the projective plane over a prime field
# ---------------------------------------------------------------------------


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    for d in range(2, math.isqrt(q) + 1):
        if q % d == 0:
            return False
    return True


def polarity_graph(q: int) -> Graph:
    """Orthogonality graph on the points of the projective plane of prime
    order q: x ~ y iff x . y = 0 (mod q) and x != y.

    q^2 + q + 1 vertices and q (q+1)^2 / 2 edges; the q + 1 self-conjugate
    points keep degree q, the rest degree q + 1. Two points share exactly
    one polar line, so the graph has no K_{2,2} subgraph at all.
    """
    if not _is_prime(q):
        raise GraphError(f"q must be prime, got {q} (prime powers unsupported)")
    points = []
    # Canonical projective representatives: first nonzero coordinate is 1.
    for y in range(q):
        for z in range(q):
            points.append((1, y, z))
    for z in range(q):
        points.append((0, 1, z))
    points.append((0, 0, 1))
    assert len(points) == q * q + q + 1
    n = len(points)
    adj = [0] * n
    for i in range(n):
        xi, yi, zi = points[i]
        for j in range(i + 1, n):
            xj, yj, zj = points[j]
            if (xi * xj + yi * yj + zi * zj) % q == 0:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, adj)


# ---------------------------------------------------------------------------
# Standard fixtures
# ---------------------------------------------------------------------------


def complete(n: int) -> Graph:
    return build(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty(n: int) -> Graph:
    return build(n, [])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs n >= 3, got {n}")
    return build(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"a path needs n >= 1, got {n}")
    return build(n, [(v, v + 1) for v in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise GraphError("part sizes must be non-negative")
    return build(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def turan(n: int, r: int) -> Graph:
    """Turan graph T(n, r): complete r-partite with balanced parts."""
    if r < 1 or n < 0:
        raise GraphError(f"need r >= 1 and n >= 0, got n={n}, r={r}")
    parts = []
    base, extra = divmod(n, r)
    start = 0
    for i in range(r):
        size = base + (1 if i < extra else 0)
        parts.append(range(start, start + size))
        start += size
    edges = []
    for i in range(r):
        for j in range(i + 1, r):
            edges.extend((u, v) for u in parts[i] for v in parts[j])
    return build(n, edges)


_STANDARD: dict = {
    "complete": complete,
    "empty": empty,
    "cycle": cycle,
    "path": path,
    "complete-bipartite": complete_bipartite,
    "turan": turan,
}


def standard(kind: str, *params: int) -> Graph:
    """Named fixture dispatcher: complete, empty, cycle, path,
    complete-bipartite, turan."""
    try:
        builder = _STANDARD[kind]
    except KeyError:
        raise GraphError(
            f"unknown graph kind {kind!r}; choose from {sorted(_STANDARD)}"
        ) from None
    return builder(*params)


# ---------------------------------------------------------------------------
# Seeded random graphs
# ---------------------------------------------------------------------------


class XorShift64Star:
    """xorshift64* with the canonical multiplier; 64-bit outputs."""

    MULT = 0x2545F4914F6CDD1D
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = (seed & self.MASK) or 0x9E3779B97F4A7C15

    def next64(self) -> int:
        x = self.state
        x ^= (x >> 12)
        x = (x ^ (x << 25)) & self.MASK
        x ^= (x >> 27)
        self.state = x
        return (x * self.MULT) & self.MASK


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with one xorshift64* draw per vertex pair in lexicographic
    order; identical (n, p, seed) always yields the identical graph."""
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"p must lie in [0, 1], got {p}")
    rng = XorShift64Star(seed)
    threshold = int(p * (1 << 64))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next64() < threshold:
                edges.append((u, v))
    return build(n, edges)


# ---------------------------------------------------------------------------
# Exhaustive labelled enumeration
# ---------------------------------------------------------------------------


def pair_order(n: int) -> list[tuple[int, int]]:
    """The fixed edge-bit order: (0,1), (0,2), ..., (0,n-1), (1,2), ..."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


@dataclass
class GraphStream:
    """Cursor over all 2^C(n,2) labelled graphs in edge-mask order.

    Graph index i has edge k exactly when bit k of i is set, bits in
    ``pair_order(n)`` position. ``offset``/``limit`` slice the index
    range, so shards for parallel runs are just index intervals.
    """

    n: int
    predicate: Optional[Callable[[Graph], bool]] = None
    offset: int = 0
    limit: Optional[int] = None
    pairs: list[tuple[int, int]] = field(init=False)

    def __post_init__(self):
        if self.n > ENUMERATION_CAP:
            raise GraphError(
                f"labelled enumeration caps at n = {ENUMERATION_CAP}, got {self.n}"
            )
        if self.n < 0:
            raise GraphError("n must be non-negative")
        self.pairs = pair_order(self.n)
        total = 1 << len(self.pairs)
        if not 0 <= self.offset <= total:
            raise GraphError(f"offset {self.offset} outside 0..{total}")

    @property
    def total(self) -> int:
        return 1 << len(self.pairs)

    def stop(self) -> int:
        if self.limit is None:
            return self.total
        return min(self.total, self.offset + self.limit)

    def graph_at(self, index: int) -> Graph:
        adj = [0] * self.n
        for k, (u, v) in enumerate(self.pairs):
            if (index >> k) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return Graph(self.n, adj)

    def __iter__(self) -> Iterator[Graph]:
        for index in range(self.offset, self.stop()):
            g = self.graph_at(index)
            if self.predicate is None or self.predicate(g):
                yield g


def enumerate_labelled(
    n: int,
    predicate: Optional[Callable[[Graph], bool]] = None,
    offset: int = 0,
    limit: Optional[int] = None,
) -> GraphStream:
    """Stream every labelled graph on n vertices exactly once (n <= 7),
    lazily applying the optional filter predicate."""
    return GraphStream(n=n, predicate=predicate, offset=offset, limit=limit)


def iter_masks(n: int, lo: int = 0, hi: Optional[int] = None):
    """Fast internal cursor for the verification suites.

    Yields (index, edge_count, adj) over the index interval [lo, hi) of
    the same edge-mask order as GraphStream, visiting indices in Gray-code
    sequence so each step toggles a single edge. ``adj`` is a list reused
    in place -- consume, never store.
    """
    pairs = pair_order(n)
    npairs = len(pairs)
    total = 1 << npairs
    if hi is None:
        hi = total
    if not 0 <= lo <= hi <= total:
        raise GraphError(f"bad mask interval [{lo}, {hi}) for n={n}")
    if lo == hi:
        return
    uidx = [u for u, _ in pairs]
    vidx = [v for _, v in pairs]
    ubit = [1 << u for u, _ in pairs]
    vbit = [1 << v for _, v in pairs]
    adj = [0] * n
    mask = lo ^ (lo >> 1)
    edge_count = 0
    for k in range(npairs):
        if (mask >> k) & 1:
            adj[uidx[k]] |= vbit[k]
            adj[vidx[k]] |= ubit[k]
            edge_count += 1
    yield mask, edge_count, adj
    prev = mask
    for i in range(lo + 1, hi):
        mask = i ^ (i >> 1)
        k = (mask ^ prev).bit_length() - 1
        prev = mask
        if (mask >> k) & 1:
            adj[uidx[k]] |= vbit[k]
            adj[vidx[k]] |= ubit[k]
            edge_count += 1
        else:
            adj[uidx[k]] &= ~vbit[k]
            adj[vidx[k]] &= ~ubit[k]
            edge_count -= 1
        yield mask, edge_count, adj


def delta_max(n: int, h: Graph, t: int) -> int:
    """Greatest triangle count over all labelled n-vertex graphs with no
    copy of h and no induced K_{2,t} (exhaustive, n <= 7)."""
    if n > ENUMERATION_CAP:
        raise GraphError(
            f"delta_max enumerates exhaustively and caps at n = {ENUMERATION_CAP}"
        )
    if t < 2:
        raise GraphError(f"need t >= 2, got t={t}")
    best = 0
    for _, _, adj in iter_masks(n):
        if detect.mask_has_induced_k2t(adj, n, t):
            continue
        g = Graph(n, adj)
        if detect.contains_subgraph(g, h) is not None:
            continue
        tri = triangle_count(g)
        if tri > best:
            best = tri
    return best
