"""Exact detectors: induced K_{2,t}, independent t-sets, subgraph copies
of a fixed pattern, and maximum clique.

All searches are deterministic: candidates are explored in increasing
vertex order, so returned certificates are reproducible across runs and
platforms. Every certificate is checked against the host graph before it
is returned (plain ``assert``, active in test builds).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import Graph, GraphError, bits

MAX_PATTERN_VERTICES = 10


@dataclass(frozen=True)
class InducedK2tCertificate:
    """An induced K_{2,t}: non-adjacent a, b plus an independent t-side,
    every t-side vertex adjacent to both a and b."""

    a: int
    b: int
    t_side: frozenset[int]

    def check(self, g: Graph) -> bool:
        if not (0 <= self.a < g.n and 0 <= self.b < g.n) or self.a == self.b:
            return False
        if g.has_edge(self.a, self.b):
            return False
        if self.a in self.t_side or self.b in self.t_side:
            return False
        side = sorted(self.t_side)
        for i, u in enumerate(side):
            if not (0 <= u < g.n):
                return False
            if not (g.has_edge(self.a, u) and g.has_edge(self.b, u)):
                return False
            for v in side[i + 1 :]:
                if g.has_edge(u, v):
                    return False
        return True


@dataclass(frozen=True)
class Embedding:
    """A (not necessarily induced) copy of ``pattern`` in a host graph;
    ``mapping[i]`` is the host vertex carrying pattern vertex i."""

    pattern: Graph
    mapping: tuple[int, ...]

    def check(self, host: Graph) -> bool:
        if len(self.mapping) != self.pattern.n:
            return False
        if len(set(self.mapping)) != self.pattern.n:
            return False
        if any(not 0 <= w < host.n for w in self.mapping):
            return False
        for u, v in self.pattern.edges():
            if not host.has_edge(self.mapping[u], self.mapping[v]):
                return False
        return True


def _lex_clique(masks: Sequence[int], universe: int, size: int) -> Optional[int]:
    """Lexicographically least clique of exactly ``size`` vertices inside
    ``universe``, as a bitmask, or None. ``masks`` is the adjacency."""
    if size == 0:
        return 0

    def rec(cand: int, remaining: int) -> Optional[int]:
        while cand:
            if cand.bit_count() < remaining:
                return None
            low = cand & -cand
            v = low.bit_length() - 1
            if remaining == 1:
                return low
            sub = rec(cand & masks[v], remaining - 1)
            if sub is not None:
                return low | sub
            cand ^= low
        return None

    return rec(universe, size)


def _independent_set_mask(g: Graph, universe: int, t: int) -> Optional[int]:
    """Lex-least independent t-set inside ``universe``: a clique search on
    the complement adjacency (one kernel serves both detectors)."""
    full = g.full_mask
    comp = [~row & full & ~(1 << v) for v, row in enumerate(g.adj)]
    return _lex_clique(comp, universe, t)


def find_independent_set(g: Graph, t: int) -> Optional[frozenset[int]]:
    """Lexicographically least independent set of exactly t vertices.

    Returns None when no independent t-set exists (in particular when
    t > n). Requires t >= 1.
    """
    if t < 1:
        raise GraphError(f"independent-set size must be >= 1, got {t}")
    if t > g.n:
        return None
    mask = _independent_set_mask(g, g.full_mask, t)
    if mask is None:
        return None
    result = frozenset(bits(mask))
    assert len(result) == t and all(
        not g.has_edge(u, v) for u in result for v in result if u < v
    )
    return result


def find_induced_k2t(g: Graph, t: int) -> Optional[InducedK2tCertificate]:
    """Search for an induced K_{2,t}: a non-adjacent pair whose common
    neighbourhood contains an independent t-set.

    Pairs are scanned by descending common-neighbourhood size (ties in
    lexicographic order) -- a speed heuristic only. Requires t >= 2.
    """
    if t < 2:
        raise GraphError(f"induced K_(2,t) needs t >= 2, got {t}")
    full = g.full_mask
    pairs = []
    for a in range(g.n):
        non = ~g.adj[a] & full & ~((1 << (a + 1)) - 1)
        for b in bits(non):
            common = g.adj[a] & g.adj[b]
            if common.bit_count() >= t:
                pairs.append((-common.bit_count(), a, b, common))
    pairs.sort()
    for _, a, b, common in pairs:
        mask = _independent_set_mask(g, common, t)
        if mask is not None:
            cert = InducedK2tCertificate(a=a, b=b, t_side=frozenset(bits(mask)))
            assert cert.check(g)
            return cert
    return None


def max_clique(g: Graph) -> frozenset[int]:
    """A maximum clique, lexicographically least among those of maximum
    size. Branch and bound with a greedy-colouring upper bound."""
    if g.n == 0:
        raise GraphError("max_clique undefined on the empty graph")
    best = _max_clique_size(g.adj, g.full_mask)
    mask = _lex_clique(g.adj, g.full_mask, best)
    assert mask is not None
    clique = frozenset(bits(mask))
    assert all(g.has_edge(u, v) for u in clique for v in clique if u < v)
    return clique


def _max_clique_size(masks: Sequence[int], universe: int) -> int:
    """Exact clique number of the subgraph induced on ``universe``."""
    best = 0

    def colour_order(cand: int) -> list[tuple[int, int]]:
        # Greedy colouring into independent classes; a clique meets each
        # class at most once, so the class index bounds the clique size.
        order = []
        colour = 0
        rest = cand
        while rest:
            colour += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append((v, colour))
                avail &= ~masks[v]
                avail ^= low
                rest ^= low
        return order

    def expand(cand: int, size: int):
        nonlocal best
        order = colour_order(cand)
        for v, colour in reversed(order):
            if size + colour <= best:
                return
            if size + 1 > best:
                best = size + 1
            nxt = cand & masks[v]
            if nxt:
                expand(nxt, size + 1)
            cand ^= 1 << v

    if universe:
        expand(universe, 0)
    return best


def contains_subgraph(g: Graph, h: Graph) -> Optional[Embedding]:
    """First embedding of ``h`` into ``g`` as a (not necessarily induced)
    subgraph, or None. Backtracking ordered by descending pattern degree.

    Patterns are capped at 10 vertices (hard error beyond).
    """
    if h.n > MAX_PATTERN_VERTICES:
        raise GraphError(
            f"pattern has {h.n} vertices; contains_subgraph caps at "
            f"{MAX_PATTERN_VERTICES}"
        )
    if h.n > g.n or h.edge_count > g.edge_count:
        return None
    order = sorted(range(h.n), key=lambda v: (-h.degree(v), v))
    position = {v: i for i, v in enumerate(order)}
    # For each pattern vertex, its pattern-neighbours already placed when
    # its turn comes.
    placed_nbrs = [
        [u for u in bits(h.adj[v]) if position[u] < position[v]] for v in order
    ]
    image = [-1] * h.n
    used = 0

    def rec(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        v = order[i]
        dv = h.degree(v)
        cand = ~used & g.full_mask
        for u in placed_nbrs[i]:
            cand &= g.adj[image[u]]
        for w in bits(cand):
            if g.degree(w) < dv:
                continue
            image[v] = w
            used |= 1 << w
            if rec(i + 1):
                return True
            used ^= 1 << w
            image[v] = -1
        return False

    if rec(0):
        emb = Embedding(pattern=h, mapping=tuple(image))
        assert emb.check(g)
        return emb
    return None


def contains_family_member(
    g: Graph, family: Sequence[Graph]
) -> Optional[Embedding]:
    """First embedding over the family, members tried in the given order."""
    if not family:
        raise GraphError("family must be non-empty")
    for member in family:
        emb = contains_subgraph(g, member)
        if emb is not None:
            return emb
    return None


# ---------------------------------------------------------------------------
# Mask-level fast paths for the exhaustive verification suites. These
# operate on raw adjacency lists (possibly mutated in place by streaming
# enumerators) and avoid Graph-object overhead.
# ---------------------------------------------------------------------------


def _mask_has_independent_tset(adj: Sequence[int], universe: int, t: int) -> bool:
    if t == 1:
        return universe != 0
    cand = universe
    while cand:
        if cand.bit_count() < t:
            return False
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if _mask_has_independent_tset(adj, cand & ~adj[v], t - 1):
            return True
    return False


def mask_has_induced_k2t(adj: Sequence[int], n: int, t: int) -> bool:
    """Induced-K_{2,t} test on a raw adjacency list."""
    full = (1 << n) - 1
    for a in range(n - 1):
        na = adj[a]
        non = ~na & full & ~((1 << (a + 1)) - 1)
        while non:
            low = non & -non
            non ^= low
            b = low.bit_length() - 1
            common = na & adj[b]
            if common.bit_count() >= t and _mask_has_independent_tset(
                adj, common, t
            ):
                return True
    return False


def _mask_lex_independent_tset(
    adj: Sequence[int], universe: int, t: int
) -> Optional[int]:
    """Lex-least independent t-set inside ``universe`` as a mask, on a raw
    adjacency list; None when no such set exists."""
    if t == 0:
        return 0

    def rec(cand: int, remaining: int) -> Optional[int]:
        while cand:
            if cand.bit_count() < remaining:
                return None
            low = cand & -cand
            if remaining == 1:
                return low
            v = low.bit_length() - 1
            sub = rec(cand & ~adj[v] & ~low, remaining - 1)
            if sub is not None:
                return low | sub
            cand ^= low
        return None

    return rec(universe, t)


def mask_has_clique(adj: Sequence[int], universe: int, size: int) -> bool:
    """True iff a clique of ``size`` vertices exists inside ``universe``."""
    if size <= 0:
        return True
    if size == 1:
        return universe != 0
    cand = universe
    while cand:
        if cand.bit_count() < size:
            return False
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if mask_has_clique(adj, cand & adj[v], size - 1):
            return True
    return False
