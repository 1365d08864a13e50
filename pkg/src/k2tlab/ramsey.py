"""Deletion families {H - x} and {H - ebar}, exact graph isomorphism at
desk scale, and exhaustive computation of small family Ramsey numbers
with machine-checkable witnesses.

R(K_t, F) is the least n such that every graph on n vertices contains an
independent t-set or some member of F as a (not necessarily induced)
subgraph. The search grows good graphs one vertex at a time -- both
defining properties are inherited by induced prefixes, so a level with
no survivors pins the exact value. Levels are deduplicated by exact
isomorphism tests inside cheap-invariant buckets, which keeps the n = 9
refutations (e.g. for R(3,4)) at interactive speed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .detect import contains_family_member, contains_subgraph, find_independent_set
from .graphs import Graph, GraphError, bits, build, graph6_encode, induced_subgraph

MAX_RAMSEY_CAP = 10
DEFAULT_RAMSEY_CAP = 9

ORIGIN_MINUS_VERTEX = "minus-vertex"
ORIGIN_MINUS_EBAR = "minus-vertex-or-nonedge"
ORIGIN_EXPLICIT = "explicit"


@dataclass(frozen=True)
class FamilyProvenance:
    """How one family member arose from H: the deleted vertices and, for
    each member vertex i, the original H vertex kept[i]."""

    removed: tuple[int, ...]
    kept: tuple[int, ...]


@dataclass(frozen=True)
class GraphFamily:
    members: tuple[Graph, ...]
    origin: str
    provenance: tuple[FamilyProvenance, ...] = ()

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class RamseyQuery:
    t: int
    family: GraphFamily


@dataclass(frozen=True)
class RamseyResult:
    """Exact value when lower = upper, else a bracket. The witness (when
    present) has lower - 1 vertices, no independent t-set, and no family
    member as subgraph; it is re-validated on construction."""

    lower: int
    upper: int
    exact: Optional[int]
    lower_witness: Optional[Graph]


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------


def _refined_colours(g: Graph, rounds: int = 3) -> list:
    """Iterated (colour, sorted neighbour colours) refinement. The final
    colour values are nested tuples, identical across isomorphic graphs."""
    colours: list = [g.degree(v) for v in range(g.n)]
    for _ in range(rounds):
        colours = [
            (colours[v], tuple(sorted(colours[u] for u in bits(g.adj[v]))))
            for v in range(g.n)
        ]
    return colours


def invariant_key(g: Graph) -> tuple:
    """A cheap isomorphism invariant used to bucket candidates."""
    return (g.n, g.edge_count, tuple(sorted(_refined_colours(g))))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    """Exact backtracking isomorphism test for desk-scale graphs."""
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    ca = _refined_colours(a)
    cb = _refined_colours(b)
    if sorted(ca) != sorted(cb):
        return False
    n = a.n
    # Map rare colours first: most-constrained-first ordering.
    freq: dict = {}
    for c in ca:
        freq[c] = freq.get(c, 0) + 1
    order = sorted(range(n), key=lambda v: (freq[ca[v]], ca[v], v))
    image = [-1] * n
    used = 0

    def rec(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if (used >> w) & 1 or cb[w] != ca[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if ((a.adj[v] >> u) & 1) != ((b.adj[w] >> image[u]) & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used |= 1 << w
                if rec(i + 1):
                    return True
                used ^= 1 << w
        return False

    return rec(0)


def _dedupe(graphs_with_prov: list) -> list:
    """Keep the first representative of each isomorphism class."""
    buckets: dict = {}
    out = []
    for item in graphs_with_prov:
        g = item[0]
        bucket = buckets.setdefault(invariant_key(g), [])
        if not any(is_isomorphic(g, seen) for seen in bucket):
            bucket.append(g)
            out.append(item)
    return out


# ---------------------------------------------------------------------------
# Deletion families
# ---------------------------------------------------------------------------


def family_minus_vertex(h: Graph) -> GraphFamily:
    """{H - x}: H with one vertex removed, deduplicated up to isomorphism."""
    if h.n < 2:
        raise GraphError(f"need at least 2 vertices to delete one, got n={h.n}")
    items = []
    for v in range(h.n):
        sub = induced_subgraph(h, (u for u in range(h.n) if u != v))
        items.append((sub.graph, FamilyProvenance(removed=(v,), kept=sub.vertices)))
    items = _dedupe(items)
    return GraphFamily(
        members=tuple(g for g, _ in items),
        origin=ORIGIN_MINUS_VERTEX,
        provenance=tuple(p for _, p in items),
    )


def family_minus_ebar(h: Graph) -> GraphFamily:
    """{H - ebar}: H minus one vertex or minus two non-adjacent vertices."""
    if h.n < 2:
        raise GraphError(f"need at least 2 vertices to delete one, got n={h.n}")
    items = []
    for v in range(h.n):
        sub = induced_subgraph(h, (u for u in range(h.n) if u != v))
        items.append((sub.graph, FamilyProvenance(removed=(v,), kept=sub.vertices)))
    for u in range(h.n):
        for v in range(u + 1, h.n):
            if not h.has_edge(u, v):
                sub = induced_subgraph(
                    h, (w for w in range(h.n) if w != u and w != v)
                )
                items.append(
                    (sub.graph, FamilyProvenance(removed=(u, v), kept=sub.vertices))
                )
    items = _dedupe(items)
    return GraphFamily(
        members=tuple(g for g, _ in items),
        origin=ORIGIN_MINUS_EBAR,
        provenance=tuple(p for _, p in items),
    )


def explicit_family(members) -> GraphFamily:
    ms = tuple(members)
    if not ms:
        raise GraphError("explicit family must be non-empty")
    items = _dedupe([(g, FamilyProvenance(removed=(), kept=())) for g in ms])
    return GraphFamily(
        members=tuple(g for g, _ in items),
        origin=ORIGIN_EXPLICIT,
        provenance=tuple(p for _, p in items),
    )


# ---------------------------------------------------------------------------
# Exact Ramsey search
# ---------------------------------------------------------------------------


def _is_good(g: Graph, t: int, members: tuple[Graph, ...]) -> bool:
    """Good = no independent t-set and no family member as subgraph."""
    if find_independent_set(g, t) is not None:
        return False
    for member in members:
        if member.n <= g.n and contains_subgraph(g, member) is not None:
            return False
    return True


def _extensions(parent: Graph):
    """All one-vertex extensions of ``parent``, new vertex last."""
    k = parent.n
    bit_k = 1 << k
    for mask in range(1 << k):
        adj = list(parent.adj)
        adj.append(mask)
        for u in bits(mask):
            adj[u] |= bit_k
        yield Graph(k + 1, adj)


def ramsey_exact(query: RamseyQuery, n_cap: int = DEFAULT_RAMSEY_CAP) -> RamseyResult:
    """Exact R(K_t, family) by exhaustive search up to ``n_cap`` vertices.

    Every good graph on n vertices restricts to a good graph on its first
    n - 1 vertices, so level n is built by extending level n - 1 and the
    first empty level equals the Ramsey number. If level ``n_cap`` still
    has survivors the result is a bracket (never a guess), with the
    Erdos-Szekeres value R(t, min member order) as the upper end.
    """
    if query.t < 2:
        raise GraphError(f"need t >= 2, got t={query.t}")
    members = query.family.members
    if not members:
        raise GraphError("family must be non-empty")
    if any(m.n < 1 for m in members):
        raise GraphError("family members must have at least one vertex")
    if not 1 <= n_cap <= MAX_RAMSEY_CAP:
        raise GraphError(f"n_cap must be in 1..{MAX_RAMSEY_CAP}, got {n_cap}")
    t = query.t

    survivors = [build(0, [])]
    for n in range(1, n_cap + 1):
        level: list[Graph] = []
        buckets: dict = {}
        for parent in survivors:
            for cand in _extensions(parent):
                if not _is_good(cand, t, members):
                    continue
                bucket = buckets.setdefault(invariant_key(cand), [])
                if any(is_isomorphic(cand, seen) for seen in bucket):
                    continue
                bucket.append(cand)
                level.append(cand)
        if not level:
            witness = min(survivors, key=graph6_encode)
            _assert_witness(witness, t, members)
            return RamseyResult(lower=n, upper=n, exact=n, lower_witness=witness)
        survivors = level

    lower = n_cap + 1
    vmin = min(m.n for m in members)
    upper = math.comb(vmin + t - 2, t - 1)
    assert upper >= lower, "Erdos-Szekeres bound below a certified lower bound"
    witness = min(survivors, key=graph6_encode)
    _assert_witness(witness, t, members)
    return RamseyResult(
        lower=lower,
        upper=upper,
        exact=lower if lower == upper else None,
        lower_witness=witness,
    )


def _assert_witness(w: Graph, t: int, members: tuple[Graph, ...]) -> None:
    assert find_independent_set(w, t) is None
    assert w.n == 0 or contains_family_member(w, members) is None


_VERIFIED_CLASSICAL = {(3, 3): 6, (3, 4): 9}


def known_ramsey(t: int, r: int) -> Optional[int]:
    """Classical R(t, r) values, limited to entries this repository can
    re-verify by exhaustive search (see the ramsey-small suite)."""
    if t < 2 or r < 1:
        return None
    if r == 1:
        return 1
    if t == 2:
        return r
    if r == 2:
        return t
    return _VERIFIED_CLASSICAL.get((t, r))
