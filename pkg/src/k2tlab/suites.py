"""Verification suites: exhaustive and grid-based checks of every bound
and proof-internal inequality, with violation payloads that are
independently re-checkable from their graph6 strings.

The exhaustive suites stream raw adjacency masks (see
``constructions.iter_masks``) and precompute everything that depends only
on (n, t, edge count), so the per-graph work is a few bitset operations.
Heavy suites fan out over mask-interval shards; results merge
order-independently. Worker count comes from the K2TLAB_THREADS
environment variable unless given explicitly.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import detect
from .bounds import (
    beta,
    beta_identity_residual,
    clique_guarantee,
    clique_lower_report,
    induced_turan_upper,
    theorem_clique_r,
    triangle_theorem_condition,
    triangle_upper,
)
from .constructions import (
    PRNG_NAME,
    complete,
    cycle,
    delta_max,
    iter_masks,
    polarity_graph,
    random_gnp,
)
from .graphs import Graph, graph6_encode
from .ramsey import (
    RamseyQuery,
    explicit_family,
    family_minus_ebar,
    is_isomorphic,
    known_ramsey,
    ramsey_exact,
)
from .witness import (
    OUTCOME_H_EMBEDDED,
    OUTCOME_INDUCED_K2T,
    extract,
    verify_trace,
)

VIOLATION_LIMIT = 100

SUITE_IDS = (
    "beta",
    "clique-exhaustive",
    "proof-ineq",
    "ramsey-small",
    "polarity",
    "triangle-thm",
    "turan-upper",
)


@dataclass
class SuiteResult:
    suite: str
    params: dict
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    violation_count: int = 0
    boundary_cases: int = 0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def add_violation(
        self, claim: str, observed, required, graph6: Optional[str] = None
    ):
        self.violation_count += 1
        if len(self.violations) < VIOLATION_LIMIT:
            self.violations.append(
                {
                    "claim": claim,
                    "graph6": graph6,
                    "observed": str(observed),
                    "required": str(required),
                }
            )

    def merge_shard(self, shard: dict):
        self.checked += shard["checked"]
        self.boundary_cases += shard.get("boundary", 0)
        self.violation_count += shard["violation_count"]
        for v in shard["violations"]:
            if len(self.violations) < VIOLATION_LIMIT:
                self.violations.append(v)


def default_workers() -> int:
    env = os.environ.get("K2TLAB_THREADS")
    if env:
        return max(1, int(env))
    return 1


def _run_shards(fn, args_list, workers: int) -> list[dict]:
    if workers <= 1 or len(args_list) <= 1:
        return [fn(args) for args in args_list]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, args_list))


def _intervals(total: int, pieces: int) -> list[tuple[int, int]]:
    pieces = max(1, min(pieces, total))
    return [
        (total * i // pieces, total * (i + 1) // pieces) for i in range(pieces)
    ]


def _apply_shard(
    total: int, shard: Optional[tuple[int, int]]
) -> tuple[int, int]:
    if shard is None:
        return 0, total
    i, k = shard
    if not (k >= 1 and 0 <= i < k):
        raise ValueError(f"shard must be (i, k) with 0 <= i < k, got {shard}")
    return total * i // k, total * (i + 1) // k


# ---------------------------------------------------------------------------
# beta identities (Lemma grid)
# ---------------------------------------------------------------------------


def run_beta(steps: int = 100, t_max: int = 10) -> SuiteResult:
    """Grid check of the beta identities: defining quadratic residual,
    the alpha bracketing, the t = 2 closed form, and monotonicity."""
    result = SuiteResult(suite="beta", params={"steps": steps, "t_max": t_max})
    for t in range(2, t_max + 1):
        previous = -1.0
        for i in range(steps + 1):
            alpha = i / steps
            residual = beta_identity_residual(alpha, t)
            b = beta(alpha, t).beta
            result.checked += 1
            if residual > 1e-10:
                result.add_violation(
                    f"beta-quadratic t={t} alpha={alpha}", residual, "<= 1e-10"
                )
            low = math.sqrt(t - 1) / t * alpha
            if b - low < -1e-12 or alpha - b < -1e-12:
                result.add_violation(
                    f"beta-bracket t={t} alpha={alpha}",
                    b,
                    f"{low} <= beta <= {alpha}",
                )
            if t == 2 and abs(b - (1.0 - math.sqrt(1.0 - alpha))) > 1e-12:
                result.add_violation(
                    f"beta2-closed-form alpha={alpha}",
                    b,
                    1.0 - math.sqrt(1.0 - alpha),
                )
            if b < previous - 1e-12:
                result.add_violation(
                    f"beta-monotone t={t} alpha={alpha}", b, f">= {previous}"
                )
            previous = b
    return result


# ---------------------------------------------------------------------------
# Exhaustive clique guarantees
# ---------------------------------------------------------------------------


def _guarantee_table(n: int, t: int) -> list:
    """Per edge count: (applicable (formula_id, guarantee) list, max
    guarantee) or None at the alpha = 1 boundary."""
    pairs = math.comb(n, 2)
    table = []
    for e in range(pairs + 1):
        if e == pairs:
            table.append(None)
            continue
        alpha = Fraction(e, pairs)
        entries = []
        for report in clique_lower_report(n, alpha, t):
            if report.applicable and report.integer_guarantee is not None:
                entries.append((report.formula_id, report.integer_guarantee))
        guarantee = clique_guarantee(n, alpha, t, known_ramsey)
        if guarantee.applicable and guarantee.integer_guarantee is not None:
            entries.append((guarantee.formula_id, guarantee.integer_guarantee))
        table.append((entries, max(g for _, g in entries)))
    return table


def _clique_shard(args: tuple) -> dict:
    n, t_values, lo, hi = args
    tables = {t: _guarantee_table(n, t) for t in t_values}
    full = (1 << n) - 1
    checked = 0
    boundary = 0
    violations: list[dict] = []
    violation_count = 0
    for _, edge_count, adj in iter_masks(n, lo, hi):
        for t in t_values:
            if detect.mask_has_induced_k2t(adj, n, t):
                continue
            entry = tables[t][edge_count]
            if entry is None:
                boundary += 1
                continue
            checked += 1
            entries, need = entry
            if need <= 1 or detect.mask_has_clique(adj, full, need):
                continue
            g = Graph(n, adj)
            omega = len(detect.max_clique(g))
            for formula_id, guar in entries:
                if omega < guar:
                    violation_count += 1
                    if len(violations) < VIOLATION_LIMIT:
                        violations.append(
                            {
                                "claim": f"clique-lower {formula_id} n={n} t={t}",
                                "graph6": graph6_encode(g),
                                "observed": f"omega={omega}",
                                "required": f"omega>={guar}",
                            }
                        )
    return {
        "checked": checked,
        "boundary": boundary,
        "violations": violations,
        "violation_count": violation_count,
    }


def run_clique_exhaustive(
    n_max: int = 7,
    t_values: tuple[int, ...] = (2, 3),
    workers: Optional[int] = None,
    shard: Optional[tuple[int, int]] = None,
) -> SuiteResult:
    """Criterion: every labelled graph (n <= n_max) with no induced
    K_{2,t} and alpha < 1 meets every applicable integer clique guarantee;
    alpha = 1 boundary cases are recorded, never checked."""
    workers = default_workers() if workers is None else workers
    result = SuiteResult(
        suite="clique-exhaustive",
        params={
            "n_max": n_max,
            "t_values": list(t_values),
            "workers": workers,
            "shard": list(shard) if shard else None,
        },
    )
    for n in range(2, n_max + 1):
        total = 1 << math.comb(n, 2)
        lo, hi = _apply_shard(total, shard)
        pieces = workers if n == n_max else 1
        args = [
            (n, tuple(t_values), lo + a, lo + b)
            for a, b in _intervals(hi - lo, pieces)
        ]
        for shard_result in _run_shards(_clique_shard, args, workers):
            result.merge_shard(shard_result)
    return result


# ---------------------------------------------------------------------------
# Proof-internal inequalities
# ---------------------------------------------------------------------------


def _proof_tables(n: int, t: int) -> list:
    """Per edge count: (r_max or None, averaging RHS |M| beta^2 n)."""
    pairs = math.comb(n, 2)
    table = []
    for e in range(pairs + 1):
        alpha = Fraction(e, pairs)
        b = beta(alpha, t).beta
        r_max = theorem_clique_r(n, alpha, t, known_ramsey)
        table.append((r_max, (pairs - e) * b * b * n))
    return table


def _proof_shard(args: tuple) -> dict:
    n, t_values, lo, hi = args
    tables = {t: _proof_tables(n, t) for t in t_values}
    pairs = math.comb(n, 2)
    full = (1 << n) - 1
    checked = 0
    averaging_checked = 0
    violations: list[dict] = []
    violation_count = 0

    def report(claim, g6, observed, required):
        nonlocal violation_count
        violation_count += 1
        if len(violations) < VIOLATION_LIMIT:
            violations.append(
                {
                    "claim": claim,
                    "graph6": g6,
                    "observed": str(observed),
                    "required": str(required),
                }
            )

    for _, edge_count, adj in iter_masks(n, lo, hi):
        checked += 1
        m_values = []
        sum_m = 0
        identity_bad = None
        for v in range(n):
            row = adj[v]
            d = row.bit_count()
            e_inside = 0
            m_inside = 0
            rest = row
            while rest:
                low = rest & -rest
                rest ^= low
                u = low.bit_length() - 1
                e_inside += (adj[u] & rest).bit_count()
                m_inside += (~adj[u] & rest).bit_count()
            if e_inside + m_inside != d * (d - 1) // 2:
                identity_bad = (v, e_inside, m_inside, d)
            m_values.append(m_inside)
            sum_m += m_inside
        if identity_bad is not None:
            v, e_inside, m_inside, d = identity_bad
            report(
                f"ledger-identity n={n} v={v}",
                graph6_encode(Graph(n, adj)),
                f"e_v={e_inside} m_v={m_inside}",
                f"e_v+m_v={d * (d - 1) // 2}",
            )
        for t in t_values:
            if detect.mask_has_induced_k2t(adj, n, t):
                continue
            for v in range(n):
                gamma = 0
                residual = adj[v]
                while True:
                    chosen = detect._mask_lex_independent_tset(adj, residual, t)
                    if chosen is None:
                        break
                    gamma += 1
                    residual &= ~chosen
                q_val = (t - 1) * gamma * (gamma + t - 1) // 2
                if m_values[v] < q_val:
                    report(
                        f"packing-debt n={n} t={t} v={v}",
                        graph6_encode(Graph(n, adj)),
                        f"m_v={m_values[v]} gamma={gamma}",
                        f"m_v>=q(gamma)={q_val}",
                    )
            r_max, rhs = tables[t][edge_count]
            if (
                edge_count < pairs
                and r_max is not None
                and not detect.mask_has_clique(adj, full, r_max + 1)
            ):
                # The main clique theorem makes this filter empty on real
                # inputs (omega >= r_max + 1 is exactly what it promises);
                # the count below documents that, and any entry would be
                # cross-examined against the averaging bound.
                averaging_checked += 1
                if sum_m < rhs - 1e-9:
                    report(
                        f"averaging n={n} t={t} r={r_max}",
                        graph6_encode(Graph(n, adj)),
                        f"sum_m={sum_m}",
                        f">={rhs}",
                    )
    return {
        "checked": checked,
        "averaging_checked": averaging_checked,
        "violations": violations,
        "violation_count": violation_count,
    }


def run_proof_inequalities(
    n_max: int = 7,
    t_values: tuple[int, ...] = (2, 3),
    workers: Optional[int] = None,
    shard: Optional[tuple[int, int]] = None,
) -> SuiteResult:
    """Criterion: the ledger identity on every graph, the packing debt
    m_v >= q(gamma_v) on every induced-K_{2,t}-free graph, and the
    averaged missing-edge inequality on the theorem's own instances."""
    workers = default_workers() if workers is None else workers
    result = SuiteResult(
        suite="proof-ineq",
        params={
            "n_max": n_max,
            "t_values": list(t_values),
            "workers": workers,
            "shard": list(shard) if shard else None,
        },
    )
    averaging_checked = 0
    for n in range(2, n_max + 1):
        total = 1 << math.comb(n, 2)
        lo, hi = _apply_shard(total, shard)
        pieces = workers if n == n_max else 1
        args = [
            (n, tuple(t_values), lo + a, lo + b)
            for a, b in _intervals(hi - lo, pieces)
        ]
        for shard_result in _run_shards(_proof_shard, args, workers):
            result.merge_shard(shard_result)
            averaging_checked += shard_result["averaging_checked"]
    result.details["averaging_checked"] = averaging_checked
    return result


# ---------------------------------------------------------------------------
# Small Ramsey numbers
# ---------------------------------------------------------------------------


def run_ramsey_small(include_r34: bool = True) -> SuiteResult:
    """R(3,3) = 6 with a pentagon witness, R(2,r) = r for r <= 8, and
    (optionally) R(3,4) = 9; witnesses re-validated by the detectors."""
    result = SuiteResult(
        suite="ramsey-small", params={"include_r34": include_r34}
    )
    values = {}

    r33 = ramsey_exact(RamseyQuery(t=3, family=explicit_family([complete(3)])))
    values["R(3,3)"] = r33.exact
    result.checked += 1
    if r33.exact != 6:
        result.add_violation("ramsey R(3,3)", r33.exact, 6)
    elif not is_isomorphic(r33.lower_witness, cycle(5)):
        result.add_violation(
            "ramsey R(3,3) witness",
            graph6_encode(r33.lower_witness),
            "a 5-cycle",
        )

    for r in range(1, 9):
        res = ramsey_exact(
            RamseyQuery(t=2, family=explicit_family([complete(r)]))
        )
        values[f"R(2,{r})"] = res.exact
        result.checked += 1
        if res.exact != r:
            result.add_violation(f"ramsey R(2,{r})", res.exact, r)
        elif r >= 2 and not is_isomorphic(res.lower_witness, complete(r - 1)):
            result.add_violation(
                f"ramsey R(2,{r}) witness",
                graph6_encode(res.lower_witness),
                f"K_{r - 1}",
            )

    if include_r34:
        r34 = ramsey_exact(
            RamseyQuery(t=3, family=explicit_family([complete(4)])), n_cap=9
        )
        values["R(3,4)"] = r34.exact
        result.checked += 1
        if r34.exact != 9:
            result.add_violation("ramsey R(3,4)", r34.exact, 9)
        witness = r34.lower_witness
        if witness is not None:
            if detect.find_independent_set(witness, 3) is not None:
                result.add_violation(
                    "ramsey R(3,4) witness independent set",
                    graph6_encode(witness),
                    "no independent 3-set",
                )
            if detect.contains_subgraph(witness, complete(4)) is not None:
                result.add_violation(
                    "ramsey R(3,4) witness clique",
                    graph6_encode(witness),
                    "no K4",
                )
    result.details["values"] = values
    return result


# ---------------------------------------------------------------------------
# Polarity graphs
# ---------------------------------------------------------------------------


def run_polarity(qs: tuple[int, ...] = (2, 3, 5, 7)) -> SuiteResult:
    result = SuiteResult(suite="polarity", params={"qs": list(qs)})
    stats = {}
    for q in qs:
        g = polarity_graph(q)
        result.checked += 1
        n_expected = q * q + q + 1
        e_expected = q * (q + 1) ** 2 // 2
        degrees = [g.degree(v) for v in range(g.n)]
        low_degree = sum(1 for d in degrees if d == q)
        high_degree = sum(1 for d in degrees if d == q + 1)
        stats[q] = {
            "n": g.n,
            "edges": g.edge_count,
            "degree_q": low_degree,
            "degree_q_plus_1": high_degree,
        }
        if g.n != n_expected:
            result.add_violation(
                f"polarity q={q} vertex count", g.n, n_expected
            )
        if g.edge_count != e_expected:
            result.add_violation(
                f"polarity q={q} edge count", g.edge_count, e_expected
            )
        if low_degree != q + 1 or low_degree + high_degree != g.n:
            result.add_violation(
                f"polarity q={q} degrees",
                f"{low_degree} of degree {q}, {high_degree} of degree {q + 1}",
                f"{q + 1} of degree {q}, rest degree {q + 1}",
            )
        cert = detect.find_induced_k2t(g, 2)
        if cert is not None:
            result.add_violation(
                f"polarity q={q} induced K_(2,2)",
                f"certificate {cert}",
                "none",
                graph6=graph6_encode(g),
            )
    result.details["stats"] = stats
    return result


# ---------------------------------------------------------------------------
# Triangle theorem condition at desk scale
# ---------------------------------------------------------------------------


def run_triangle_theorem(
    n_max: int = 6, t: int = 2, h: Optional[Graph] = None
) -> SuiteResult:
    """Criterion: with Delta(n, H, t) from exhaustive enumeration, every
    induced-K_{2,t}-free graph whose density passes the triangle-budget
    condition really contains H (H = K3 by default)."""
    h = complete(3) if h is None else h
    result = SuiteResult(
        suite="triangle-thm", params={"n_max": n_max, "t": t, "h": graph6_encode(h)}
    )
    ramsey_ebar = ramsey_exact(
        RamseyQuery(t=t, family=family_minus_ebar(h))
    )
    if ramsey_ebar.exact is None:
        result.add_violation(
            "triangle-thm ramsey", "unresolved bracket", "exact value"
        )
        return result
    r_value = ramsey_ebar.exact
    deltas = {}
    for n in range(2, n_max + 1):
        deltas[n] = delta_max(n, h, t)
    result.details["ramsey_ebar"] = r_value
    result.details["delta"] = deltas
    h_size = h.n
    for n in range(2, n_max + 1):
        pairs = math.comb(n, 2)
        condition = [
            triangle_theorem_condition(n, Fraction(e, pairs), t, r_value, deltas[n])
            for e in range(pairs + 1)
        ]
        for _, edge_count, adj in iter_masks(n):
            if not condition[edge_count]:
                continue
            if detect.mask_has_induced_k2t(adj, n, t):
                continue
            result.checked += 1
            g = Graph(n, adj)
            if detect.contains_subgraph(g, h) is None:
                result.add_violation(
                    f"triangle-thm n={n}",
                    "H not found",
                    f"H on {h_size} vertices must embed",
                    graph6=graph6_encode(g),
                )
    return result


# ---------------------------------------------------------------------------
# Induced-Turan upper bounds
# ---------------------------------------------------------------------------


def _turan_shard(args: tuple) -> dict:
    n, t_values, lo, hi = args
    full = (1 << n) - 1
    checked = 0
    violations: list[dict] = []
    violation_count = 0
    skipped = 0
    # bounds depend on (t, omega); cache them.
    cache: dict = {}

    def bounds_for(t: int, omega: int):
        key = (t, omega)
        if key not in cache:
            r_value = known_ramsey(t, omega)
            if r_value is None:
                cache[key] = None
            else:
                reports = induced_turan_upper(
                    n, t, v_h=omega + 1, ramsey_value=r_value
                )
                tight = induced_turan_upper(n, t - 1, v_h=omega + 1)
                merged = [r for r in reports if r.formula_id == "ramsey-sqrt"]
                merged.extend(tight)
                cache[key] = merged
        return cache[key]

    for _, edge_count, adj in iter_masks(n, lo, hi):
        for t in t_values:
            if detect.mask_has_induced_k2t(adj, n, t):
                continue
            omega = detect._max_clique_size(adj, full)
            entries = bounds_for(t, omega)
            if entries is None:
                skipped += 1
                continue
            checked += 1
            for entry in entries:
                if edge_count < entry.bound:
                    continue
                violation_count += 1
                if len(violations) < VIOLATION_LIMIT:
                    violations.append(
                        {
                            "claim": (
                                f"turan-upper {entry.formula_id} n={n} t={t} "
                                f"omega={omega}"
                            ),
                            "graph6": graph6_encode(Graph(n, adj)),
                            "observed": f"e={edge_count}",
                            "required": f"e<{entry.bound}",
                        }
                    )
    return {
        "checked": checked,
        "violations": violations,
        "violation_count": violation_count,
        "skipped": skipped,
    }


def run_turan_upper(
    n_max: int = 7,
    t_values: tuple[int, ...] = (2, 3),
    include_random: bool = True,
    random_count: int = 1000,
    workers: Optional[int] = None,
    shard: Optional[tuple[int, int]] = None,
) -> SuiteResult:
    """Criterion: every exhaustive-range graph with no induced K_{2,t}
    (H = the smallest clique it misses) and every random-sweep graph with
    no induced K_{2,2} and no K4 sits strictly below each applicable
    induced-Turan upper bound with repo-exact Ramsey values."""
    workers = default_workers() if workers is None else workers
    result = SuiteResult(
        suite="turan-upper",
        params={
            "n_max": n_max,
            "t_values": list(t_values),
            "include_random": include_random,
            "workers": workers,
            "shard": list(shard) if shard else None,
        },
    )
    skipped = 0
    for n in range(2, n_max + 1):
        total = 1 << math.comb(n, 2)
        lo, hi = _apply_shard(total, shard)
        pieces = workers if n == n_max else 1
        args = [
            (n, tuple(t_values), lo + a, lo + b)
            for a, b in _intervals(hi - lo, pieces)
        ]
        for shard_result in _run_shards(_turan_shard, args, workers):
            result.merge_shard(shard_result)
            skipped += shard_result.get("skipped", 0)
    result.details["skipped_no_exact_ramsey"] = skipped

    if include_random:
        h = complete(4)
        qualifying = 0
        ps = (0.3, 0.5, 0.7)
        for seed in range(random_count):
            p = ps[seed % len(ps)]
            g = random_gnp(20, p, seed)
            if detect.find_induced_k2t(g, 2) is not None:
                continue
            if detect.contains_subgraph(g, h) is not None:
                continue
            qualifying += 1
            result.checked += 1
            entries = induced_turan_upper(g.n, 2, ramsey_value=3)
            entries.extend(induced_turan_upper(g.n, 1, v_h=4))
            for entry in entries:
                if g.edge_count >= entry.bound:
                    result.add_violation(
                        f"turan-upper random {entry.formula_id} seed={seed}",
                        f"e={g.edge_count}",
                        f"e<{entry.bound}",
                        graph6=graph6_encode(g),
                    )
        result.details["random_qualifying"] = qualifying
    return result


# ---------------------------------------------------------------------------
# Witness extraction end-to-end (random sweep)
# ---------------------------------------------------------------------------


def run_witness_random(
    count: int = 1000,
    n: int = 20,
    ps: tuple[float, ...] = (0.3, 0.5, 0.7),
    t: int = 2,
    h: Optional[Graph] = None,
) -> SuiteResult:
    """Criterion: on seeded random graphs every extract outcome passes
    verify_trace, every embedded H is genuine, and every induced-K_{2,t}
    certificate is genuine."""
    h = complete(4) if h is None else h
    result = SuiteResult(
        suite="witness-random",
        params={
            "count": count,
            "n": n,
            "ps": list(ps),
            "t": t,
            "h": graph6_encode(h),
            "prng": PRNG_NAME,
        },
    )
    outcomes: dict = {}
    for seed in range(count):
        p = ps[seed % len(ps)]
        g = random_gnp(n, p, seed)
        trace = extract(g, h, t)
        result.checked += 1
        outcomes[trace.outcome] = outcomes.get(trace.outcome, 0) + 1
        if not verify_trace(g, trace, h, t):
            result.add_violation(
                f"witness verify seed={seed} p={p}",
                trace.outcome,
                "verify_trace = True",
                graph6=graph6_encode(g),
            )
            continue
        if trace.outcome == OUTCOME_H_EMBEDDED:
            cert = trace.certificate
            if cert.pattern != h or not cert.check(g):
                result.add_violation(
                    f"witness embedding seed={seed}",
                    "invalid embedding",
                    "a genuine copy of H",
                    graph6=graph6_encode(g),
                )
        elif trace.outcome == OUTCOME_INDUCED_K2T:
            cert = trace.certificate
            if len(cert.t_side) != t or not cert.check(g):
                result.add_violation(
                    f"witness induced-k2t seed={seed}",
                    "invalid certificate",
                    f"a genuine induced K_(2,{t})",
                    graph6=graph6_encode(g),
                )
    result.details["outcomes"] = outcomes
    return result


# ---------------------------------------------------------------------------
# Triangle-budget formula grid
# ---------------------------------------------------------------------------


def run_triangle_formula() -> SuiteResult:
    """Criterion: the two-term triangle budget sits below its envelope
    3 c^(15/7) n^(27/14) with relative margin >= 1e-9 across the log grid,
    and the exact homogeneity scalings hold to 1e-9 relative."""
    result = SuiteResult(suite="triangle-formula", params={})
    c_grid = [10.0 ** (i / 4.0) for i in range(-12, 13)]
    n_grid = sorted({int(round(10.0 ** (j / 2.0))) for j in range(0, 19)})
    for c in c_grid:
        for n in n_grid:
            result.checked += 1
            _, bound = triangle_upper(c, n)
            envelope = 3.0 * c ** (15.0 / 7.0) * float(n) ** (27.0 / 14.0)
            if not bound < envelope * (1.0 - 1e-9):
                result.add_violation(
                    f"triangle-envelope c={c} n={n}", bound, f"< {envelope}"
                )
            _, scaled_n = triangle_upper(c, n * 2**14)
            if abs(scaled_n / bound - 2.0**27) > 1e-9 * 2.0**27:
                result.add_violation(
                    f"triangle-n-scaling c={c} n={n}",
                    scaled_n / bound,
                    2.0**27,
                )
            _, scaled_c = triangle_upper(c * 2**7, n)
            if abs(scaled_c / bound - 2.0**15) > 1e-9 * 2.0**15:
                result.add_violation(
                    f"triangle-c-scaling c={c} n={n}",
                    scaled_c / bound,
                    2.0**15,
                )
    return result


# ---------------------------------------------------------------------------
# Registry for the CLI
# ---------------------------------------------------------------------------


def run_suite(
    suite_id: str,
    n_max: Optional[int] = None,
    t: Optional[int] = None,
    workers: Optional[int] = None,
    shard: Optional[tuple[int, int]] = None,
) -> SuiteResult:
    if suite_id == "beta":
        return run_beta()
    if suite_id == "clique-exhaustive":
        t_values = (2, 3) if t is None else (t,)
        return run_clique_exhaustive(
            n_max=n_max or 7, t_values=t_values, workers=workers, shard=shard
        )
    if suite_id == "proof-ineq":
        t_values = (2, 3) if t is None else (t,)
        return run_proof_inequalities(
            n_max=n_max or 7, t_values=t_values, workers=workers, shard=shard
        )
    if suite_id == "ramsey-small":
        return run_ramsey_small()
    if suite_id == "polarity":
        return run_polarity()
    if suite_id == "triangle-thm":
        return run_triangle_theorem(n_max=n_max or 6, t=t or 2)
    if suite_id == "turan-upper":
        t_values = (2, 3) if t is None else (t,)
        return run_turan_upper(
            n_max=n_max or 7, t_values=t_values, workers=workers, shard=shard
        )
    raise ValueError(
        f"unknown suite {suite_id!r}; choose from {', '.join(SUITE_IDS)}"
    )
