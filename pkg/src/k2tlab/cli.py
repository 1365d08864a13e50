"""Command-line surface: detection, bound tables, proof tracing, Ramsey
search, graph generation, and the verification suites.

Exit codes: 0 = pass / nothing found, 1 = semantic finding (certificate
found, suite violations), 2 = usage or internal error. The
K2TLAB_THREADS environment variable sets the default worker count for
the sharded suites.
"""

from __future__ import annotations

import sys
import time
from dataclasses import asdict
from fractions import Fraction

import click

from . import constructions, detect, report, suites, witness
from .bounds import clique_guarantee, clique_lower_report, induced_turan_upper
from .graphs import (
    Graph,
    GraphError,
    density,
    graph6_decode,
    graph6_encode,
    parse_edge_text,
)
from .ramsey import (
    RamseyQuery,
    explicit_family,
    family_minus_ebar,
    family_minus_vertex,
    ramsey_exact,
)


class CommandError(click.ClickException):
    """Parameter or input errors exit with the usage-error code."""

    exit_code = 2


def load_graph(path: str, fmt: str = "auto") -> Graph:
    """Read a graph file: graph6 (one line) or 'u v' edge text."""
    with open(path) as fh:
        text = fh.read()
    stripped = text.strip()
    if not stripped:
        raise GraphError(f"{path}: empty graph file")
    if fmt == "auto":
        first = stripped.splitlines()[0].strip()
        fmt = "edges" if (" " in first or "\n" in stripped) and not first.startswith(
            ">>graph6<<"
        ) else "graph6"
    if fmt == "graph6":
        return graph6_decode(stripped.splitlines()[0])
    if fmt == "edges":
        return parse_edge_text(text)
    raise GraphError(f"unknown graph format {fmt!r}")


def _emit(report_dict: dict, json_path: str | None) -> None:
    text = report.report_json(report_dict)
    if json_path:
        with open(json_path, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _parse_shard(text: str | None) -> tuple[int, int] | None:
    if text is None:
        return None
    try:
        i, k = text.split("/")
        return int(i), int(k)
    except ValueError:
        raise click.UsageError(f"--shard expects I/K, got {text!r}") from None


@click.group()
def main():
    """Exact toolkit for clique bounds and induced Turan numbers of
    graphs with no induced K_(2,t)."""


@main.command("detect")
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True))
@click.option("--t", default=2, show_default=True, type=int)
@click.option("--format", "fmt", default="auto", type=click.Choice(["auto", "graph6", "edges"]))
@click.option("--json", "json_path", type=click.Path())
def cmd_detect(graph_path, t, fmt, json_path):
    """Search a graph for an induced K_(2,t); exit 1 when one is found."""
    started = time.monotonic()
    try:
        g = load_graph(graph_path, fmt)
        cert = detect.find_induced_k2t(g, t)
    except (GraphError, ValueError) as exc:
        raise CommandError(str(exc)) from exc
    results: dict = {"found": cert is not None}
    if cert is not None:
        results["certificate"] = {
            "a": cert.a,
            "b": cert.b,
            "t_side": sorted(cert.t_side),
        }
    _emit(
        report.make_report(
            "detect",
            {"graph": graph6_encode(g), "t": t},
            results,
            runtime_ms=int(1000 * (time.monotonic() - started)),
        ),
        json_path,
    )
    sys.exit(1 if cert is not None else 0)


def _float_or_fraction(text: str):
    if "/" in text:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    return float(text)


@main.command("bounds")
@click.option("--n", "n_list", required=True, help="vertex count(s), comma separated")
@click.option("--alpha", "alpha_list", required=True, help="density value(s), e.g. 0.5 or 9/21")
@click.option("--t", "t_list", default="2", show_default=True, help="t value(s)")
@click.option("--v-h", "v_h", type=int, default=None, help="|V(H)| for induced-Turan bounds")
@click.option("--ramsey", "ramsey_value", type=int, default=None, help="R(K_t,(H-x)) for induced-Turan bounds")
@click.option("--json", "json_path", type=click.Path())
@click.option("--csv", "csv_path", type=click.Path())
def cmd_bounds(n_list, alpha_list, t_list, v_h, ramsey_value, json_path, csv_path):
    """Evaluate every clique lower bound (and optional induced-Turan
    upper bounds) over a grid of (n, alpha, t)."""
    started = time.monotonic()
    try:
        ns = [int(x) for x in n_list.split(",")]
        alphas = [_float_or_fraction(x) for x in alpha_list.split(",")]
        ts = [int(x) for x in t_list.split(",")]
    except ValueError as exc:
        raise click.UsageError(f"bad grid value: {exc}") from exc
    rows = []
    turan_rows = []
    try:
        for n in ns:
            for alpha in alphas:
                for t in ts:
                    reports = clique_lower_report(n, alpha, t)
                    reports.append(clique_guarantee(n, alpha, t))
                    for entry in reports:
                        rows.append(
                            {
                                "n": n,
                                "alpha": float(alpha),
                                "t": t,
                                **asdict(entry),
                            }
                        )
                    if v_h is not None or ramsey_value is not None:
                        for tb in induced_turan_upper(
                            n, t, v_h=v_h, ramsey_value=ramsey_value
                        ):
                            turan_rows.append(asdict(tb))
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    results = {"rows": rows}
    if turan_rows:
        results["turan_rows"] = turan_rows
    if csv_path:
        header = [
            "n", "alpha", "t", "formula_id", "value",
            "integer_guarantee", "applicable", "threshold_note",
        ]
        report.write_csv(
            csv_path, header, [[row[h] for h in header] for row in rows]
        )
    _emit(
        report.make_report(
            "bounds",
            {
                "n": ns,
                "alpha": [float(a) for a in alphas],
                "t": ts,
                "v_h": v_h,
                "ramsey": ramsey_value,
            },
            results,
            runtime_ms=int(1000 * (time.monotonic() - started)),
        ),
        json_path,
    )
    sys.exit(0)


@main.command("witness")
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True))
@click.option("--h", "h_path", required=True, type=click.Path(exists=True))
@click.option("--t", default=2, show_default=True, type=int)
@click.option("--json", "json_path", type=click.Path())
def cmd_witness(graph_path, h_path, t, json_path):
    """Run the constructive extraction on (G, H, t) and print the trace
    outcome; the trace must re-verify before a clean exit."""
    started = time.monotonic()
    try:
        g = load_graph(graph_path)
        h = load_graph(h_path)
        trace = witness.extract(g, h, t)
    except (GraphError, ValueError) as exc:
        raise CommandError(str(exc)) from exc
    verified = witness.verify_trace(g, trace, h, t)
    results: dict = {"outcome": trace.outcome, "verified": verified}
    if trace.selected_edge is not None:
        results["selected_edge"] = list(trace.selected_edge)
        results["s_vertices"] = sorted(trace.s_vertices)
    if trace.slack is not None:
        results["slack"] = asdict(trace.slack)
    cert = trace.certificate
    if isinstance(cert, detect.Embedding):
        results["certificate"] = {
            "kind": "embedding",
            "pattern": graph6_encode(cert.pattern),
            "mapping": list(cert.mapping),
        }
    elif isinstance(cert, detect.InducedK2tCertificate):
        results["certificate"] = {
            "kind": "induced-k2t",
            "a": cert.a,
            "b": cert.b,
            "t_side": sorted(cert.t_side),
        }
    _emit(
        report.make_report(
            "witness",
            {"graph": graph6_encode(g), "h": graph6_encode(h), "t": t},
            results,
            runtime_ms=int(1000 * (time.monotonic() - started)),
        ),
        json_path,
    )
    if not verified:
        raise CommandError("trace failed independent re-verification")
    found = trace.outcome in (
        witness.OUTCOME_H_EMBEDDED,
        witness.OUTCOME_INDUCED_K2T,
    )
    sys.exit(1 if found else 0)


@main.command("verify")
@click.option("--suite", "suite_id", required=True, type=click.Choice(suites.SUITE_IDS))
@click.option("--nmax", type=int, default=None, help="largest n for exhaustive suites")
@click.option("--t", type=int, default=None, help="restrict to one t")
@click.option("--shard", default=None, help="I/K interval of the search space")
@click.option("--workers", type=int, default=None, help="worker processes (default: K2TLAB_THREADS or 1)")
@click.option("--json", "json_path", type=click.Path())
def cmd_verify(suite_id, nmax, t, shard, workers, json_path):
    """Run a verification suite; exit 1 iff it reports violations."""
    started = time.monotonic()
    try:
        result = suites.run_suite(
            suite_id,
            n_max=nmax,
            t=t,
            workers=workers,
            shard=_parse_shard(shard),
        )
    except (GraphError, ValueError) as exc:
        raise CommandError(str(exc)) from exc
    result.violations.sort(key=lambda v: (v["claim"], v.get("graph6") or ""))
    _emit(
        report.make_report(
            "verify",
            result.params | {"suite": suite_id},
            {
                "checked": result.checked,
                "passed": result.passed,
                "violation_count": result.violation_count,
                "boundary_cases": result.boundary_cases,
                "details": result.details,
            },
            violations=result.violations,
            runtime_ms=int(1000 * (time.monotonic() - started)),
        ),
        json_path,
    )
    click.echo(
        f"suite {suite_id}: checked={result.checked} "
        f"violations={result.violation_count} "
        f"boundary={result.boundary_cases}",
        err=True,
    )
    sys.exit(0 if result.passed else 1)


@main.command("generate")
@click.argument("kind")
@click.argument("params", nargs=-1)
@click.option("--seed", type=int, default=0, show_default=True, help="PRNG seed for gnp")
@click.option("--out", "out_path", type=click.Path())
@click.option("--json", "json_path", type=click.Path())
def cmd_generate(kind, params, seed, out_path, json_path):
    """Generate a graph (complete, empty, cycle, path, complete-bipartite,
    turan, polarity, gnp) and emit it as graph6."""
    started = time.monotonic()
    try:
        if kind == "polarity":
            g = constructions.polarity_graph(int(params[0]))
        elif kind == "gnp":
            n, p = int(params[0]), float(params[1])
            g = constructions.random_gnp(n, p, seed)
        else:
            g = constructions.standard(kind, *(int(x) for x in params))
    except (GraphError, ValueError, IndexError, TypeError) as exc:
        raise CommandError(f"generate {kind}: {exc}") from exc
    g6 = graph6_encode(g)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(g6 + "\n")
    else:
        click.echo(g6)
    if json_path:
        stats: dict = {"n": g.n, "edges": g.edge_count, "graph6": g6}
        if g.n >= 2:
            stats["alpha"] = float(density(g).alpha)
        _emit(
            report.make_report(
                "generate",
                {
                    "kind": kind,
                    "params": list(params),
                    "seed": seed,
                    "prng": constructions.PRNG_NAME,
                },
                stats,
                runtime_ms=int(1000 * (time.monotonic() - started)),
            ),
            json_path,
        )
    sys.exit(0)


@main.command("ramsey")
@click.option("--t", required=True, type=int)
@click.option("--r", type=int, default=None, help="clique target: family {K_r}")
@click.option("--h", "h_path", type=click.Path(exists=True), default=None, help="family {H - x} from this graph")
@click.option("--ebar", is_flag=True, default=False, help="use {H - ebar} instead of {H - x}")
@click.option("--cap", type=int, default=9, show_default=True)
@click.option("--json", "json_path", type=click.Path())
def cmd_ramsey(t, r, h_path, ebar, cap, json_path):
    """Exact small Ramsey number for K_t versus a clique or a deletion
    family, with the extremal witness as graph6."""
    started = time.monotonic()
    if (r is None) == (h_path is None):
        raise click.UsageError("supply exactly one of --r or --h")
    try:
        if r is not None:
            family = explicit_family([constructions.complete(r)])
            target = f"K_{r}"
        else:
            h = load_graph(h_path)
            family = family_minus_ebar(h) if ebar else family_minus_vertex(h)
            target = f"{{H - {'ebar' if ebar else 'x'}}} for H={graph6_encode(h)}"
        result = ramsey_exact(RamseyQuery(t=t, family=family), n_cap=cap)
    except (GraphError, ValueError) as exc:
        raise CommandError(str(exc)) from exc
    results = {
        "lower": result.lower,
        "upper": result.upper,
        "exact": result.exact,
        "witness": (
            graph6_encode(result.lower_witness)
            if result.lower_witness is not None
            else None
        ),
        "family": [graph6_encode(m) for m in family.members],
    }
    _emit(
        report.make_report(
            "ramsey",
            {"t": t, "target": target, "cap": cap},
            results,
            runtime_ms=int(1000 * (time.monotonic() - started)),
        ),
        json_path,
    )
    sys.exit(0)


if __name__ == "__main__":
    main()
