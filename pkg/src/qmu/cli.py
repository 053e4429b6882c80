"""Command-line surface: graph generation, mu tables, witness files,
structural verification, the reproduction suite, and the backend benchmark.

Exit codes: 0 success, 1 check failure, 2 usage error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

import numpy as np

from .graphs import Graph, GraphError, hypercube, path, cycle, complete
from .coloring import (
    ColoringError,
    SearchCapError,
    random_bijective_coloring,
    spectrum_report,
)
from .constructions import (
    WitnessCertificate,
    witness_q3_phi,
    witness_q3_psi,
    witness_lift_chain,
    witness_interval_part,
)
from .search import SearchBudget, MuTable, mu_table, mu_exact
from .patterns import check_lemma3, verify_subset_lemma, max_pathforest_subset
from .suite import run_suite
from . import backend as _backend

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_FAMILIES = {"qn": hypercube, "path": path, "cycle": cycle, "complete": complete}
_FAMILY_RANGES = {"qn": (1, 10), "path": (2, None), "cycle": (3, None), "complete": (2, None)}


def _write_out(text: str, out: str | None):
    if out is None or out == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _read_in(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source) as fh:
        return fh.read()


def _budget_from_args(args) -> SearchBudget:
    ms = args.budget_ms
    if ms is None:
        env = os.environ.get("QMU_BUDGET_MS")
        ms = int(env) if env else None
    return SearchBudget(
        node_limit=args.node_limit,
        time_limit=(ms / 1000.0) if ms else None,
        thread_count=args.threads,
    )


# -- gen ---------------------------------------------------------------------


def cmd_gen(args) -> int:
    lo, hi = _FAMILY_RANGES[args.family]
    if args.n < lo or (hi is not None and args.n > hi):
        bound = f"[{lo}, {hi}]" if hi else f">= {lo}"
        raise _Usage(f"{args.family} size must be {bound}, got {args.n}")
    g = _FAMILIES[args.family](args.n)
    _write_out(g.to_dot() if args.dot else g.to_json(), args.out)
    return EXIT_OK


# -- mu ----------------------------------------------------------------------


def _table_csv(table: MuTable) -> str:
    lines = ["t,mu1,mu1_status,mu2,mu2_status"]
    for r in table.rows:
        mu1 = str(r.mu1_lo) if r.mu1_status == "exact" else f"{r.mu1_lo}:{r.mu1_hi}"
        mu2 = str(r.mu2_lo) if r.mu2_status == "exact" else f"{r.mu2_lo}:{r.mu2_hi}"
        lines.append(f"{r.t},{mu1},{r.mu1_status},{mu2},{r.mu2_status}")
    a = table
    lines.append(
        "# mu11=%s(%s) mu12=%s(%s) mu21=%s(%s) mu22=%s(%s)"
        % (a.mu11, a.mu11.status, a.mu12, a.mu12.status,
           a.mu21, a.mu21.status, a.mu22, a.mu22.status)
    )
    return "\n".join(lines) + "\n"


def _table_pretty(table: MuTable) -> str:
    lines = [f"{'t':>4} {'mu1':>8} {'status':>12} {'mu2':>8} {'status':>12}"]
    for r in table.rows:
        mu1 = str(r.mu1_lo) if r.mu1_status == "exact" else f"{r.mu1_lo}:{r.mu1_hi}"
        mu2 = str(r.mu2_lo) if r.mu2_status == "exact" else f"{r.mu2_lo}:{r.mu2_hi}"
        lines.append(f"{r.t:>4} {mu1:>8} {r.mu1_status:>12} {mu2:>8} {r.mu2_status:>12}")
    lines.append(
        f"aggregates: mu11={table.mu11} mu12={table.mu12} "
        f"mu21={table.mu21} mu22={table.mu22}"
    )
    return "\n".join(lines) + "\n"


def cmd_mu(args) -> int:
    g = Graph.from_json(_read_in(args.graph))
    budget = _budget_from_args(args)
    if args.t is None and not args.all:
        raise _Usage("need --t <int> or --all")
    if args.t is not None and args.all:
        raise _Usage("--t and --all are mutually exclusive")
    if args.all:
        table = mu_table(g, budget, symmetry=not args.no_symmetry)
    else:
        rmin = mu_exact(g, args.t, "min", budget, symmetry=not args.no_symmetry)
        rmax = mu_exact(g, args.t, "max", budget, symmetry=not args.no_symmetry)
        from .search import MuRow, Aggregate, EXACT, INTERVAL

        mu1_lo, mu1_hi = (
            (rmin.value, rmin.value) if rmin.status == EXACT else (0, rmin.value)
        )
        mu2_lo, mu2_hi = (
            (rmax.value, rmax.value)
            if rmax.status == EXACT
            else (rmax.value, g.vertex_count)
        )
        row = MuRow(args.t, mu1_lo, mu1_hi, rmin.status, mu2_lo, mu2_hi, rmax.status)
        s1 = EXACT if rmin.status == EXACT else INTERVAL
        s2 = EXACT if rmax.status == EXACT else INTERVAL
        table = MuTable(
            (row,),
            Aggregate(mu1_lo, mu1_hi, s1),
            Aggregate(mu1_lo, mu1_hi, s1),
            Aggregate(mu2_lo, mu2_hi, s2),
            Aggregate(mu2_lo, mu2_hi, s2),
        )
    _write_out(_table_pretty(table) if args.pretty else _table_csv(table), args.out)
    all_exact = all(r.exact for r in table.rows)
    return EXIT_OK if all_exact else EXIT_BUDGET


# -- witness -----------------------------------------------------------------


def cmd_witness(args) -> int:
    if args.witness_cmd == "q3-phi":
        cert = witness_q3_phi()
    elif args.witness_cmd == "q3-psi":
        cert = witness_q3_psi()
    elif args.witness_cmd == "lift":
        cert = witness_lift_chain(args.times)
    elif args.witness_cmd == "interval-part":
        if args.n > 6:
            raise _Usage("interval-part supports n <= 6")
        g = hypercube(args.n)
        if not (args.n <= args.t <= g.edge_count):
            raise _Usage(f"t must lie in [{args.n}, {g.edge_count}]")
        cert = witness_interval_part(args.n, args.t)
    elif args.witness_cmd == "check":
        cert = WitnessCertificate.from_json(_read_in(args.file))
        ok, detail = cert.check()
        print(("PASS: " if ok else "FAIL: ") + detail)
        return EXIT_OK if ok else EXIT_CHECK_FAILED
    else:  # pragma: no cover - argparse guards
        raise _Usage(f"unknown witness subcommand {args.witness_cmd!r}")
    _write_out(cert.to_json(), args.out)
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def cmd_verify(args) -> int:
    if args.lemma == "lemma3":
        if args.graph:
            g = Graph.from_json(_read_in(args.graph))
        else:
            g = hypercube(3)
        rng = np.random.default_rng(args.seed)
        for i in range(args.samples):
            c = random_bijective_coloring(g, rng)
            if not check_lemma3(g, c):
                rep = spectrum_report(g, c)
                bad = sorted(rep.v_int)
                print(f"FAIL: sample {i}: interval vertices {bad} are not a path forest")
                if args.out:
                    _write_out(json.dumps({"sample": i, "vertices": bad,
                                           "colors": list(c.color_of)}), args.out)
                return EXIT_CHECK_FAILED
        print(f"PASS: {args.samples} bijective colorings, interval vertices always a path forest")
        return EXIT_OK
    n = 3 if args.lemma == "lemma6" else 4
    ok, bad = verify_subset_lemma(n)
    if ok:
        threshold = 6 if n == 3 else 9
        print(f"PASS: every {n}-cube subset of size >= {threshold} contains a pattern")
        return EXIT_OK
    print(f"FAIL: uncovered subset {list(bad)}")
    if args.out:
        _write_out(json.dumps({"vertices": list(bad)}), args.out)
    return EXIT_CHECK_FAILED


# -- suite ---------------------------------------------------------------------


def cmd_suite(args) -> int:
    report = run_suite(level=args.level, seed=args.seed)
    print(report.to_text())
    return report.exit_code


# -- bench -------------------------------------------------------------------


def _bench_workloads(heavy: bool):
    from .patterns import cover_counterexample, enumerate_patterns

    g2 = hypercube(2)
    c6 = cycle(6)
    g3 = hypercube(3)
    g4 = hypercube(4)
    q4_masks = enumerate_patterns(4, "claw") + enumerate_patterns(4, "cycle8")

    def w_tables(be):
        out = []
        for g in (g2, c6):
            table = mu_table(g, backend=be)
            out.append(tuple((r.t, r.mu1_lo, r.mu2_lo) for r in table.rows))
        return tuple(out)

    def w_pathforest(be):
        return max_pathforest_subset(4, backend=be)

    def w_cover(be):
        return cover_counterexample(g4, 9, q4_masks, backend=be)

    def w_q3(be):
        r = mu_exact(g3, 12, "max", backend=be)
        return (r.value, r.status)

    works = [("mu tables (2-cube, 6-cycle)", w_tables),
             ("max path-forest subset (4-cube)", w_pathforest),
             ("subset cover scan (4-cube)", w_cover)]
    if heavy:
        works.append(("exact max at t=12 (3-cube)", w_q3))
    return works


def cmd_bench(args) -> int:
    try:
        _backend.backend_name("numba")
    except RuntimeError:
        print("numba backend unavailable; nothing to compare")
        return EXIT_CHECK_FAILED
    _backend.warm_up()
    print(f"{'workload':36s} {'python':>10s} {'numba':>10s} {'speedup':>9s}")
    all_equal = True
    for name, work in _bench_workloads(args.heavy):
        timings = {}
        results = {}
        for be in ("python", "numba"):
            work(be)  # warm pass (compile/caches)
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                results[be] = work(be)
                best = min(best, time.perf_counter() - t0)
            timings[be] = best
        equal = results["python"] == results["numba"]
        all_equal &= equal
        speed = timings["python"] / timings["numba"] if timings["numba"] > 0 else float("inf")
        marker = "" if equal else "  RESULTS DIFFER"
        print(f"{name:36s} {timings['python']:9.4f}s {timings['numba']:9.4f}s "
              f"{speed:8.1f}x{marker}")
    if not all_equal:
        print("FAIL: backends disagree")
        return EXIT_CHECK_FAILED
    return EXIT_OK


# -- parser ------------------------------------------------------------------


class _Usage(Exception):
    pass


def _add_budget_args(p):
    p.add_argument("--budget-ms", type=int, default=None,
                   help="wall-clock budget in ms (default: QMU_BUDGET_MS env)")
    p.add_argument("--node-limit", type=int, default=2_000_000_000)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="reserved; the engine is single-threaded")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qmu",
        description="Proper edge colorings ranked by interval-spectrum vertices: "
                    "exact search, witnesses, and verification for cube graphs.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gen", help="emit a generated graph as JSON (or DOT)")
    p.add_argument("family", choices=sorted(_FAMILIES))
    p.add_argument("n", type=int)
    p.add_argument("--out", default=None)
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("mu", help="mu1/mu2 per palette size, CSV")
    p.add_argument("graph", help="graph JSON file, or - for stdin")
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--all", action="store_true")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--no-symmetry", action="store_true",
                   help="disable the palette-reversal reduction")
    p.add_argument("--out", default=None)
    _add_budget_args(p)
    p.set_defaults(fn=cmd_mu)

    p = sub.add_parser("witness", help="emit or check witness certificates")
    wsub = p.add_subparsers(dest="witness_cmd", required=True)
    for name in ("q3-phi", "q3-psi"):
        wp = wsub.add_parser(name)
        wp.add_argument("--out", default=None)
    wp = wsub.add_parser("lift")
    wp.add_argument("--times", type=int, default=1)
    wp.add_argument("--out", default=None)
    wp = wsub.add_parser("interval-part")
    wp.add_argument("--n", type=int, required=True)
    wp.add_argument("--t", type=int, required=True)
    wp.add_argument("--out", default=None)
    wp = wsub.add_parser("check")
    wp.add_argument("file", help="witness JSON file, or - for stdin")
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("verify", help="structural checks")
    p.add_argument("lemma", choices=("lemma3", "lemma6", "lemma7"))
    p.add_argument("--graph", default=None, help="graph JSON (lemma3 only)")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="counterexample JSON export")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("suite", help="run the reproduction suite")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--seed", type=int, default=20240801)
    p.set_defaults(fn=cmd_suite)

    p = sub.add_parser("bench", help="compare python and numba kernel builds")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--heavy", action="store_true",
                   help="include the exact t=12 search on the 3-cube")
    p.set_defaults(fn=cmd_bench)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except _Usage as exc:
        ap.exit(EXIT_USAGE, f"{ap.prog}: error: {exc}\n")
    except (GraphError, ColoringError, SearchCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except FileNotFoundError as exc:
        ap.exit(EXIT_USAGE, f"{ap.prog}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
