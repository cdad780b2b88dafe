"""Command-line front end.

Subcommands:

  solve    decide or minimize feedback vertex set on a graph file
  analyze  branching-vector analysis: vectors, worst root, exponent base
  verify   randomized cross-checks of solvers against brute-force oracles
  bench    node-count tables and kernel backend comparison

Exit codes: 0 for YES or success, 1 for NO or failed verification, 2 for
usage and parse errors.  Reports go to stdout (JSON with ``--json``),
warnings and traces to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import __version__, analysis, harness, kernels, oracle
from .graphio import ParseError, parse_graph
from .reductions import FAST, SIMPLE
from .solver import DEFAULT_ALPHA, min_fvs, solve_fvs


def _read_graph(args):
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        raise SystemExit(2)
    try:
        result = parse_graph(text, args.format)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(2)
    for w in result.warnings:
        print(f"warning: {w}", file=sys.stderr)
    return result


def _parse_order(spec: str):
    if spec in ("input", "degree"):
        return spec
    if spec.startswith("random:"):
        try:
            return ("random", int(spec.split(":", 1)[1]))
        except ValueError:
            pass
    raise SystemExit(2)


def _solve_report(args, answer, k, certificate, stats, minimum):
    report = {
        "version": __version__,
        "command": "solve",
        "algorithm": args.algorithm,
        "alpha": args.alpha,
        "answer": "YES" if answer else "NO",
        "k": k,
        "minimum": minimum,
        "certificate": sorted(certificate) if certificate is not None else None,
        "stats": None,
        "rules": None,
    }
    if stats is not None:
        report["stats"] = {"nodes": stats.nodes, "leaves": stats.leaves,
                           "max_depth": stats.max_depth}
        report["rules"] = dict(sorted(stats.rules.items()))
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(f"answer: {report['answer']}")
        print(f"k: {k}" + (" (minimum)" if minimum else ""))
        if certificate is not None:
            print(f"certificate: {sorted(certificate)}")
        if stats is not None:
            print(f"nodes: {stats.nodes}  leaves: {stats.leaves}  "
                  f"max depth: {stats.max_depth}")
    return 0 if answer else 1


def cmd_solve(args) -> int:
    parsed = _read_graph(args)
    g = parsed.graph
    order = _parse_order(args.order)
    if order == "input":
        order_seq = list(parsed.order)
    else:
        order_seq = None

    if args.algorithm == "simple" and args.alpha is not None:
        print("error: --alpha applies to the fast algorithm only",
              file=sys.stderr)
        return 2
    alpha = args.alpha
    if args.algorithm == "simple":
        alpha = 1.0
    elif alpha is None:
        alpha = DEFAULT_ALPHA
    args.alpha = alpha

    trace = [] if args.explain else None

    if args.algorithm == "oracle":
        try:
            cert = oracle.brute_fvs(g.vertices, g.edges)
        except oracle.OracleCapError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        if args.k is not None and len(cert) > args.k:
            return _solve_report(args, False, args.k, None, None, False)
        k = args.k if args.k is not None else len(cert)
        return _solve_report(args, True, k, cert, None, args.k is None)

    family = SIMPLE if args.algorithm == "simple" else FAST

    def run(budget):
        seq = order_seq if order_seq is not None else None
        use_order = seq if seq is not None else order
        return solve_fvs(list(g.vertices) if seq is None else seq,
                         g.edges, budget, family, alpha,
                         order if seq is None else "input",
                         early_cycle_exit=args.early_cycle_exit, trace=trace)

    if args.k is not None:
        out = run(args.k)
        _print_trace(trace)
        return _solve_report(args, out.yes, args.k, out.certificate,
                             out.stats, False)

    for k in range(0, g.n + 1):
        out = run(k)
        if out.yes:
            _print_trace(trace)
            return _solve_report(args, True, k, out.certificate, out.stats, True)
    raise AssertionError("every graph admits a full deletion")


def _print_trace(trace) -> None:
    if not trace:
        return
    for entry in trace:
        print(f"trace: {entry.rule} vertices={list(entry.vertices)} "
              f"potential {entry.potential_before:.4f} -> "
              f"{entry.potential_after:.4f}", file=sys.stderr)


def cmd_analyze(args) -> int:
    family = SIMPLE if args.family == "simple" else FAST

    def report_dict(rep):
        return {
            "alpha": rep.alpha,
            "beta": rep.beta,
            "per_solve_base": rep.per_solve_base,
            "exponent_base": rep.exponent_base,
            "worst_rule": rep.worst_rule,
            "rules": [
                {"rule": r.rule, "params": r.params,
                 "drops": [round(x, 12) for x in r.drops],
                 "root": r.root}
                for r in rep.per_rule
            ],
        }

    if args.alpha_grid:
        try:
            lo, hi, step = (float(x) for x in args.alpha_grid.split(":"))
        except ValueError:
            print("error: --alpha-grid expects LO:HI:STEP", file=sys.stderr)
            return 2
        result = analysis.sweep(family, lo, hi, step)
        if args.json:
            print(json.dumps({
                "version": __version__,
                "command": "analyze",
                "family": args.family,
                "grid": [{"alpha": r.alpha, "beta": r.beta,
                          "exponent_base": r.exponent_base}
                         for r in result.reports],
                "best": report_dict(result.best),
            }, indent=2))
        else:
            print(f"family: {args.family}")
            for r in result.reports:
                print(f"  alpha={r.alpha:.3f}  beta={r.beta:.6f}  "
                      f"base={r.exponent_base:.6f}")
            b = result.best
            print(f"best: alpha={b.alpha:.3f}  beta={b.beta:.9f}  "
                  f"exponent base={b.exponent_base:.6f}")
        return 0

    alpha = args.alpha if args.alpha is not None else (
        1.0 if family == SIMPLE else DEFAULT_ALPHA)
    rep = analysis.analyze(alpha, family)
    if args.json:
        print(json.dumps({"version": __version__, "command": "analyze",
                          "family": args.family, **report_dict(rep)}, indent=2))
    else:
        print(f"family: {args.family}  alpha: {rep.alpha}")
        for r in rep.per_rule:
            drops = ", ".join(f"{x:g}" for x in r.drops)
            print(f"  {r.rule:16s} params={r.params}  root={r.root:.9f}  "
                  f"drops=({drops})")
        print(f"beta: {rep.beta:.10f}")
        print(f"per-solve base (beta^(1+alpha)): {rep.per_solve_base:.6f}")
        print(f"exponent base (1 + beta^(1+alpha)): {rep.exponent_base:.6f}")
    return 0


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    plans = [
        ("solver-exactness",
         lambda: harness.suite_solver_exactness(
             trials=args.trials, seed=rng.randrange(1 << 30), n_max=args.max_n)),
        ("reduction-safeness",
         lambda: harness.suite_reduction_safeness(
             applications=args.trials * 4, seed=rng.randrange(1 << 30),
             n_max=min(args.max_n, 10))),
        ("matroid-parity",
         lambda: harness.suite_parity(
             trials=max(10, args.trials // 2), seed=rng.randrange(1 << 30))),
        ("tent-overload-no",
         lambda: harness.suite_overloaded_no(
             trials=args.trials, seed=rng.randrange(1 << 30))),
    ]
    ok = True
    for name, run in plans:
        t0 = time.perf_counter()
        result = run()
        dt = time.perf_counter() - t0
        status = "PASS" if result.passed else "FAIL"
        print(f"{status} {name} ({result.trials} trials, {dt:.1f}s)")
        for msg in result.failures:
            print(f"  {msg}")
        ok = ok and result.passed
    return 0 if ok else 1


def cmd_bench(args) -> int:
    if args.kernels:
        return _bench_kernels(args)
    family = SIMPLE if args.family == "simple" else FAST
    sizes = [int(x) for x in args.sizes.split(",") if x]
    rng = random.Random(args.seed)
    rows = []
    for size in sizes:
        if args.generator == "hard":
            g = harness.hard_instance(size)
            label = f"hard k={size}"
        elif args.generator.startswith("gnp:"):
            p = float(args.generator.split(":", 1)[1])
            g = harness.gnp(rng, size, p)
            label = f"gnp n={size} p={p}"
        else:
            print(f"error: unknown generator {args.generator}", file=sys.stderr)
            return 2
        t0 = time.perf_counter()
        k, out = min_fvs(g.vertices, g.edges, family, check=False)
        dt = time.perf_counter() - t0
        rows.append({"instance": label, "n": g.n, "m": g.m, "k": k,
                     "nodes": out.stats.nodes, "leaves": out.stats.leaves,
                     "max_disjoint_leaves": out.stats.max_disjoint_leaves,
                     "seconds": round(dt, 4)})
    if args.json:
        print(json.dumps({"version": __version__, "command": "bench",
                          "family": args.family, "rows": rows}, indent=2))
    else:
        print(f"{'instance':18s} {'n':>4} {'m':>5} {'k':>3} {'nodes':>9} "
              f"{'leaves':>8} {'seconds':>8}")
        for r in rows:
            print(f"{r['instance']:18s} {r['n']:>4} {r['m']:>5} {r['k']:>3} "
                  f"{r['nodes']:>9} {r['leaves']:>8} {r['seconds']:>8.3f}")
    return 0


def _bench_kernels(args) -> int:
    """Compare the compiled and pure union-find kernels, micro and end to
    end, by swapping the active backend."""
    from array import array

    backends = kernels.backends()
    rng = random.Random(args.seed)
    sizes = [int(x) for x in args.sizes.split(",") if x] or [1000]
    print(f"active backend: {kernels.BACKEND}")
    for n in sizes:
        m = 2 * n
        us = array("i", [rng.randrange(n) for _ in range(m)])
        vs = array("i", [rng.randrange(n) for _ in range(m)])
        reps = max(3, 2_000_000 // (m + 1))
        timing = {}
        for name, mod in backends.items():
            t0 = time.perf_counter()
            for _ in range(reps):
                mod.uf_forest(n, us, vs)
            timing[name] = time.perf_counter() - t0
        line = f"uf_forest n={n} m={m} reps={reps}: " + "  ".join(
            f"{name}={dt:.3f}s" for name, dt in timing.items())
        if "compiled" in timing and timing["compiled"] > 0:
            line += f"  speedup={timing['pure'] / timing['compiled']:.1f}x"
        print(line)

    g = harness.gnp(random.Random(99), 13, 0.4)
    saved = (kernels.uf_forest, kernels.uf_labels)
    try:
        for name, mod in backends.items():
            kernels.uf_forest, kernels.uf_labels = mod.uf_forest, mod.uf_labels
            t0 = time.perf_counter()
            k, out = min_fvs(g.vertices, g.edges, FAST, check=False)
            dt = time.perf_counter() - t0
            print(f"solve n={g.n} m={g.m} backend={name}: k={k} "
                  f"nodes={out.stats.nodes} time={dt:.3f}s")
    finally:
        kernels.uf_forest, kernels.uf_labels = saved
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fvsolve",
        description="Exact feedback vertex set solver and rule analyzer")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide or minimize FVS on a graph file")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=["edgelist", "dimacs"], default="edgelist")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--algorithm", choices=["simple", "fast", "oracle"],
                   default="fast")
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--order", default="input",
                   help="input, degree, or random:SEED")
    p.add_argument("--early-cycle-exit", action="store_true")
    p.add_argument("--explain", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("analyze", help="branching-vector analysis")
    p.add_argument("--family", choices=["simple", "fast"], default="fast")
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--alpha-grid", default=None, help="LO:HI:STEP")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("verify", help="randomized oracle cross-checks")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--trials", type=int, default=60)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("bench", help="node-count tables, kernel comparison")
    p.add_argument("--family", choices=["simple", "fast"], default="fast")
    p.add_argument("--generator", default="gnp:0.3", help="gnp:P or hard")
    p.add_argument("--sizes", default="8,10,12", help="comma-separated list")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kernels", action="store_true",
                   help="compare compiled and pure kernels")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
