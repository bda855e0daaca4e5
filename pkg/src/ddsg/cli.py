"""Command-line interface: ``ddsg {dsp,ddsp,dalks,dalvks,gen,bench}``.

Exit codes: 0 success, 1 usage, 2 input validation, 3 infeasible instance,
4 solver failure.
"""
from __future__ import annotations

import argparse
import contextlib
import sys
import time
from pathlib import Path

from . import bench
from .dalvks import dalvks_accel, dalvks_lp_full, dalvks_peel, dalvks_prop2, is_feasible
from .ddsp import DdspParams, GammaSolver, ddsp_approx, is_diverse, parse_alpha
from .demand import DemandVector, check_demand
from .dense import DEFAULT_GPP_ITERATIONS, dalks_lp, dalks_peel, dsp_exact, dsp_peel, greedy_plus_plus
from .errors import DdsgError, InputError, SolverError
from .generators import ColorMode, GenSpec, Kind, er_spec, generate
from .graphio import format_combined, read_graph, write_graph
from .lp import count_solves, dumping_to
from .oracle import brute_force_dalvks, milp_dalvks
from .report import make_report

EXIT_USAGE = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_io(p):
    p.add_argument("--graph", required=True, help="edge file (or combined file with @color lines)")
    p.add_argument("--colors", help="color file: one 'node label' line per node")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--dump-lp", metavar="DIR", help="write every LP/MILP model to DIR")
    p.add_argument("--backend", help="LP backend: rational, highs or auto (default: $DDSG_LP_BACKEND or auto)")
    p.add_argument("--no-normalize", action="store_true", help="skip the DSP reference solve")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ddsg", description="Densest subgraphs under color-diversity constraints.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dsp", help="unconstrained densest subgraph")
    _add_io(p)
    p.add_argument("--algo", choices=["peel", "gpp", "exact"], default="exact")
    p.add_argument("--iters", type=int, default=DEFAULT_GPP_ITERATIONS)

    p = sub.add_parser("ddsp", help="densest subgraph with max color share alpha")
    _add_io(p)
    p.add_argument("--alpha", required=True, help="exact fraction P/Q")
    p.add_argument("--gamma", choices=[g.value for g in GammaSolver])

    p = sub.add_parser("dalks", help="densest subgraph with at least k nodes")
    _add_io(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--algo", choices=["peel", "lp"], default="lp")

    p = sub.add_parser("dalvks", help="densest subgraph with per-color lower bounds")
    _add_io(p)
    p.add_argument("--demand", required=True, help="label=count,... (unlisted colors: 0)")
    p.add_argument("--algo", choices=["lp", "peel", "accel", "prop2", "milp", "brute"], default="accel")
    p.add_argument("--no-prune", action="store_true", help="disable LP-value pruning")

    p = sub.add_parser("gen", help="generate a synthetic colored graph")
    p.add_argument("kind", choices=[k.value for k in Kind])
    p.add_argument("--n", type=int, help="node count (er)")
    p.add_argument("--p", type=float, help="edge probability (er; default 5/n)")
    p.add_argument("--clusters", default="40,40,40,40,40", help="cluster sizes (planted)")
    p.add_argument("--p-intra", default="0.8,0.2,0.2,0.2,0.2", help="per-cluster probabilities (planted)")
    p.add_argument("--p-inter", type=float, default=0.02)
    p.add_argument("--num-colors", type=int, default=2)
    p.add_argument("--color-mode", choices=[m.value for m in ColorMode])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-graph", help="edge file (combined layout if --out-colors is absent)")
    p.add_argument("--out-colors", help="color file")

    p = sub.add_parser("bench", help="run a benchmark suite and write CSV")
    p.add_argument("--suite", choices=sorted(bench.SUITES), required=True)
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.add_argument("--seeds", type=int, help="instances (ratio, amazonlike) or seeds per cell (appendixC)")
    p.add_argument("--size-cap", type=int, default=14, help="largest n in the ratio suite")
    p.add_argument("--sizes", help="comma-separated n values (appendixC)")
    p.add_argument("--color-counts", help="comma-separated |C| values (appendixC)")
    p.add_argument("--timeout", type=float, default=60.0, help="seconds per instance (appendixC)")
    p.add_argument("--backend")
    return parser


def _ints(text, what):
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise InputError(f"{what} must be comma-separated integers, got {text!r}") from None


def _floats(text, what):
    try:
        return tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise InputError(f"{what} must be comma-separated numbers, got {text!r}") from None


def _validated(ok, what):
    if not ok:
        raise SolverError(f"solver output failed validation: {what}")


def _solve(args, g):
    """Run the requested solver; return ``(problem, algorithm, params, subset)``."""
    cmd = args.command
    backend = args.backend
    if cmd == "dsp":
        if args.algo == "peel":
            s = dsp_peel(g)
        elif args.algo == "gpp":
            if args.iters < 1:
                raise InputError("--iters must be at least 1")
            s = greedy_plus_plus(g, args.iters)
        else:
            s = dsp_exact(g, backend)
        params = {"iterations": args.iters} if args.algo == "gpp" else {}
        return "dsp", args.algo, params, s
    if cmd == "ddsp":
        params = DdspParams(parse_alpha(args.alpha), args.gamma)
        params.check(g)
        solver = params.solver_for(g)
        s = ddsp_approx(g, params, backend)
        _validated(is_diverse(s, params.alpha), f"alpha(S)={s.alpha} exceeds {params.alpha}")
        return "ddsp", f"algorithm2-{solver.value}", {
            "alpha": str(params.alpha), "gamma_solver": solver.value, "gamma": str(solver.gamma)}, s
    if cmd == "dalks":
        s = dalks_peel(g, args.k) if args.algo == "peel" else dalks_lp(g, args.k, backend)
        _validated(s.size >= args.k, f"|S|={s.size} < k={args.k}")
        return "dalks", args.algo, {"k": args.k}, s
    k = check_demand(g, DemandVector.parse(g, args.demand))
    prune = not args.no_prune
    algo = args.algo
    if algo == "lp":
        s = dalvks_lp_full(g, k, prune=prune, backend=backend)
    elif algo == "peel":
        s = dalvks_peel(g, k)
    elif algo == "accel":
        s = dalvks_accel(g, k, prune=prune, backend=backend)
    elif algo == "prop2":
        s = dalvks_prop2(g, k, backend)
    elif algo == "milp":
        s = milp_dalvks(g, k, backend).witness
    else:
        s = brute_force_dalvks(g, k).witness
    _validated(s is not None and is_feasible(s, k), "demand vector not met")
    params = {"demand": k.format(g)}
    if algo in ("lp", "accel"):
        params["prune"] = prune
    return "dalvks", algo, params, s


def _cmd_solve(args):
    g = read_graph(args.graph, args.colors)
    dump = dumping_to(args.dump_lp) if args.dump_lp else contextlib.nullcontext()
    if args.dump_lp:
        Path(args.dump_lp).mkdir(parents=True, exist_ok=True)
    start = time.perf_counter()
    with dump, count_solves() as counter:
        problem, algo, params, s = _solve(args, g)
    runtime = (time.perf_counter() - start) * 1000
    report = make_report(g, problem, algo, params, s, lp_solve_count=counter.lp_solves,
                         runtime_ms=runtime, normalize=not args.no_normalize, backend=args.backend)
    _emit(report.to_json(), args.out)


def _cmd_gen(args):
    kind = Kind(args.kind)
    if kind is Kind.ERDOS_RENYI:
        if args.n is None:
            raise InputError("gen er needs --n")
        p = args.p if args.p is not None else 5 / args.n
        spec = er_spec(args.n, p, args.num_colors, args.seed,
                       ColorMode(args.color_mode or ColorMode.EVEN_SPLIT))
    else:
        sizes = _ints(args.clusters, "--clusters")
        spec = GenSpec(Kind.PLANTED, sum(sizes), args.seed, cluster_sizes=sizes,
                       p_intra=_floats(args.p_intra, "--p-intra"), p_inter=args.p_inter,
                       color_mode=ColorMode(args.color_mode or ColorMode.PER_CLUSTER),
                       num_colors=args.num_colors)
    g = generate(spec)
    if args.out_graph:
        write_graph(g, args.out_graph, args.out_colors)
    elif args.out_colors:
        raise InputError("--out-colors requires --out-graph")
    else:
        sys.stdout.write(format_combined(g))
    print(f"generated n={g.n} m={g.m} colors={g.num_colors}", file=sys.stderr)


def _cmd_bench(args):
    suite = args.suite
    if suite == "ratio":
        kwargs = {"size_cap": args.size_cap}
        if args.seeds is not None:
            kwargs["seed_count"] = args.seeds
    elif suite == "appendixC":
        kwargs = {"timeout_s": args.timeout}
        if args.seeds is not None:
            kwargs["seeds"] = args.seeds
        if args.sizes:
            kwargs["sizes"] = _ints(args.sizes, "--sizes")
        if args.color_counts:
            kwargs["color_counts"] = _ints(args.color_counts, "--color-counts")
    else:
        kwargs = {} if args.seeds is None else {"count": args.seeds}
    _, text = bench.SUITES[suite](backend=args.backend, **kwargs)
    _emit(text, args.out, newline="")


def _emit(text, out, newline=None):
    if out:
        with open(out, "w", encoding="utf-8", newline=newline) as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "gen":
            _cmd_gen(args)
        elif args.command == "bench":
            _cmd_bench(args)
        else:
            _cmd_solve(args)
    except DdsgError as exc:
        print(f"ddsg: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"ddsg: cannot access {exc.filename}: {exc.strerror}", file=sys.stderr)
        return InputError.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
