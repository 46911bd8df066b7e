"""Command-line front end.

Subcommands:
  mincut    minimum cut / bipartition of a graph or hypergraph file
  minimize  nontrivial minimizer of an explicit symmetric submodular f
  verify    run all configurations against brute force plus the property suite
  bench     CSV comparison of algorithm variants on seeded instances
  gen       emit a seeded random graph instance

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

import argparse
import csv
import json
import sys
import time

from .brute import brute_min_bipartition
from .driver import MinimizeConfig, optimal_set
from .instances import (ParseError, gen_random_graph, load_instance,
                        parse_table, write_graph)
from .oracles import (ConnectivityOracle, GraphCutOracle, HypergraphCutOracle)
from .values import values_equal
from .verify import verify_oracle, verify_table

VARIANTS = {
    "maxback": MinimizeConfig(algorithm="maxback"),
    "laxback": MinimizeConfig(),
    "laxback-ms": MinimizeConfig(init_threshold="min_singleton"),
    "queue-heap": MinimizeConfig(order_builder="queue"),
    "queue-bucket": MinimizeConfig(order_builder="queue", queue_kind="bucket"),
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="symcut",
        description="Minimum bipartitions of monotone consistent symmetric set functions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mincut", help="minimum cut of a graph or hypergraph file")
    p.add_argument("path")
    p.add_argument("--kind", choices=["graph", "hypergraph"], default=None)
    _add_config_flags(p)
    p.add_argument("--check", action="store_true",
                   help="re-verify the result against enumeration (n <= 24)")
    p.add_argument("--json", action="store_true", dest="as_json")
    p.set_defaults(func=cmd_mincut)

    p = sub.add_parser("minimize", help="minimize an explicit symmetric submodular f")
    p.add_argument("--table", required=True, help="set-function table file")
    _add_config_flags(p)
    p.add_argument("--check", action="store_true")
    p.add_argument("--json", action="store_true", dest="as_json")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("verify", help="verify against brute force and the property suite")
    p.add_argument("path", nargs="?", default=None)
    p.add_argument("--kind", choices=["graph", "hypergraph", "table"], default=None)
    p.add_argument("--random", type=int, default=0, metavar="COUNT",
                   help="verify COUNT seeded random graphs instead of a file")
    p.add_argument("--nmin", type=int, default=3)
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--p", type=float, default=0.6)
    p.add_argument("--wmax", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="CSV comparison of variants on seeded graphs")
    p.add_argument("--variants", default="maxback,laxback",
                   help=f"comma list from: {', '.join(sorted(VARIANTS))}")
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--p", type=float, default=0.6)
    p.add_argument("--wmax", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="emit a seeded random graph instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--wmax", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_gen)
    return parser


def _add_config_flags(p):
    p.add_argument("--algorithm", choices=["laxback", "maxback"], default="laxback")
    p.add_argument("--builder", choices=["scan", "queue"], default="scan")
    p.add_argument("--queue", choices=["heap", "bucket"], default="heap")
    p.add_argument("--init", choices=["inf", "min-singleton"], default="inf")
    p.add_argument("--first", type=int, default=1, metavar="VERTEX",
                   help="1-based vertex whose class starts every order")


def _config_from(args, n):
    return MinimizeConfig(
        algorithm=args.algorithm,
        order_builder=args.builder,
        queue_kind=args.queue,
        init_threshold="min_singleton" if args.init == "min-singleton" else "infinity",
        first_element=args.first - 1,
    )


def _canonical_side(best, n):
    """Smaller side of the bipartition; ties go to the side with vertex 0."""
    other = set(range(n)) - best
    if len(best) < len(other):
        return best
    if len(other) < len(best):
        return other
    return best if min(best) < min(other) else other


def _format_value(v):
    return repr(v) if isinstance(v, float) else str(v)


def _emit_report(args, report):
    if args.as_json:
        print(json.dumps(report, sort_keys=True, indent=2))
        return
    ids = ",".join(str(v) for v in report["set"])
    print(f"lambda={_format_value(report['lambda'])} S={{{ids}}}")
    stats = report["stats"]
    print(f"rounds: {stats['rounds']}")
    print(f"oracle_calls: {stats['oracle_calls']}")
    print(f"joins_per_round: {stats['joins_per_round']}")
    if "f_value" in report:
        print(f"f(S): {_format_value(report['f_value'])}")
    print(f"wall_ns: {report['wall_ns']}")


def cmd_mincut(args):
    text = _read(args.path)
    kind, instance = load_instance(text, args.kind)
    if kind == "table":
        print("error: table instances go through the 'minimize' subcommand",
              file=sys.stderr)
        return 2
    oracle = (GraphCutOracle(instance) if kind == "graph"
              else HypergraphCutOracle(instance))
    if args.queue == "bucket" and not oracle.integer_valued:
        print("error: the bucket queue needs integer weights; "
              "this instance parsed as floats", file=sys.stderr)
        return 2
    config = _config_from(args, instance.n)
    start = time.perf_counter_ns()
    best, value, stats = optimal_set(oracle, instance.n, config)
    wall = time.perf_counter_ns() - start
    side = _canonical_side(best, instance.n)
    report = {
        "instance": {"kind": kind, "n": instance.n, "m": instance.m,
                     "integer_weights": instance.integer_weights},
        "config": {"algorithm": config.algorithm,
                   "order_builder": config.order_builder,
                   "queue_kind": config.queue_kind,
                   "init_threshold": config.init_threshold,
                   "first_element": config.first_element + 1},
        "lambda": value,
        "set": sorted(v + 1 for v in side),
        "stats": {"rounds": stats.rounds, "oracle_calls": stats.oracle_calls,
                  "joins_per_round": stats.joins_per_round,
                  "calls_per_order": [list(x) for x in stats.calls_per_order],
                  "final_value": stats.final_value},
        "wall_ns": wall,
    }
    if args.check:
        if instance.n <= 24:
            expected = brute_min_bipartition(oracle, instance.n).value
            ok = values_equal(value, expected)
            report["check"] = {"ran": True, "ok": ok, "expected": expected}
            if not ok:
                _emit_report(args, report)
                print(f"error: value {value} != enumerated {expected}", file=sys.stderr)
                return 1
        else:
            report["check"] = {"ran": False, "ok": None,
                               "reason": "instance too large to enumerate"}
    _emit_report(args, report)
    return 0


def cmd_minimize(args):
    table = parse_table(_read(args.table))
    from .brute import check_symmetric_submodular
    symmetric, submodular = (check_symmetric_submodular(table)
                             if table.n <= 12 else (True, True))
    if not symmetric or not submodular:
        print("error: table is not a symmetric submodular function "
              f"(symmetric={symmetric}, submodular={submodular})", file=sys.stderr)
        return 2
    oracle = ConnectivityOracle(table)
    if args.queue == "bucket" and not oracle.integer_valued:
        print("error: the bucket queue needs integer values", file=sys.stderr)
        return 2
    config = _config_from(args, table.n)
    start = time.perf_counter_ns()
    best, value, stats = optimal_set(oracle, table.n, config)
    wall = time.perf_counter_ns() - start
    side = _canonical_side(best, table.n)
    mask = 0
    for v in side:
        mask |= 1 << v
    report = {
        "instance": {"kind": "table", "n": table.n},
        "config": {"algorithm": config.algorithm,
                   "order_builder": config.order_builder,
                   "queue_kind": config.queue_kind,
                   "init_threshold": config.init_threshold,
                   "first_element": config.first_element + 1},
        "lambda": value,
        "f_value": table.table_values[mask],
        "set": sorted(v + 1 for v in side),
        "stats": {"rounds": stats.rounds, "oracle_calls": stats.oracle_calls,
                  "joins_per_round": stats.joins_per_round,
                  "calls_per_order": [list(x) for x in stats.calls_per_order],
                  "final_value": stats.final_value},
        "wall_ns": wall,
    }
    if args.check:
        f = table.table_values
        best_f = min(f[m] for m in range(1, (1 << table.n) - 1))
        ok = f[mask] == best_f
        report["check"] = {"ran": True, "ok": ok, "expected": best_f}
        if not ok:
            _emit_report(args, report)
            print(f"error: f(S) = {f[mask]} != enumerated {best_f}", file=sys.stderr)
            return 1
    _emit_report(args, report)
    return 0


def cmd_verify(args):
    jobs = []
    if args.random:
        if not 2 <= args.nmin <= args.nmax:
            print("error: need 2 <= nmin <= nmax", file=sys.stderr)
            return 2
        for i in range(args.random):
            n = args.nmin + i % (args.nmax - args.nmin + 1)
            graph = gen_random_graph(n, args.p, args.wmax, seed=args.seed + i,
                                     connected=True)
            jobs.append((f"random[{i}] n={n}", "graph", graph))
    elif args.path:
        kind, instance = load_instance(_read(args.path), args.kind)
        jobs.append((args.path, kind, instance))
    else:
        print("error: give an instance path or --random COUNT", file=sys.stderr)
        return 2

    failures = 0
    for label, kind, instance in jobs:
        if kind == "table":
            if instance.n > 12:
                print(f"error: {label}: table too large to verify exhaustively "
                      "(n <= 12)", file=sys.stderr)
                return 2
            report = verify_table(instance)
        else:
            oracle_cls = GraphCutOracle if kind == "graph" else HypergraphCutOracle
            if instance.n > 24:
                print(f"error: {label}: too large to enumerate (n <= 24)",
                      file=sys.stderr)
                return 2
            report = verify_oracle(oracle_cls(instance), instance.n,
                                   strict_oracle=oracle_cls(instance, early_exit=False))
        for entry in report.entries:
            mark = "ok  " if entry.ok else "FAIL"
            detail = f"  ({entry.detail})" if entry.detail and not entry.ok else ""
            print(f"[{mark}] {label}: {entry.name}{detail}")
            if not entry.ok:
                failures += 1
    print(f"verify: {'all checks passed' if not failures else f'{failures} checks failed'}")
    return 0 if failures == 0 else 1


def cmd_bench(args):
    names = [v.strip() for v in args.variants.split(",") if v.strip()]
    for name in names:
        if name not in VARIANTS:
            print(f"error: unknown variant {name!r} "
                  f"(choose from {', '.join(sorted(VARIANTS))})", file=sys.stderr)
            return 2
    graphs = [gen_random_graph(args.n, args.p, args.wmax, seed=args.seed + i,
                               connected=True)
              for i in range(args.count)]
    rows, ok = bench_rows(graphs, names)
    writer = csv.writer(sys.stdout)
    writer.writerow(["n", "m", "variant", "rounds", "oracle_calls",
                     "joins_total", "lambda", "wall_ns"])
    for row in rows:
        writer.writerow([row["n"], row["m"], row["variant"], row["rounds"],
                         row["oracle_calls"], row["joins_total"], row["lambda"],
                         row["wall_ns"]])
    if not ok:
        print("error: variants disagreed on some instance", file=sys.stderr)
        return 1
    return 0


def bench_rows(graphs, variant_names):
    """One row per (instance, variant); flags whether all values agreed."""
    rows = []
    agreed = True
    for idx, graph in enumerate(graphs):
        values = {}
        for name in variant_names:
            config = VARIANTS[name]
            oracle = GraphCutOracle(graph)
            if config.queue_kind == "bucket" and not oracle.integer_valued:
                continue
            start = time.perf_counter_ns()
            _, value, stats = optimal_set(oracle, graph.n, config)
            wall = time.perf_counter_ns() - start
            values[name] = value
            rows.append({
                "instance": idx, "n": graph.n, "m": graph.m, "variant": name,
                "rounds": stats.rounds, "oracle_calls": stats.oracle_calls,
                "joins_total": sum(stats.joins_per_round), "lambda": value,
                "wall_ns": wall,
            })
        if len(set(values.values())) > 1:
            agreed = False
    return rows, agreed


def cmd_gen(args):
    graph = gen_random_graph(args.n, args.p, args.wmax, seed=args.seed,
                             connected=args.connected)
    sys.stdout.write(write_graph(graph))
    return 0


def _read(path):
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run():
    raise SystemExit(main())


if __name__ == "__main__":
    run()
