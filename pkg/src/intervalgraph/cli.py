"""Command-line front end.

Exit codes: 0 = yes/ok, 1 = no/violation, 2 = usage or input error.
"""

import argparse
import json
import sys

from . import bench as bench_mod
from . import fixtures, formats, oracle, search
from .errors import InputError, SizeGuardExceeded
from .generate import generate
from .graph import VertexOrdering
from .recognize import UNIT_STRATEGIES, recognize_interval, recognize_unit_interval
from .verify import (verify_clique_path, verify_interval_ordering,
                     verify_representation, verify_umbrella_ordering)

TRACE_SWEEPS = ("lbfs", "lbfs+", "lbfs-up", "lbfs-delta")


def _load_graph(args):
    source = sys.stdin if args.graph == "-" else args.graph
    return formats.parse_graph(source, fmt=args.format)


def _parse_ordering_arg(text, n):
    try:
        ids = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"--ordering must list integers, got {text!r}") from None
    return VertexOrdering.from_list(ids, universe=n)


def _emit(doc, as_json):
    if as_json:
        sys.stdout.write(formats.dumps(doc))


def _cmd_recognize(args):
    g = _load_graph(args)
    outcome = recognize_interval(g)
    _emit(formats.outcome_to_json(outcome), args.json)
    if outcome.verdict:
        if not args.json:
            print(f"yes: interval graph with {len(outcome.clique_path)} maximal cliques")
        return 0
    if not args.json:
        print(f"no: not an interval graph; violation at {outcome.violation}")
    return 1


def _cmd_recognize_unit(args):
    g = _load_graph(args)
    outcome = recognize_unit_interval(g, args.strategy)
    _emit(formats.outcome_to_json(outcome), args.json)
    if outcome.verdict:
        if not args.json:
            print(f"yes: unit interval graph ({args.strategy})")
        return 0
    if not args.json:
        print(f"no: not a unit interval graph; violation at {outcome.violation}")
    return 1


def _cmd_verify(args):
    g = _load_graph(args)
    if args.certificate:
        with open(args.certificate) as fh:
            doc = json.load(fh)
        ordering, rep, cp, violation = formats.certificate_from_json(doc, g.n)
        unit = doc.get("kind") == "unit-interval"
        problems = []
        if doc.get("verdict") == "yes":
            check = (verify_umbrella_ordering if unit else verify_interval_ordering)(g, ordering)
            if check is not None:
                problems.append(f"ordering: {check}")
            if rep is not None:
                d = verify_representation(g, rep, unit_mode=unit)
                if d is not None:
                    problems.append(f"representation: {d}")
            if cp is not None:
                d = verify_clique_path(g, cp)
                if d is not None:
                    problems.append(f"clique path: {d}")
        else:
            check = (verify_umbrella_ordering if unit else verify_interval_ordering)(g, ordering)
            if check is None:
                problems.append("certificate claims a violation but the ordering verifies")
        for p in problems:
            print(f"FAIL {p}")
        if not problems:
            print("certificate verifies")
        return 0 if not problems else 1

    if not args.ordering:
        raise InputError("verify needs --ordering or --certificate")
    sigma = _parse_ordering_arg(args.ordering, g.n)
    check = (verify_umbrella_ordering if args.kind == "umbrella"
             else verify_interval_ordering)(g, sigma)
    doc = {"kind": args.kind, "ok": check is None}
    if check is not None:
        doc["violation"] = formats.violation_to_json(check)
    _emit(doc, args.json)
    if check is None:
        if not args.json:
            print(f"ok: {args.kind} ordering")
        return 0
    if not args.json:
        print(f"violation at {check}")
    return 1


def _cmd_certify(args):
    from .certify import (ordering_to_clique_path, ordering_to_representation,
                          umbrella_to_unit_representation)
    from .errors import NotIntervalOrderingError, NotUmbrellaOrderingError

    g = _load_graph(args)
    sigma = _parse_ordering_arg(args.ordering, g.n)
    try:
        if args.unit:
            rep = umbrella_to_unit_representation(g, sigma)
        else:
            rep = ordering_to_representation(g, sigma)
        cp = ordering_to_clique_path(g, sigma)
    except (NotIntervalOrderingError, NotUmbrellaOrderingError) as exc:
        doc = {"verdict": "no", "violation": formats.violation_to_json(exc.violation)}
        _emit(doc, args.json)
        if not args.json:
            print(f"not certifiable: {exc}")
        return 1
    doc = {
        "verdict": "yes",
        "kind": "unit-interval" if args.unit else "interval",
        "ordering": sigma.to_list(),
        "intervals": formats.representation_to_json(rep),
        "clique_path": cp.as_lists(),
        "sweeps": {},
    }
    _emit(doc, True)
    return 0


def _cmd_trace(args):
    g = _load_graph(args)
    sweep = args.trace_sweep
    prior = _parse_ordering_arg(args.ordering, g.n) if args.ordering else None
    if sweep == "lbfs":
        ordering, trace = search.lbfs(g, start=args.start)
    elif sweep == "lbfs+":
        if prior is None:
            prior, _ = search.lbfs(g)
        ordering, trace = search.lbfs_plus(g, prior)
    elif sweep == "lbfs-up":
        if prior is None:
            tau, _ = search.lbfs(g)
            prior, _ = search.lbfs_plus(g, tau)
        ordering, trace = search.lbfs_up(g, prior)
    else:
        start = args.start
        if start is None:
            tau, _ = search.lbfs(g)
            start = tau.last
        ordering = search.lbfs_delta(g, start)
        trace = search.replay_trace(g, ordering)

    iterations = []
    for i in range(1, g.n + 1):
        iterations.append({
            "i": i,
            "vertex": ordering.vertex_at(i),
            "label": trace.label(g, i),
            "snapshot": trace.snapshot(i),
        })
    doc = {"sweep": sweep, "ordering": ordering.to_list(), "iterations": iterations}
    code = 0
    if args.check_well_anchored:
        defect = oracle.check_well_anchored(g, ordering, trace, max_enum=args.max_n)
        doc["well_anchored"] = defect is None
        if defect is not None:
            doc["offending_snapshot"] = {
                "position": defect.position, "chosen": defect.chosen,
                "snapshot": list(defect.snapshot), "exposed": list(defect.exposed),
                "reason": defect.reason,
            }
            code = 1
    if args.json:
        _emit(doc, True)
    else:
        for row in iterations:
            print(f"{row['i']:>6} visit {row['vertex']:>6}  label={row['label']}  "
                  f"snapshot={row['snapshot']}")
        if args.check_well_anchored:
            print("well-anchored" if code == 0 else f"offending: {doc['offending_snapshot']}")
    return code


def _cmd_bench(args):
    sizes = ([int(tok) for tok in args.sizes.replace(",", " ").split()]
             if args.sizes else None)
    rows = bench_mod.run(sizes or bench_mod.DEFAULT_SIZES, seed=args.seed,
                         repeats=args.repeats, mode="jit")
    if args.compare_python:
        rows += bench_mod.run(sizes or bench_mod.PYTHON_SIZES, seed=args.seed,
                              repeats=args.repeats, mode="python")
    if args.json:
        _emit({"rows": rows}, True)
    else:
        print(f"{'mode':<8}{'n':>10}{'m':>10}{'seconds':>12}{'ns/edge':>10}")
        for r in rows:
            print(f"{r['mode']:<8}{r['n']:>10}{r['m']:>10}"
                  f"{r['seconds']:>12.4f}{r['ns_per_edge']:>10.1f}")
    return 0


def _cmd_generate(args):
    params = {"n": args.n, "seed": args.seed}
    if args.kind == "gnp":
        params["p"] = args.p
    if args.kind == "named":
        params = {"name": args.name}
    if args.span is not None:
        params["span"] = args.span
    gen = generate(args.kind, **params)
    sys.stdout.write(formats.write_edgelist(gen.graph))
    return 0


def build_parser():
    top = argparse.ArgumentParser(
        prog="intervalgraph",
        description="Interval and unit interval graph recognition by multi-sweep LBFS")
    sub = top.add_subparsers(dest="command", required=True)

    def add_graph_args(p):
        p.add_argument("graph", help="input graph file, or - for stdin")
        p.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
        p.add_argument("--json", action="store_true", help="print a JSON document")

    p = sub.add_parser("recognize", help="recognize an interval graph")
    add_graph_args(p)
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("recognize-unit", help="recognize a unit interval graph")
    add_graph_args(p)
    p.add_argument("--strategy", choices=UNIT_STRATEGIES, default="three-sweep")
    p.set_defaults(func=_cmd_recognize_unit)

    p = sub.add_parser("verify", help="verify an ordering or a certificate")
    add_graph_args(p)
    p.add_argument("--ordering", help="vertex ids in order, e.g. '1 2 3'")
    p.add_argument("--kind", choices=("interval", "umbrella"), default="interval")
    p.add_argument("--certificate", help="outcome JSON to re-verify")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("certify", help="build certificates from an ordering")
    add_graph_args(p)
    p.add_argument("--ordering", required=True)
    p.add_argument("--unit", action="store_true",
                   help="treat the ordering as an umbrella ordering")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("trace", help="dump per-iteration snapshots of a sweep")
    add_graph_args(p)
    p.add_argument("--trace-sweep", choices=TRACE_SWEEPS, default="lbfs")
    p.add_argument("--start", type=int, help="forced first vertex (lbfs, lbfs-delta)")
    p.add_argument("--ordering", help="prior ordering (lbfs+, lbfs-up)")
    p.add_argument("--check-well-anchored", action="store_true")
    p.add_argument("--max-n", type=int, default=oracle.DEFAULT_GUARD,
                   help="size guard for oracle end-vertex enumeration")
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("bench", help="wall-time benchmark over doubling sizes")
    p.add_argument("--sizes", help="comma-separated n values")
    p.add_argument("--seed", type=int, default=20240)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--compare-python", action="store_true",
                   help="also time the interpreted kernel path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("generate", help="write a generated graph as edgelist")
    p.add_argument("--kind", choices=("random-interval", "random-unit", "gnp", "named"),
                   required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--span", type=int)
    p.add_argument("--name", help="fixture name for --kind named")
    p.set_defaults(func=_cmd_generate)

    return top


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, SizeGuardExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
