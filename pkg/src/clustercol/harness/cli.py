"""Command-line front end.

Global flags may also come from the environment: ``CLUSTERCOL_SEED``,
``CLUSTERCOL_BUDGET_NODES``, ``CLUSTERCOL_BUDGET_SECONDS``,
``CLUSTERCOL_FORMAT`` and ``CLUSTERCOL_OUT``.  Per-field budgets
(``CLUSTERCOL_MINOR_NODES`` and so on) are read by ``Budgets.from_env``.
Flags win over the environment.

Exit status: 0 on success, 1 when a check fails, 2 on bad usage or input,
3 when a search ran out of budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .. import generators as gen
from ..colouring import (
    Colouring,
    heart_colouring,
    optimal_cluster_colouring,
    parity_colouring,
    two_colour,
    verify_clustering,
    weak_closure_colouring,
)
from ..colouring.algorithms import two_colour_bound_holds, weak_closure_colours
from ..config import ENV_PREFIX, BudgetExceeded, Budgets, InputError
from ..graph import Graph, from_edgelist
from ..minors import has_minor
from ..colouring.oracles import chromatic_number, defect_oracle
from .report import render_graph, report_store
from .suites import SUITES, SuiteConfig, run_suite

EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 1, 2, 3

GENERATORS = {
    "path": lambda a: gen.path(a.n),
    "cycle": lambda a: gen.cycle(a.n),
    "complete": lambda a: gen.complete(a.n),
    "star": lambda a: gen.star(a.n),
    "fan": lambda a: gen.fan(a.n),
    "fat-star": lambda a: gen.fat_star(a.n),
    "fat-path": lambda a: gen.fat_path(a.n),
    "bowtie": lambda a: gen.bowtie(),
    "closure": lambda a: gen.closure_tree(a.h, a.k),
    "weak-closure": lambda a: gen.weak_closure_tree(a.h, a.k),
    "ternary": lambda a: gen.ternary_lower_bound(a.k, a.c, a.budgets),
    "random": lambda a: gen.random_graph(a.n, a.p, a.seed),
    "random-tree": lambda a: gen.random_tree(a.n, a.max_degree, a.seed),
}


def _env(name: str, cast, default):
    raw = os.environ.get(ENV_PREFIX + name)
    return default if raw is None else cast(raw)


def _read_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read graph file {path}: {exc}") from exc
    return from_edgelist(text)


def _read_colouring(path: str) -> list[int]:
    text = Path(path).read_text().strip()
    if text.startswith("["):
        return [int(x) for x in json.loads(text)]
    return [int(x) for x in text.split()]


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj) -> None:
    _emit(args, json.dumps(obj, sort_keys=True) + "\n")


def cmd_gen(args) -> int:
    if args.family == "x-family":
        members = gen.x_family(args.k, args.c, args.count, args.budgets)
        if args.format == "json":
            _emit_json(args, [{"n": g.n, "edges": [list(e) for e in g.edges()]} for g in members])
        else:
            _emit(args, "\n".join(render_graph(g, args.format) for g in members))
        return 0
    g = GENERATORS[args.family](args)
    if args.format == "json":
        _emit_json(args, {"n": g.n, "edges": [list(e) for e in g.edges()]})
    else:
        _emit(args, render_graph(g, args.format))
    return 0


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise InputError(f"--algo {args.algo} needs " + ", ".join("--" + n for n in missing))


def cmd_colour(args) -> int:
    g = _read_graph(args.graph)
    out: dict = {"algo": args.algo}
    if args.algo == "parity":
        col, bound = parity_colouring(g, args.root), None
    elif args.algo == "two":
        _need(args, "k")
        col = two_colour(g, args.k, budgets=args.budgets)
        bound = ("clustering", args.k)
    elif args.algo == "heart":
        _need(args, "h", "k", "w")
        col = heart_colouring(g, args.h, args.k, args.w, budgets=args.budgets)
        bound = ("colours+clustering", (2**args.h - 2, args.k * args.w))
    elif args.algo == "weakclosure":
        _need(args, "h", "k")
        col = weak_closure_colouring(g, args.h, args.k, args.budgets)
        bound = ("colours", weak_closure_colours(args.h))
    else:
        _need(args, "c")
        _, col = optimal_cluster_colouring(g, args.c, args.budgets)
        bound = ("clustering", args.c)
    if not isinstance(col, Colouring):
        out.update(witness={"kind": col.kind, "pattern_n": col.model.pattern.n, "branch_sets": col.model.as_lists()},
                   bound_check="pass")
        _emit_json(args, out)
        return 0
    rep = verify_clustering(g, col)
    ok = True
    if bound is not None:
        kind, value = bound
        if kind == "clustering" and args.algo == "two":
            ok = rep.num_colours <= 2 and two_colour_bound_holds(rep.max_component, value)
        elif kind == "clustering":
            ok = rep.max_component <= value
        elif kind == "colours":
            ok = rep.num_colours <= value
        else:
            ok = rep.num_colours <= value[0] and rep.max_component <= value[1]
    out.update(colouring=list(col.colour), colours=rep.num_colours, clustering=rep.max_component,
               defect=rep.defect, bound_check="pass" if ok else "fail")
    _emit_json(args, out)
    return 0 if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    rep = verify_clustering(g, _read_colouring(args.colouring))
    ok = args.c is None or rep.max_component <= args.c
    _emit_json(args, {"colours": rep.num_colours, "clustering": rep.max_component, "defect": rep.defect,
                      "ok": ok})
    return 0 if ok else EXIT_FAIL


def cmd_minor(args) -> int:
    host, pattern = _read_graph(args.host), _read_graph(args.pattern)
    try:
        model = has_minor(host, pattern, args.budgets)
    except BudgetExceeded as exc:
        _emit_json(args, {"result": "indeterminate", "model": None, "reason": str(exc)})
        return 0
    _emit_json(args, {"result": "yes" if model else "no", "model": model.as_lists() if model else None})
    return 0


def cmd_oracle(args) -> int:
    g = _read_graph(args.graph)
    if args.kind == "cluster":
        k, col = optimal_cluster_colouring(g, args.c, args.budgets)
        _emit_json(args, {"kind": "cluster", "c": args.c, "colours": k, "colouring": list(col.colour)})
    elif args.kind == "defect":
        _emit_json(args, {"kind": "defect", "d": args.d, "colours": defect_oracle(g, args.d, args.budgets)})
    else:
        _emit_json(args, {"kind": "chromatic", "colours": chromatic_number(g)})
    return 0


def cmd_suite(args) -> int:
    report = run_suite(args.name, SuiteConfig(seed=args.seed, budgets=args.budgets))
    if args.out:
        report_store(report, args.out)
    else:
        sys.stdout.write(json.dumps(report.as_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    return 0 if report.ok else EXIT_FAIL


def cmd_export(args) -> int:
    if not args.out:
        raise InputError("export needs --out")
    fmt = "edgelist" if args.format == "json" else args.format
    g = _read_graph(args.graph)
    Path(args.out).write_text(render_graph(g, fmt))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clustercol", description="Clustered colouring experiments.")
    p.add_argument("--seed", type=int, default=_env("SEED", int, 0))
    p.add_argument("--budget-nodes", type=int, default=_env("BUDGET_NODES", int, None),
                   help="node budget for every exhaustive search")
    p.add_argument("--budget-seconds", type=float, default=_env("BUDGET_SECONDS", float, None))
    p.add_argument("--format", choices=("edgelist", "dot", "json"), default=_env("FORMAT", str, "edgelist"))
    p.add_argument("--out", default=_env("OUT", str, None))
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a graph")
    g.add_argument("family", choices=sorted(GENERATORS) + ["x-family"])
    g.add_argument("--n", type=int, default=5)
    g.add_argument("--h", type=int, default=2)
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--c", type=int, default=1)
    g.add_argument("--p", type=float, default=0.3)
    g.add_argument("--max-degree", type=int, default=3)
    g.add_argument("--count", type=int, default=10, help="x-family: maximum number of members")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("colour", help="colour a graph")
    c.add_argument("--algo", choices=("parity", "two", "heart", "weakclosure", "oracle"), required=True)
    c.add_argument("--graph", required=True)
    for name in ("k", "h", "w", "c"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("--root", type=int, default=0)
    c.set_defaults(func=cmd_colour)

    v = sub.add_parser("verify", help="check a colouring")
    v.add_argument("--graph", required=True)
    v.add_argument("--colouring", required=True)
    v.add_argument("--c", type=int)
    v.set_defaults(func=cmd_verify)

    m = sub.add_parser("minor", help="decide whether PATTERN is a minor of HOST")
    m.add_argument("--host", required=True)
    m.add_argument("--pattern", required=True)
    m.set_defaults(func=cmd_minor)

    o = sub.add_parser("oracle", help="exact colouring numbers")
    o.add_argument("kind", choices=("cluster", "defect", "chromatic"))
    o.add_argument("--graph", required=True)
    o.add_argument("--c", type=int, default=1)
    o.add_argument("--d", type=int, default=0)
    o.set_defaults(func=cmd_oracle)

    s = sub.add_parser("suite", help="run an experiment suite")
    s.add_argument("name", help="one of: " + ", ".join(sorted(SUITES)))
    s.set_defaults(func=cmd_suite)

    e = sub.add_parser("export", help="convert a graph file")
    e.add_argument("--graph", required=True)
    e.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    nodes = args.budget_nodes
    overrides = {"seconds": args.budget_seconds}
    if nodes is not None:
        overrides.update(minor_nodes=nodes, subgraph_nodes=nodes, strong_model_nodes=nodes, colouring_nodes=nodes)
    args.budgets = Budgets.from_env(**overrides)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"clustercol: indeterminate: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InputError as exc:
        print(f"clustercol: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"clustercol: io error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
