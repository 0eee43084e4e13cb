"""Command line interface.

Exit codes: 0 on success, 1 when a requested check or equivalence comes out
negative, 2 on input or usage errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .chords import (InvariantViolation, build_canonical, canonical_class,
                     default_partition, parse_diagram, rosette_to_diagram,
                     serialize_diagram)
from .flagmoves import flag_equivalent, move_json
from .graph import FormatError, GraphError, parse_graph, serialize_graph
from .invariants import (edge_identity_report, restricted_polynomial,
                         recurrence_polynomial, state_sum_polynomial)
from .polynomial import (ONE, X_MINUS_1, coefficient_slice, format_poly,
                         serialize_poly)
from .randgraph import random_graph
from .topology import report_json
from .universality import extract_coefficients


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_graph(path):
    return parse_graph(_read_text(path))


def _print_poly(p, as_json):
    print(serialize_poly(p) if as_json else format_poly(p))


def _cmd_info(args):
    g = _load_graph(args.graph)
    print(report_json(g))
    return 0


def _cmd_poly(args):
    g = _load_graph(args.graph)
    workers = args.parallel
    if args.variant == "Rprime":
        p = restricted_polynomial(g, method=args.method, workers=workers)
    elif args.method == "recurrence":
        p = recurrence_polynomial(g)
    else:
        p = state_sum_polynomial(g, workers=workers)
    _print_poly(p, args.json)
    return 0


def _cmd_coeff(args):
    g = _load_graph(args.graph)
    p = state_sum_polynomial(g)
    sl = coefficient_slice(p, args.i, args.j, args.k, args.l, args.m)
    _print_poly(sl, args.json)
    return 0


def _cmd_check(args):
    g = _load_graph(args.graph)
    failed = 0
    for eid in sorted(g.edges):
        rep = edge_identity_report(g, eid)
        desc = rep["kind"]
        if rep["triviality"]:
            desc += f" ({rep['triviality']})"
        if rep["twisted"]:
            desc += " twisted"
        if rep["holds"] is None:
            verdict = "skipped"
        elif rep["holds"]:
            verdict = "ok"
        else:
            verdict = "FAIL"
            failed += 1
        print(f"{eid}: {desc} [{rep['identity']}] {verdict}")
    if not g.edges:
        print("no edges")
    return 1 if failed else 0


def _cmd_canonical(args):
    text = _read_text(args.input)
    if any(line.strip().startswith("word:")
           for line in text.splitlines()):
        d = parse_diagram(text)
    else:
        d = rosette_to_diagram(parse_graph(text))
    cls = canonical_class(d)
    print(f"class: i={cls.i} j={cls.j} k={cls.k} l={cls.l} m={cls.m}")
    part = default_partition(*cls)
    if part is None:
        raise InvariantViolation(
            f"no canonical layout for realizable class {tuple(cls)}")
    rep = build_canonical(cls.i, cls.j, cls.k, part, cls.m)
    print(serialize_diagram(rep), end="")
    return 0


def _cmd_equiv(args):
    g1 = _load_graph(args.graph1)
    g2 = _load_graph(args.graph2)
    res = flag_equivalent(g1, g2, budget=args.budget, mode=args.mode)
    doc = {"result": res.answer, "explored": res.explored,
           "moves": None if res.moves is None
           else [move_json(m) for m in res.moves]}
    print(json.dumps(doc, indent=2))
    return 1 if res.answer == "no" else 0


def _cmd_lambda(args):
    table = extract_coefficients(state_sum_polynomial, X_MINUS_1 + ONE,
                                 args.max_n, args.max_flags)
    rows = []
    for (i, j, k, l, m), val in table.rows():
        rows.append({"i": i, "j": j, "k": k, "l": l, "m": m,
                     "value": json.loads(serialize_poly(val))})
    print(json.dumps(rows, indent=2))
    return 0


def _cmd_gen(args):
    seed = args.seed
    if seed is None:
        seed = random.SystemRandom().randrange(2 ** 32)
        print(f"seed: {seed}", file=sys.stderr)
    g = random_graph(seed, args.vertices, args.edges, args.flags,
                     twist_prob=args.twist_prob)
    print(serialize_graph(g))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ribbonpoly",
        description="Exact polynomial invariants of ribbon graphs with "
                    "flags.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="invariants and boundary structure")
    p.add_argument("graph", help="graph file, - for stdin")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("poly", help="compute the polynomial")
    p.add_argument("graph")
    p.add_argument("--method", choices=("state-sum", "recurrence"),
                   default="state-sum")
    p.add_argument("--variant", choices=("R", "Rprime"), default="R")
    p.add_argument("--json", action="store_true")
    p.add_argument("--parallel", type=int, default=None, metavar="N",
                   help="worker processes for the subset expansion")
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("coeff", help="one coefficient slice in X-1")
    p.add_argument("graph")
    for name in "ijklm":
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_coeff)

    p = sub.add_parser("check", help="verify edge identities")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("canonical", help="canonical class and diagram")
    p.add_argument("input", help="diagram or one-vertex graph file")
    p.set_defaults(func=_cmd_canonical)

    p = sub.add_parser("equiv", help="decide flag-move equivalence")
    p.add_argument("graph1")
    p.add_argument("graph2")
    p.add_argument("--budget", type=int, default=10000)
    p.add_argument("--mode", choices=("strict", "relaxed"),
                   default="strict")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("lambda", help="coefficient table of the polynomial")
    p.add_argument("--max-n", type=int, default=2, dest="max_n")
    p.add_argument("--max-flags", type=int, default=4, dest="max_flags")
    p.set_defaults(func=_cmd_lambda)

    p = sub.add_parser("gen", help="generate a seeded random graph")
    p.add_argument("--vertices", type=int, default=2)
    p.add_argument("--edges", type=int, default=3)
    p.add_argument("--flags", type=int, default=0)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--twist-prob", type=float, default=0.5,
                   dest="twist_prob")
    p.set_defaults(func=_cmd_gen)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, GraphError, InvariantViolation, OSError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())
