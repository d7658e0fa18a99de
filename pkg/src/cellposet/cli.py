"""Command-line front end.

Exit codes: 0 on success, 1 when a check or reduction fails, 2 on usage or
input errors.  All JSON output uses sorted keys so runs are reproducible
byte for byte.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructions, reduction
from .checkers import check_manifold_h, check_rp_h, check_sphere_h
from .graphs import (ColoredGraph, graph_from_dict, graph_to_dict,
                     graph_to_dot, graph_to_json, validate_admissible)
from .homology import betti_gf2, h_double_prime
from .posets import (SimplicialPoset, f_vector, from_graph, h_vector,
                     poset_from_dict, poset_to_json, validate_poset)


def _emit(data) -> None:
    print(json.dumps(data, sort_keys=True, indent=2))


def _load_any(path: str) -> ColoredGraph | SimplicialPoset:
    data = json.loads(Path(path).read_text())
    if "edges" in data:
        return graph_from_dict(data)
    if "cells" in data:
        return poset_from_dict(data)
    raise ValueError(f"{path}: neither a graph nor a poset JSON file")


def _write_out(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)


def _parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad integer vector {text!r}") from exc


def _invariants(p: SimplicialPoset) -> dict:
    f = f_vector(p)
    h = h_vector(f)
    betti = betti_gf2(p)
    return {
        "f": list(f),
        "h": list(h),
        "betti_gf2": list(betti),
        "h_double_prime": list(h_double_prime(h, betti)),
    }


def cmd_build(args) -> int:
    if args.target == "product-spheres":
        g = constructions.product_spheres_graph(args.n, args.m)
        if args.reduce:
            g, steps = reduction.run_schedule(
                g, reduction.cancellation_schedule(args.n, args.m))
            _emit({"vertices": len(g.vertices),
                   "steps": [s.to_dict() for s in steps]})
        else:
            _emit({"vertices": len(g.vertices), "edges": len(g.edges)})
        _write_out(args.out, graph_to_json(g))
        return 0
    if args.target == "rp":
        p = constructions.cross_polytope_quotient(args.n)
        _emit(_invariants(p))
        _write_out(args.out, poset_to_json(p))
        return 0
    # from-json: load, validate, summarize
    obj = _load_any(args.file)
    if isinstance(obj, ColoredGraph):
        violations = validate_admissible(obj)
        _emit({"kind": "graph", "d": obj.d, "vertices": len(obj.vertices),
               "edges": len(obj.edges), "admissible": not violations,
               "violations": violations})
        return 0 if not violations else 1
    violations = validate_poset(obj)
    _emit({"kind": "poset", "d": obj.d, "f": list(f_vector(obj)),
           "valid": not violations, "violations": violations})
    return 0 if not violations else 1


def cmd_invariants(args) -> int:
    obj = _load_any(args.file)
    p = from_graph(obj) if isinstance(obj, ColoredGraph) else obj
    _emit(_invariants(p))
    return 0


def cmd_reduce(args) -> int:
    obj = _load_any(args.file)
    if not isinstance(obj, ColoredGraph):
        raise ValueError("reduce expects a graph JSON file")
    if args.schedule == "symbolic":
        if args.n is None or args.m is None:
            raise ValueError("--schedule symbolic requires --n and --m")
        final, steps = reduction.run_schedule(
            obj, reduction.cancellation_schedule(args.n, args.m))
    else:
        final, steps = reduction.greedy_reduce(obj)
    _emit({"vertices": len(final.vertices), "steps": len(steps)})
    if args.certificate:
        Path(args.certificate).write_text(
            json.dumps([s.to_dict() for s in steps], sort_keys=True, indent=2))
    _write_out(args.out, graph_to_json(final))
    return 0


def cmd_check(args) -> int:
    if args.kind == "sphere-h":
        result = check_sphere_h(_parse_vector(args.h))
    elif args.kind == "rp-h":
        result = check_rp_h(_parse_vector(args.h), args.n)
    else:
        result = check_manifold_h(_parse_vector(args.h), args.d)
    _emit(result.to_dict())
    return 0 if result.ok else 1


def cmd_export(args) -> int:
    obj = _load_any(args.file)
    if not isinstance(obj, ColoredGraph):
        raise ValueError("DOT export expects a graph JSON file")
    sys.stdout.write(graph_to_dot(obj))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cellposet",
        description="Cell decompositions of manifolds from colored graphs: "
                    "build, reduce, and check face-vector invariants.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct graphs and posets")
    bsub = b.add_subparsers(dest="target", required=True)
    ps = bsub.add_parser("product-spheres", help="colored graph for S^n x S^m")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--m", type=int, required=True)
    ps.add_argument("--reduce", action="store_true",
                    help="cancel down to a minimal crystallization")
    ps.add_argument("--out", help="write the (final) graph JSON here")
    rp = bsub.add_parser("rp", help="cell decomposition of RP^(n-1)")
    rp.add_argument("--n", type=int, required=True)
    rp.add_argument("--out", help="write the poset JSON here")
    fj = bsub.add_parser("from-json", help="load and validate a JSON file")
    fj.add_argument("file")
    b.set_defaults(func=cmd_build)

    inv = sub.add_parser("invariants",
                         help="f, h, GF(2) Betti and h'' of a graph or poset")
    inv.add_argument("file")
    inv.set_defaults(func=cmd_invariants)

    red = sub.add_parser("reduce", help="cancel dipoles in a graph")
    red.add_argument("file")
    red.add_argument("--schedule", choices=("symbolic", "greedy"),
                     default="greedy")
    red.add_argument("--n", type=int)
    red.add_argument("--m", type=int)
    red.add_argument("--certificate", help="write the step certificate here")
    red.add_argument("--out", help="write the reduced graph JSON here")
    red.set_defaults(func=cmd_reduce)

    chk = sub.add_parser("check", help="decide h-vector characterizations")
    csub = chk.add_subparsers(dest="kind", required=True)
    cs = csub.add_parser("sphere-h")
    cs.add_argument("--h", required=True, help="comma-separated integers")
    cr = csub.add_parser("rp-h")
    cr.add_argument("--h", required=True)
    cr.add_argument("--n", type=int, required=True)
    cm = csub.add_parser("manifold-h")
    cm.add_argument("--h", required=True)
    cm.add_argument("--d", type=int, required=True)
    chk.set_defaults(func=cmd_check)

    exp = sub.add_parser("export", help="export a graph to DOT")
    exp.add_argument("file")
    exp.add_argument("--format", choices=("dot",), default="dot")
    exp.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except reduction.CancellationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
