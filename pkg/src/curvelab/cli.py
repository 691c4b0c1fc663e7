"""Command line front end.

Every subcommand prints one JSON document to stdout (with a trailing
newline) and exits 0 on success.  Domain errors, malformed input files
and I/O problems print {"error": <exception class>, "detail": ...} and
exit 1; usage errors exit 2.  ``--out FILE`` writes the same document to
a file and still echoes it.
"""

from __future__ import annotations

import argparse
import inspect
import json
import random
import sys

from .complexes import local_graph, schmutz_path
from .curves import (
    PantsCurve,
    abstract_window,
    format_ref,
    global_intersection,
    make_slope,
    parse_ref,
    sch04_common_neighbors,
    triple_completion,
)
from .ends import end_tree, surface_end_tree
from .errors import CurveLabError, FormatError
from .morphisms import check_superinjective, cut_and_glue, surfaces_homeomorphic
from .pants_graphs import adjacency_graph, classify_all, classify_curve
from .surface import (
    InfiniteModel,
    build_finite_surface,
    build_truncation,
    surface_from_json,
    surface_to_json,
    validate,
)
from .verify import DEFAULT_SEED, SUITES, run_suite


def _emit(obj, out=None):
    text = json.dumps(obj, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text)


def _load_surface(path):
    with open(path, encoding="utf-8") as fh:
        return surface_from_json(json.load(fh))


def _parse_slope(text):
    try:
        p_text, q_text = text.split("/")
        return make_slope(int(p_text), int(q_text))
    except ValueError as exc:
        raise FormatError(f"expected a slope like 3/2, got {text!r}") from exc


def _split_inventory(text):
    """Split a comma-separated reference list, keeping chain interiors
    (which contain commas themselves) attached to their reference."""
    parts = []
    for piece in text.split(","):
        if piece.startswith(("pants:", "win:", "chain:")) or not parts:
            parts.append(piece)
        else:
            parts[-1] += "," + piece
    return parts


def _tree_json(tree, which):
    return {
        "graph": which,
        "base": tree.base,
        "stride": tree.stride,
        "leaf_counts": list(tree.leaf_counts()),
        "canonical": tree.canonical(),
        "levels": [
            [{"members": list(n.members), "parent": n.parent} for n in level]
            for level in tree.levels
        ],
    }


def cmd_gen(args):
    if args.model:
        if args.depth is None:
            raise FormatError("--model requires --depth")
        g = build_truncation(args.model, args.depth)
    elif args.genus is not None:
        g = build_finite_surface(args.genus, args.boundary)
    else:
        raise FormatError("provide --model with --depth, or --genus with --boundary")
    _emit(surface_to_json(g), args.out)
    return 0


def cmd_validate(args):
    g = _load_surface(args.infile)
    violations = validate(g)
    _emit(
        {
            "valid": not violations,
            "violations": [{"kind": v.kind, "detail": v.detail} for v in violations],
        },
        args.out,
    )
    return 0


def cmd_classify(args):
    g = _load_surface(args.infile)
    if args.curve is not None:
        _emit({"curve": args.curve, "class": classify_curve(g, args.curve).value}, args.out)
    else:
        classes = classify_all(g)
        _emit(
            {"classes": {cid: cls.value for cid, cls in sorted(classes.items())}},
            args.out,
        )
    return 0


def cmd_adjacency(args):
    g = _load_surface(args.infile)
    a = adjacency_graph(g)
    _emit(
        {
            "vertices": list(a.vertices),
            "edges": [list(e) for e in a.edges],
            "marks": list(a.marks),
        },
        args.out,
    )
    return 0


def cmd_ends(args):
    g = _load_surface(args.infile)
    if args.graph == "curves":
        tree = end_tree(adjacency_graph(g), args.depth, base=args.base, stride=args.stride)
    else:
        tree = surface_end_tree(g, args.depth, base=args.base, stride=args.stride)
    _emit(_tree_json(tree, args.graph), args.out)
    return 0


def cmd_intersect(args):
    g = _load_surface(args.infile)
    a = parse_ref(args.a)
    b = parse_ref(args.b)
    val = global_intersection(g, a, b)
    _emit(
        {
            "a": format_ref(a),
            "b": format_ref(b),
            "defined": val is not None,
            "intersection": val,
        },
        args.out,
    )
    return 0


def cmd_triple(args):
    w = abstract_window("torus")
    a = _parse_slope(args.a)
    b = _parse_slope(args.b)
    g, g2 = triple_completion(w, a, b)
    _emit({"a": str(a), "b": str(b), "g": str(g), "g2": str(g2)}, args.out)
    return 0


def cmd_sch04(args):
    w = abstract_window("sphere")
    a = _parse_slope(args.a)
    b = _parse_slope(args.b)
    sols = sch04_common_neighbors(w, a, b, args.bound)
    _emit(
        {"a": str(a), "b": str(b), "solutions": sorted(str(s) for s in sols)},
        args.out,
    )
    return 0


def cmd_graph(args):
    g = _load_surface(args.infile)
    inventory = [parse_ref(text) for text in _split_inventory(args.inventory)]
    lg = local_graph(g, inventory, args.mode)
    _emit(
        {
            "mode": lg.mode,
            "relation": lg.relation,
            "vertices": [format_ref(v) for v in lg.vertices],
            "edges": [[format_ref(u), format_ref(v)] for u, v in lg.edges],
            "undefined_pairs": [
                [format_ref(u), format_ref(v)] for u, v in lg.undefined_pairs
            ],
        },
        args.out,
    )
    return 0


def cmd_path(args):
    g = _load_surface(args.infile)
    path = schmutz_path(g, PantsCurve(args.src), PantsCurve(args.dst))
    _emit(
        {"path": [format_ref(ref) for ref in path], "length": len(path) - 1},
        args.out,
    )
    return 0


def cmd_counterexample(args):
    source = build_truncation(InfiniteModel.LOCH_NESS, args.trunc_depth)
    result = cut_and_glue(source, args.alpha, gadget=args.gadget)
    domain = list(result.map.domain)
    rng = random.Random(args.seed)
    pairs = [
        (domain[rng.randrange(len(domain))], domain[rng.randrange(len(domain))])
        for _ in range(args.samples)
    ]
    report = check_superinjective(result.map, pairs)
    homeomorphic = surfaces_homeomorphic(source, result.target, args.depth)
    _emit(
        {
            "gadget": args.gadget,
            "alpha": args.alpha,
            "checked": report["checked"],
            "skipped": len(report["skipped"]),
            "violations": report["violations"],
            "witnesses": [format_ref(w) for w in result.witnesses],
            "homeomorphic": homeomorphic,
        },
        args.out,
    )
    return 0


def cmd_verify(args):
    fn = SUITES[args.suite]
    accepted = set(inspect.signature(fn).parameters)
    overrides = {}
    for name in ("seed", "samples", "max_depth", "trunc_depth", "bound", "alpha", "gadget"):
        value = getattr(args, name, None)
        if value is None:
            continue
        if name not in accepted:
            raise FormatError(f"suite {args.suite!r} does not accept --{name.replace('_', '-')}")
        overrides[name] = value
    report = run_suite(args.suite, **overrides)
    _emit(report, args.out)
    return 0 if report["failures"] == 0 else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="curvelab",
        description="Combinatorial workbench for surfaces built from pants gluings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", help="also write the JSON document to this file")

    p = sub.add_parser("gen", help="generate a surface gluing graph")
    p.add_argument("--model", choices=["loch_ness", "ladder", "cantor_tree"])
    p.add_argument("--depth", type=int)
    p.add_argument("--genus", type=int)
    p.add_argument("--boundary", type=int, default=0)
    add_out(p)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("validate", help="check a gluing graph for defects")
    p.add_argument("--in", dest="infile", required=True)
    add_out(p)
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("classify", help="classify decomposition curves")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--curve")
    add_out(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("adjacency", help="adjacency graph of the decomposition")
    p.add_argument("--in", dest="infile", required=True)
    add_out(p)
    p.set_defaults(fn=cmd_adjacency)

    p = sub.add_parser("ends", help="end tree of a truncation")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--graph", choices=["pants", "curves"], default="pants")
    p.add_argument("--base")
    p.add_argument("--stride", type=int, default=2)
    add_out(p)
    p.set_defaults(fn=cmd_ends)

    p = sub.add_parser("intersect", help="intersection number of two curve references")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    add_out(p)
    p.set_defaults(fn=cmd_intersect)

    p = sub.add_parser("triple", help="complete two torus-window slopes to a triple")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    add_out(p)
    p.set_defaults(fn=cmd_triple)

    p = sub.add_parser("sch04", help="slopes crossing two sphere-window slopes twice")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--bound", type=int, default=100)
    add_out(p)
    p.set_defaults(fn=cmd_sch04)

    p = sub.add_parser("graph", help="finite curve graph over an inventory")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--inventory", required=True)
    p.add_argument("--mode", choices=["c", "n", "g"], required=True)
    add_out(p)
    p.set_defaults(fn=cmd_graph)

    p = sub.add_parser("path", help="short path between two handle curves")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    add_out(p)
    p.set_defaults(fn=cmd_path)

    p = sub.add_parser(
        "counterexample",
        help="cut-and-glue map with superinjectivity and homeomorphism report",
    )
    p.add_argument("--gadget", choices=["s12", "ladder", "cantor"], default="ladder")
    p.add_argument("--alpha", default="c2")
    p.add_argument("--trunc-depth", dest="trunc_depth", type=int, default=4)
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    add_out(p)
    p.set_defaults(fn=cmd_counterexample)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--max-depth", dest="max_depth", type=int)
    p.add_argument("--trunc-depth", dest="trunc_depth", type=int)
    p.add_argument("--bound", type=int)
    p.add_argument("--alpha")
    p.add_argument("--gadget", choices=["s12", "ladder", "cantor"])
    add_out(p)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (CurveLabError, ValueError, OSError, json.JSONDecodeError) as exc:
        _emit({"error": type(exc).__name__, "detail": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
