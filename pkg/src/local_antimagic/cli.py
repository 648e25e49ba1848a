"""Command-line interface.

Subcommands build graphs, attach the explicit labelings, transform them,
verify the local antimagic property, and run the exact search.  Pipelines
communicate through JSON documents on stdin/stdout, for example:

    antimagic label circulant --m 16 --steps 1,3 | antimagic verify --expect-colors 3

Exit codes: 0 on success, 1 when a verification or search check fails,
2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .graphs import (
    CirculantSpec,
    Graph,
    are_isomorphic,
    build_circulant,
    build_cycle,
)
from .labelings import EdgeLabeling, check_two_color_necessary, induced_coloring
from .circulants import (
    c_labeling,
    circulant_labeling,
    circulant_spectrum,
    labeling_matrix_view,
    multiplier_isomorphism,
    spectra_equal,
)
from .cycle_merge import build_construction_matrix, case_order, case_plan, transform_cycle
from .unions import (
    FuseCycles,
    KeepCycle,
    MergeCycle,
    UnionSpec,
    transform_union,
    union_2labeling_family1,
    union_2labeling_family2,
    union_3labeling,
    union_graph,
)
from .oracle import BudgetExceeded, SearchBudget, exact_chi_la, feasible_with_colors
from .reproduce import run_all
from .serialize import document, parse_document, to_dot


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _emit(doc: dict) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _read_document(path: Optional[str]) -> tuple[Graph, Optional[EdgeLabeling], dict]:
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    return parse_document(text)


def _cmd_build(args) -> int:
    if args.shape == "cycle":
        g = build_cycle(args.m)
    elif args.shape == "circulant":
        g = build_circulant(CirculantSpec(args.m, _ints(args.steps)))
    else:
        g = union_graph(UnionSpec(_ints(args.orders)))
    _emit(document(g))
    return 0


def _cmd_label(args) -> int:
    if args.family == "c":
        g, f = build_cycle(args.m), c_labeling(args.m)
    elif args.family == "circulant":
        g, f = circulant_labeling(CirculantSpec(args.m, _ints(args.steps)))
    elif args.family == "union2a":
        result = union_2labeling_family1(args.r)
        g, f = result.graph, result.labeling
    elif args.family == "union2b":
        result = union_2labeling_family2(args.r)
        g, f = result.graph, result.labeling
    else:
        result = union_3labeling(UnionSpec(_ints(args.orders)))
        g, f = result.graph, result.labeling
    _emit(document(g, f))
    return 0


def _parse_directives(text: str):
    directives = []
    for item in json.loads(text):
        if "keep" in item:
            directives.append(KeepCycle(item["keep"]))
        elif "fuse" in item:
            first, second = item["fuse"]
            directives.append(FuseCycles(first, second, item["step"]))
        elif "merge" in item:
            plan = case_plan(item["case"], item["k"])
            directives.append(MergeCycle(item["merge"], plan))
        else:
            raise ValueError(f"unknown directive {item!r}")
    return directives


def _cmd_transform(args) -> int:
    if args.kind == "case":
        result = transform_cycle(case_order(args.case, args.k), case_plan(args.case, args.k))
        _emit(
            document(
                result.graph,
                result.labeling,
                family=result.family,
                expected_colors=sorted(result.expected_colors),
            )
        )
        return 0
    if args.kind == "matrix":
        built = build_construction_matrix(args.s, args.t)
        if args.render:
            print(built.render())
            return 0
        _emit(
            document(
                built.graph,
                built.labeling,
                A=[list(row) for row in built.arrays.evens],
                B=[list(row) for row in built.arrays.odds],
                M01=[list(row) for row in built.pattern],
                Mlab=[list(row) for row in built.labels],
                steps=list(built.spec.steps),
            )
        )
        return 0
    g, f, extra = _read_document(args.input)
    orders = extra.get("orders")
    if args.orders:
        orders = _ints(args.orders)
    if orders is None:
        print("transform union needs --orders or an 'orders' field", file=sys.stderr)
        return 2
    if f is None:
        print("transform union needs a labeled document", file=sys.stderr)
        return 2
    result = transform_union(
        UnionSpec(tuple(orders)), f, _parse_directives(args.directives)
    )
    _emit(
        document(
            result.graph,
            result.labeling,
            colors=sorted(result.colors),
            central_sum=result.central_sum,
        )
    )
    return 0


def _cmd_verify(args) -> int:
    g, f, _ = _read_document(args.input)
    if f is None:
        print("document has no labels to verify", file=sys.stderr)
        return 2
    coloring = induced_coloring(g, f)
    report = {
        "sums": list(coloring.sums),
        "colors": sorted(coloring.colors),
        "conflicts": [list(c) for c in coloring.conflicts],
        "local_antimagic": not coloring.conflicts,
    }
    ok = not coloring.conflicts
    if args.expect_colors is not None:
        report["expected_colors"] = args.expect_colors
        ok = ok and len(coloring.colors) == args.expect_colors
    if args.two_color_check:
        verdict = check_two_color_necessary(g)
        report["two_colors_possible"] = verdict.two_colors_possible
    report["ok"] = ok
    _emit(report)
    return 0 if ok else 1


def _cmd_spectrum(args) -> int:
    spec = CirculantSpec(args.m, _ints(args.steps))
    spectrum = circulant_spectrum(spec)
    out = {"m": args.m, "steps": list(spec.steps), "spectrum": spectrum}
    if args.against:
        other = circulant_spectrum(CirculantSpec(args.m, _ints(args.against)))
        out["cospectral"] = spectra_equal(spectrum, other)
    _emit(out)
    return 0


def _cmd_iso(args) -> int:
    if args.multiplier:
        mapping = multiplier_isomorphism(args.n, args.a, args.b)
        _emit({"isomorphic": True, "mapping": mapping})
        return 0
    g1, _, _ = _read_document(args.first)
    g2, _, _ = _read_document(args.second)
    mapping = are_isomorphic(g1, g2)
    _emit({"isomorphic": mapping is not None, "mapping": mapping})
    return 0 if mapping is not None else 1


def _cmd_oracle(args) -> int:
    g, _, _ = _read_document(args.input)
    budget = SearchBudget()
    if args.max_edges is not None:
        budget.max_edges = args.max_edges
    try:
        if args.colors is not None:
            witness = feasible_with_colors(g, args.colors, budget)
            _emit(
                {
                    "colors": args.colors,
                    "feasible": witness is not None,
                    "witness": list(witness.labels) if witness else None,
                }
            )
            return 0
        result = exact_chi_la(g, budget)
        _emit(
            {
                "chi_la": result.value,
                "witness": list(result.witness.labels),
                "nodes": result.nodes,
                "seconds": result.seconds,
            }
        )
        return 0
    except BudgetExceeded as exc:
        print(str(exc), file=sys.stderr)
        return 1


def _cmd_export(args) -> int:
    g, f, extra = _read_document(args.input)
    if args.format == "json":
        _emit(document(g, f, **extra))
    elif args.format == "dot":
        print(to_dot(g, f))
    else:
        if f is None:
            print("matrix export needs labels", file=sys.stderr)
            return 2
        print(labeling_matrix_view(g, f).render())
    return 0


def _cmd_reproduce(args) -> int:
    return 1 if run_all() else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antimagic",
        description="Local antimagic labelings: construction, verification, search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a graph and print its JSON")
    p.add_argument("shape", choices=["cycle", "circulant", "union"])
    p.add_argument("--m", type=int)
    p.add_argument("--steps", help="comma-separated connection set, e.g. 1,3")
    p.add_argument("--orders", help="comma-separated cycle orders, e.g. 16,16")
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("label", help="construct a graph with an explicit labeling")
    p.add_argument(
        "family", choices=["c", "circulant", "union2a", "union2b", "union3"]
    )
    p.add_argument("--m", type=int)
    p.add_argument("--steps")
    p.add_argument("--r", type=int)
    p.add_argument("--orders")
    p.set_defaults(fn=_cmd_label)

    p = sub.add_parser("transform", help="merge, fuse, or fold a labeled graph")
    p.add_argument("kind", choices=["case", "matrix", "union"])
    p.add_argument("--case", type=int, help="merge case number, 1-8")
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--render", action="store_true", help="print the label matrix as text")
    p.add_argument("--input", help="labeled union JSON (default stdin)")
    p.add_argument("--orders")
    p.add_argument(
        "--directives",
        help='JSON list, e.g. [{"fuse":[0,1],"step":3},{"merge":8,"case":1,"k":2}]',
    )
    p.set_defaults(fn=_cmd_transform)

    p = sub.add_parser("verify", help="check a labeled graph document")
    p.add_argument("input", nargs="?", help="JSON document (default stdin)")
    p.add_argument("--expect-colors", type=int)
    p.add_argument("--two-color-check", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("spectrum", help="circulant adjacency spectrum")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--steps", required=True)
    p.add_argument("--against", help="second connection set to compare")
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("iso", help="isomorphism check or multiplier certificate")
    p.add_argument("first", nargs="?")
    p.add_argument("second", nargs="?")
    p.add_argument("--multiplier", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.set_defaults(fn=_cmd_iso)

    p = sub.add_parser("oracle", help="exact minimum color search")
    p.add_argument("mode", choices=["chi-la"])
    p.add_argument("input", nargs="?", help="graph JSON (default stdin)")
    p.add_argument("--max-edges", type=int)
    p.add_argument("--colors", type=int, help="test feasibility at this count only")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("export", help="re-emit a document as json, dot, or matrix text")
    p.add_argument("format", choices=["json", "dot", "matrix"])
    p.add_argument("input", nargs="?")
    p.set_defaults(fn=_cmd_export)

    p = sub.add_parser("reproduce-all", help="re-derive every recorded result")
    p.set_defaults(fn=_cmd_reproduce)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
