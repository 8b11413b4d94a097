"""
Command line front end.

    bruhat-planar analyze 3412
    bruhat-planar graph 321 --format dot
    bruhat-planar basis planar 8
    bruhat-planar verify planar-char --max-m 6
    bruhat-planar contains 3412 5736241

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import theorems
from .bruhat import DirectedGraph, IntervalTooLarge, bruhat_graph
from .perms import (
    Permutation,
    PermutationError,
    absolute_length,
    contains_pattern,
    coxeter_length,
    cycle_decomposition,
    embeddings,
    parse_one_line,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
FORMAT_VERSION = "1"
SIZE_WARNING = 12
DEFAULT_MAX_VERTICES = 10_000


class UsageError(Exception):
    pass


def graph_document(sigma: Permutation, g: DirectedGraph) -> dict[str, Any]:
    return {
        "format_version": FORMAT_VERSION,
        "permutation": list(sigma),
        "vertices": [
            {"id": i, "word": list(p), "length": length}
            for i, (p, length) in enumerate(zip(g.labels, g.lengths))
        ],
        "edges": [
            {"from": u, "to": v, "transposition": [t.a, t.b]} for u, v, t in g.edges
        ],
    }


def dump_document(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


def load_document(text: str) -> dict[str, Any]:
    """Parse a graph document and check its invariants."""
    doc = json.loads(text)
    if doc.get("format_version") != FORMAT_VERSION:
        raise ValueError(f"unsupported format version {doc.get('format_version')!r}")
    Permutation(doc["permutation"])
    ids = [v["id"] for v in doc["vertices"]]
    if ids != list(range(len(ids))):
        raise ValueError("vertex ids must be 0..n-1 in order")
    keys = [(e["from"], e["to"]) for e in doc["edges"]]
    if keys != sorted(keys):
        raise ValueError("edges must be sorted by (from, to)")
    return doc


def _dot_name(p: Sequence[int]) -> str:
    return '"' + str(Permutation._trusted(p)) + '"'


def to_dot(sigma: Permutation, g: DirectedGraph) -> str:
    lines = [f'digraph "B({sigma})" {{', "  rankdir=BT;", "  node [shape=plaintext];"]
    for length in sorted(set(g.lengths)):
        names = " ".join(_dot_name(p) + ";" for p, r in zip(g.labels, g.lengths) if r == length)
        lines.append(f"  {{ rank=same; {names} }}")
    for u, v, t in g.edges:
        lines.append(f'  {_dot_name(g.labels[u])} -> {_dot_name(g.labels[v])} [label="{t}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _perm(text: str) -> Permutation:
    try:
        p = parse_one_line(text)
    except PermutationError as exc:
        raise UsageError(str(exc)) from None
    if p.size > SIZE_WARNING:
        print(f"warning: size {p.size} > {SIZE_WARNING}; Bruhat intervals grow factorially",
              file=sys.stderr)
    return p


def _format_cycles(p: Permutation) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycle_decomposition(p))


def cmd_analyze(args: argparse.Namespace) -> int:
    p = _perm(args.perm)
    report: dict[str, Any] = {
        "permutation": str(p),
        "size": p.size,
        "length": coxeter_length(p),
        "absolute_length": absolute_length(p),
        "cycles": cycle_decomposition(p),
        "contains_321": contains_pattern((3, 2, 1), p),
        "planar": theorems.planar_by_characterization(p),
    }
    try:
        g = bruhat_graph(p, limit=args.max_vertices)
        report["vertices"], report["edges"] = g.vertex_count, g.edge_count
    except IntervalTooLarge:
        report["vertices"] = report["edges"] = None
    if args.format == "json":
        print(json.dumps(report, indent=2))
        return EXIT_OK
    yes_no = {True: "yes", False: "no"}
    print(f"permutation: {p}")
    print(f"size: {p.size}")
    print(f"length: {report['length']}")
    print(f"absolute length: {report['absolute_length']}")
    print(f"cycles: {_format_cycles(p)}")
    print(f"contains 321: {yes_no[report['contains_321']]}")
    print(f"planar: {yes_no[report['planar']]}")
    if report["vertices"] is None:
        print(f"bruhat graph: skipped (more than {args.max_vertices} vertices)")
    else:
        print(f"bruhat graph: {report['vertices']} vertices, {report['edges']} edges")
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    p = _perm(args.perm)
    try:
        g = bruhat_graph(p, limit=args.max_vertices)
    except IntervalTooLarge as exc:
        print(f"error: {exc}; raise --max-vertices to allow it", file=sys.stderr)
        return EXIT_CAP
    if args.format == "dot":
        sys.stdout.write(to_dot(p, g))
    else:
        sys.stdout.write(dump_document(graph_document(p, g)))
    return EXIT_OK


def _basis_property(spec: str):
    if spec == "planar":
        return theorems.planar_bad, 8
    prefix = "max-length:"
    if spec.startswith(prefix):
        try:
            n = int(spec[len(prefix):])
        except ValueError:
            n = 0
        if n >= 1:
            return theorems.length_at_least(n), 2 * n
    raise UsageError(f"unknown property {spec!r}; use 'planar' or 'max-length:<n>'")


def cmd_basis(args: argparse.Namespace) -> int:
    bad, default_ceiling = _basis_property(args.property)
    ceiling = default_ceiling if args.ceiling is None else args.ceiling
    report = theorems.compute_basis(bad, ceiling, args.property)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        for p in report.basis:
            print(p)
    return EXIT_OK


SUITES = {
    "planar-char": ("max_m",),
    "cube-class": ("max_m",),
    "length-basis": ("n", "max_m"),
    "sharpness": ("n",),
    "lemmas": ("n", "max_m"),
    "counts": ("max_m",),
    "bruhat-oracle": ("max_m",),
    "planarity-oracle": ("seed",),
}

DEFAULTS = {
    "planar-char": {"max_m": 6},
    "cube-class": {"max_m": 6},
    "length-basis": {"n": 2, "max_m": 7},
    "sharpness": {"n": 4},
    "lemmas": {"n": 2, "max_m": 6},
    "counts": {"max_m": 9},
    "bruhat-oracle": {"max_m": 5},
    "planarity-oracle": {"seed": 0},
}


def run_suite(suite: str, params: dict[str, int], threads: int = 1,
              use_basis: bool = False) -> theorems.VerificationReport:
    if suite == "planar-char":
        return theorems.verify_planar_characterization(params["max_m"], workers=threads)
    if suite == "cube-class":
        return theorems.verify_cube_classification(params["max_m"], workers=threads)
    if suite == "length-basis":
        return theorems.verify_length_basis(
            params["n"], params["max_m"], use_basis=use_basis, workers=threads)
    if suite == "sharpness":
        return theorems.verify_sharpness(params["n"])
    if suite == "lemmas":
        return theorems.verify_lemmas(params["n"], params["max_m"])
    if suite == "counts":
        return theorems.verify_counts(params["max_m"])
    if suite == "bruhat-oracle":
        return theorems.verify_bruhat_oracle(params["max_m"])
    if suite == "planarity-oracle":
        return theorems.verify_planarity_oracle(params["seed"])
    raise UsageError(f"unknown suite {suite!r}")


def cmd_verify(args: argparse.Namespace) -> int:
    params = {}
    for name in SUITES[args.suite]:
        value = getattr(args, name)
        params[name] = DEFAULTS[args.suite][name] if value is None else value
    if args.threads < 1:
        raise UsageError("--threads must be at least 1")
    report = run_suite(args.suite, params, args.threads, args.use_basis)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.summary())
        for note in report.notes:
            print(f"  {note}")
        for c in report.to_dict()["counterexamples"][:20]:
            print(f"  counterexample: {c}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_contains(args: argparse.Namespace) -> int:
    pattern, target = _perm(args.pattern), _perm(args.target)
    if pattern.size > target.size:
        raise UsageError("pattern is larger than target")
    found = embeddings(pattern, target)
    for e in found:
        print(" ".join(map(str, e)))
    print(f"{len(found)} occurrence(s) of {pattern} in {target}", file=sys.stderr)
    return EXIT_OK


def _add_verify_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-m", dest="max_m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--threads", type=int, default=1,
                   help="worker processes for the per-permutation suites")
    p.add_argument("--use-basis", action="store_true",
                   help="length-basis: search witnesses through the computed basis")
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bruhat-planar",
        description="Bruhat graphs, pattern avoidance and planarity of permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="length, cycles and planarity of a permutation")
    p.add_argument("perm")
    p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("graph", help="export the Bruhat graph B(perm)")
    p.add_argument("perm")
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("basis", help="minimal avoidance basis of a property")
    p.add_argument("property", help="'planar' or 'max-length:<n>'")
    p.add_argument("ceiling", type=int, nargs="?",
                   help="largest size searched (default 8 for planar, 2n for max-length)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    _add_verify_options(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="same as 'verify counts'")
    _add_verify_options(p)
    p.set_defaults(func=cmd_verify, suite="counts")

    p = sub.add_parser("contains", help="list occurrences of a pattern in a target")
    p.add_argument("pattern")
    p.add_argument("target")
    p.set_defaults(func=cmd_contains)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
