"""Command-line front end.

Commands: dimf, sdimf, dim, sdim, twins, profile, gen, verify.  Graphs come
either from an edge-list file (or stdin via ``-``) or from a generator spec
string such as ``petersen`` or ``unicyclic_d(2,3)``.  Values print as exact
rationals "p/q"; ``--decimal`` adds a clearly marked approximation.

Exit codes: 0 success (verify: all checks passed), 1 failed verify checks,
2 bad input, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .graph import Graph, GraphError, ParseError, complement, parse_graph, format_graph
from .lp import CoveringLp, LpInternalError, format_rational, verify_solution, LpSolution
from .metric import tree_profile, twin_partition
from .dimension import (
    GraphFamily,
    SandwichViolation,
    bounds_report,
    joint_cover_sets,
    metric_dimension,
    simultaneous_dimension,
    simultaneous_fractional_dimension,
)
from .families import generate, parse_spec
from .harness import Budget, SUITE_ORDER, run_suite


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def parse_family_file(text: str) -> GraphFamily:
    """Parse the family format: ``n <count>`` then ``graph <name>`` blocks."""
    n: int | None = None
    names: list[str] = []
    blocks: list[list[tuple[int, int]]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError(f"expected header 'n <count>' at line {lineno}")
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count at line {lineno}") from None
            if n < 1:
                raise ParseError(f"vertex count must be >= 1 at line {lineno}")
            continue
        if parts[0] == "graph":
            if len(parts) != 2:
                raise ParseError(f"expected 'graph <name>' at line {lineno}")
            names.append(parts[1])
            blocks.append([])
            seen = set()
            continue
        if not blocks:
            raise ParseError(f"edge before any 'graph <name>' block at line {lineno}")
        if len(parts) != 2:
            raise ParseError(f"malformed edge line at line {lineno}: {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"malformed edge line at line {lineno}: {line!r}") from None
        if u == v:
            raise ParseError(f"self-loop at line {lineno}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range at line {lineno}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(f"duplicate edge at line {lineno}")
        seen.add(key)
        blocks[-1].append(key)
    if n is None:
        raise ParseError("missing header 'n <count>'")
    if not blocks:
        raise ParseError("family file needs at least one 'graph <name>' block")
    return GraphFamily([Graph(n, edges) for edges in blocks], names)


def format_family_file(fam: GraphFamily) -> str:
    lines = [f"n {fam.n}"]
    for i, g in enumerate(fam.members):
        name = fam.names[i] if fam.names else f"G{i + 1}"
        lines.append(f"graph {name}")
        lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _load_graph(args) -> Graph:
    if args.spec and args.input:
        raise ParseError("give either an input file or --spec, not both")
    if args.spec:
        obj = generate(parse_spec(args.spec))
        if isinstance(obj, GraphFamily):
            raise ParseError(f"spec {args.spec!r} produces a family; use sdimf/sdim")
        return obj
    if not args.input:
        raise ParseError("give an input file or --spec")
    return parse_graph(_read_text(args.input))


def _load_family(args) -> GraphFamily:
    pair_with_complement = getattr(args, "with_complement", False)
    if args.spec and args.input:
        raise ParseError("give either an input file or --spec, not both")
    if args.spec:
        obj = generate(parse_spec(args.spec))
        if isinstance(obj, Graph):
            if pair_with_complement:
                return GraphFamily([obj, complement(obj)], [args.spec, "complement"])
            return GraphFamily([obj], [args.spec])
        if pair_with_complement:
            raise ParseError("--with-complement needs a single-graph spec or file")
        return obj
    if not args.input:
        raise ParseError("give an input file or --spec")
    text = _read_text(args.input)
    if pair_with_complement:
        g = parse_graph(text)
        return GraphFamily([g, complement(g)], ["input", "complement"])
    if any(line.strip().startswith("graph ") for line in text.splitlines()):
        return parse_family_file(text)
    return GraphFamily([parse_graph(text)], ["input"])


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


def _fractional_output(args, fam: GraphFamily) -> int:
    res = simultaneous_fractional_dimension(fam)
    # Re-run the independent certificate check on the public result.
    lp = CoveringLp(fam.n, joint_cover_sets(fam))
    verify_solution(lp, LpSolution(res.value, res.assignment, res.certificate))

    payload: dict = {"value": format_rational(res.value)}
    lines = [format_rational(res.value)]
    if getattr(args, "bounds", False):
        rep = bounds_report(fam)
        payload["bounds"] = {
            "sdf": format_rational(rep.sdf),
            "sd": rep.sd,
            "max_dimf": format_rational(rep.max_dimf),
            "sum_dimf": format_rational(rep.sum_dimf),
            "half_n": format_rational(rep.half_n),
            "per_member_dimf": [format_rational(v) for v in rep.per_member_dimf],
        }
        lines += [
            f"sdf {format_rational(rep.sdf)}",
            f"sd {rep.sd}",
            f"max_dimf {format_rational(rep.max_dimf)}",
            f"sum_dimf {format_rational(rep.sum_dimf)}",
            f"half_n {format_rational(rep.half_n)}",
            "per_member_dimf " + " ".join(format_rational(v) for v in rep.per_member_dimf),
        ]
    if args.assignment:
        payload["assignment"] = [format_rational(v) for v in res.assignment]
        lines.append("assignment " + " ".join(format_rational(v) for v in res.assignment))
    if args.certificate:
        payload["dual"] = [format_rational(v) for v in res.certificate]
        payload["constraint_count"] = res.constraint_count
        lines.append("dual " + " ".join(format_rational(v) for v in res.certificate))
        lines.append(f"constraints {res.constraint_count}")
    if args.decimal is not None:
        approx = f"{float(res.value):.{args.decimal}f}"
        payload["decimal_approx"] = approx
        lines.append(f"decimal {approx} (approximate)")
    _emit(args, payload, lines)
    return 0


def _cmd_dimf(args) -> int:
    g = _load_graph(args)
    return _fractional_output(args, GraphFamily([g]))


def _cmd_sdimf(args) -> int:
    return _fractional_output(args, _load_family(args))


def _cmd_dim(args) -> int:
    g = _load_graph(args)
    value = metric_dimension(g)
    _emit(args, {"value": value}, [str(value)])
    return 0


def _cmd_sdim(args) -> int:
    fam = _load_family(args)
    value = simultaneous_dimension(fam)
    _emit(args, {"value": value}, [str(value)])
    return 0


def _cmd_twins(args) -> int:
    g = _load_graph(args)
    classes = twin_partition(g).classes
    payload = {"classes": [list(c) for c in classes]}
    lines = [" ".join(str(v) for v in c) for c in classes]
    _emit(args, payload, lines)
    return 0


def _cmd_profile(args) -> int:
    g = _load_graph(args)
    p = tree_profile(g)
    payload = {
        "sigma": p.sigma,
        "ex": p.ex,
        "ex1": p.ex1,
        "exterior_majors": [
            {
                "vertex": mv.vertex,
                "terminal_degree": mv.terminal_degree,
                "terminal_vertices": list(mv.terminal_vertices),
            }
            for mv in p.exterior_majors
        ],
    }
    lines = [f"sigma {p.sigma}", f"ex {p.ex}", f"ex1 {p.ex1}"]
    for mv in p.exterior_majors:
        terminals = ",".join(str(v) for v in mv.terminal_vertices)
        lines.append(f"major {mv.vertex} ter {mv.terminal_degree} terminals {terminals}")
    _emit(args, payload, lines)
    return 0


def _cmd_gen(args) -> int:
    obj = generate(parse_spec(args.spec))
    text = format_graph(obj) if isinstance(obj, Graph) else format_family_file(obj)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    names = list(args.suites)
    if names == ["all"]:
        names = list(SUITE_ORDER)
    for name in names:
        if name not in SUITE_ORDER:
            print(f"unknown suite {name!r}; known: {', '.join(SUITE_ORDER)} or all",
                  file=sys.stderr)
            return 2
    budget = Budget.parse(args.budget)
    reports = [run_suite(name, budget) for name in names]
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.render_text())
    return 0 if all(r.passed for r in reports) else 1


def _add_input_options(sub, with_complement: bool = False) -> None:
    sub.add_argument("input", nargs="?", help="edge-list or family file ('-' for stdin)")
    sub.add_argument("--spec", help="generator spec, e.g. 'wheel(6)' or 'fig1a'")
    if with_complement:
        sub.add_argument(
            "--with-complement",
            action="store_true",
            help="pair the single input graph with its complement",
        )


def _add_value_options(sub) -> None:
    sub.add_argument("--assignment", action="store_true", help="print the optimal weights")
    sub.add_argument("--certificate", action="store_true", help="print the dual certificate")
    sub.add_argument("--json", action="store_true", help="JSON output")
    sub.add_argument(
        "--decimal",
        type=int,
        metavar="K",
        help="also print a K-digit decimal approximation (marked approximate)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracdim",
        description="Exact (simultaneous) fractional metric dimension of graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dimf", help="fractional dimension of one graph")
    _add_input_options(p)
    _add_value_options(p)
    p.set_defaults(func=_cmd_dimf)

    p = sub.add_parser("sdimf", help="simultaneous fractional dimension of a family")
    _add_input_options(p, with_complement=True)
    p.add_argument("--bounds", action="store_true", help="print the bound sandwich")
    _add_value_options(p)
    p.set_defaults(func=_cmd_sdimf)

    p = sub.add_parser("dim", help="metric dimension (integral) of one graph")
    _add_input_options(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("sdim", help="simultaneous dimension (integral) of a family")
    _add_input_options(p, with_complement=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_sdim)

    p = sub.add_parser("twins", help="twin equivalence classes")
    _add_input_options(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_twins)

    p = sub.add_parser("profile", help="tree profile (end-vertices, majors)")
    _add_input_options(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("gen", help="emit a spec as an edge list / family file")
    p.add_argument("--spec", required=True)
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suites", nargs="+", metavar="SUITE",
                   help=f"suite names or 'all'; known: {', '.join(SUITE_ORDER)}")
    p.add_argument("--budget", action="append", metavar="K=V",
                   help="size caps, e.g. --budget n=10 --budget samples=50")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (LpInternalError, SandwichViolation) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
