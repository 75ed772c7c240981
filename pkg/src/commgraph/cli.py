"""Command-line entry point: ``commgraph analyze | verify | export-dot | catalog``."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import partial

from . import catalog, reference
from .analysis import analyze, render, resolve_graph
from .errors import ClosureExceedsCap, MalformedExpression, UnknownGroupName
from .graphs import SimpleGraph, to_dot

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", choices=("c", "nc", "raw"), default="c",
                        help="commuting, noncommuting, or the shape as written (default: c)")
    common.add_argument("--format", choices=("json", "csv", "md"), default=None,
                        help="analyze defaults to json; verify prints PASS/FAIL lines unless json")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--tolerance", type=float, default=float(reference.DISPLAY_TOLERANCE),
                        help="relative tolerance for rounded decimals (display comparison only)")
    common.add_argument("--cap", type=int, default=None, help="largest group order to build")
    common.add_argument("--jobs", type=int, default=1, help="parallel workers")

    p = argparse.ArgumentParser(prog="commgraph", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", parents=[common], help="analyze groups or shape expressions")
    a.add_argument("targets", nargs="+", metavar="TARGET")
    v = sub.add_parser("verify", parents=[common], help="run the reference expectation table")
    v.add_argument("--case", default=None, help="restrict to one case (shape or group name)")
    v.add_argument("--criterion", type=int, choices=range(1, 10), default=None)
    v.add_argument("--list", action="store_true", help="list case names and exit")
    d = sub.add_parser("export-dot", parents=[common], help="Graphviz DOT for one target")
    d.add_argument("target", metavar="TARGET")
    sub.add_parser("catalog", parents=[common], help="list the group catalog")
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _analyze(args) -> int:
    work = partial(analyze, graph=args.graph, cap=args.cap)
    if args.jobs > 1 and len(args.targets) > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            records = list(ex.map(work, args.targets))
    else:
        records = [work(t) for t in args.targets]
    _emit(render(records, args.format or "json"), args.out)
    return EXIT_OK


def _verify(args) -> int:
    if args.list:
        _emit("\n".join(reference.case_names()) + "\n", args.out)
        return EXIT_OK
    tol = Fraction(args.tolerance).limit_denominator(10**12)
    outcomes = reference.verify(args.case, args.criterion, max(1, args.jobs), tol)
    if not outcomes:
        print(f"commgraph: no expectations match case={args.case!r} criterion={args.criterion}",
              file=sys.stderr)
        return EXIT_USAGE
    failed = sum(not o.passed for o in outcomes)
    if args.format == "json":
        text = json.dumps([o.as_json() for o in outcomes], indent=2, ensure_ascii=False) + "\n"
    else:
        text = "".join(o.line() + "\n" for o in outcomes)
        text += f"{len(outcomes) - failed} passed, {failed} failed\n"
    _emit(text, args.out)
    return EXIT_FAIL if failed else EXIT_OK


def _export_dot(args) -> int:
    g, name, _ = resolve_graph(args.target, args.graph, args.cap)
    label = name or args.target
    if name:
        elems = catalog.build(name).labels
        g = SimpleGraph(g.adj, [elems[i] for i in g.labels])
    _emit(to_dot(g, f"{args.graph}_{label}"), args.out)
    return EXIT_OK


def _catalog(args) -> int:
    _emit(catalog.catalog_json() + "\n", args.out)
    return EXIT_OK


COMMANDS = {"analyze": _analyze, "verify": _verify, "export-dot": _export_dot, "catalog": _catalog}


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.jobs < 1 or (args.cap is not None and args.cap < 1) or args.tolerance < 0:
        print("commgraph: --jobs and --cap must be positive, --tolerance non-negative",
              file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (UnknownGroupName, MalformedExpression, ClosureExceedsCap) as exc:
        msg = exc.args[0] if exc.args else type(exc).__name__
        print(f"commgraph: {type(exc).__name__}: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
