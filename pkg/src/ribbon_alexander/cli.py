"""Command-line interface.

Exit codes: 0 on success, 1 on unreadable or invalid input, 2 when a
verification fails.
"""
from __future__ import annotations

import argparse
import sys
from itertools import chain
from typing import Sequence

from .alexander import alexander, format_report
from .enumeration import (
    EnumerationSpec,
    enumerate_graphs,
    format_table,
    random_graphs,
    sweep_invariants,
    sweep_reductions,
    tabulate,
)
from .reductions import format_log, reduce_fully
from .ribbon_diagram import (
    InvalidRibbonDiagram,
    all_diagrams,
    parse_diagram,
    random_diagrams,
    ribbon_matrix_direct,
    to_ribbon_graph,
)
from .ribbon_graph import InvalidRibbonGraph, RibbonGraph, canonical_serialize, parse_graph, ribbon_matrix
from .seifert_oracle import verify_l_independence

EXIT_OK, EXIT_INVALID, EXIT_FAILED = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"IOError: cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str, out) -> None:
    if path is None:
        out.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"IOError: cannot write {path}: {exc.strerror}") from None


def _load_graph(args) -> RibbonGraph:
    if getattr(args, "diagram", None):
        return to_ribbon_graph(parse_diagram(_read(args.diagram)))
    return parse_graph(_read(args.graph))


def cmd_compute(args, out) -> int:
    g = _load_graph(args)
    if args.reduce:
        g, log = reduce_fully(g, use_r3=args.r3)
        out.write(format_log(log))
    res = alexander(g)
    if args.show_matrix:
        out.write(f"matrix (2R, genus {res.genus}):\n")
        if res.genus:
            out.write(res.matrix.format() + "\n")
    out.write(format_report(res) + "\n")
    return EXIT_OK


def cmd_convert(args, out) -> int:
    g = to_ribbon_graph(parse_diagram(_read(args.diagram)))
    _write(args.output, canonical_serialize(g) + "\n", out)
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    g = parse_graph(_read(args.graph))
    final, log = reduce_fully(g, use_r3=args.r3)
    out.write(format_log(log))
    _write(args.output, canonical_serialize(final) + "\n", out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    g = parse_graph(_read(args.graph))
    if args.samples < 1 or args.bound < 1 or args.seed < 0:
        raise InputError("BadArgument: --samples and --bound must be >= 1 and --seed >= 0")
    report = verify_l_independence(ribbon_matrix(g), args.samples, args.seed, args.bound)
    out.write(report.format() + "\n")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_enumerate(args, out) -> int:
    try:
        spec = EnumerationSpec(args.genus, dedup=args.distinct)
    except ValueError as exc:
        raise InputError(f"BadArgument: {exc}") from None
    if spec.dedup:
        out.write(format_table(tabulate(spec)))
    else:
        for g in enumerate_graphs(spec):
            out.write(f"1\t{alexander(g, cross_check=False, checks=False).delta}\t{canonical_serialize(g)}\n")
    return EXIT_OK


def selftest_checks(seed: int):
    """Yield ``(name, ok, detail)`` for every sweep the self test runs."""
    exhaustive = lambda: chain.from_iterable(enumerate_graphs(k) for k in range(4))  # noqa: E731

    s = sweep_invariants(exhaustive())
    yield "invariants, exhaustive genus <= 3", s.ok, f"graphs={s.graphs}"
    s = sweep_invariants(random_graphs(500, seed, 6))
    yield "invariants, 500 random genus <= 6", s.ok, f"graphs={s.graphs}"
    s = sweep_reductions(exhaustive())
    yield "reductions, exhaustive genus <= 3", s.ok, f"applications={sum(s.applications.values())}"
    s = sweep_reductions(random_graphs(500, seed, 6))
    yield "reductions, 500 random genus <= 6", s.ok, f"applications={sum(s.applications.values())}"

    failures = 0
    for i, g in enumerate(random_graphs(100, seed, 5)):
        if not verify_l_independence(ribbon_matrix(g), 10, seed + i + 1, 3).passed:
            failures += 1
    yield "seifert oracle, 100 random genus <= 5", failures == 0, f"failures={failures}"

    bad = 0
    count = 0
    diagrams = chain(chain.from_iterable(all_diagrams(k) for k in range(4)), random_diagrams(200, seed, 6))
    for d in diagrams:
        count += 1
        if ribbon_matrix_direct(d) != ribbon_matrix(to_ribbon_graph(d)):
            bad += 1
    yield "diagram two-route matrix equality", bad == 0, f"diagrams={count}"


def cmd_selftest(args, out) -> int:
    status = EXIT_OK
    for name, ok, detail in selftest_checks(args.seed):
        out.write(f"{'PASS' if ok else 'FAIL'} {name} ({detail})\n")
        if not ok:
            status = EXIT_FAILED
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ribbon-alexander",
        description="Alexander polynomials of ribbon knots from ribbon graphs and ribbon diagrams.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="half polynomial, Alexander polynomial and invariant report")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="FILE")
    src.add_argument("--diagram", metavar="FILE")
    c.add_argument("--reduce", action="store_true", help="apply R0/R1/R2 reductions first")
    c.add_argument("--r3", action="store_true", help="with --reduce, also try R3 when stuck")
    c.add_argument("--show-matrix", action="store_true", help="print the doubled ribbon matrix")
    c.set_defaults(func=cmd_compute)

    c = sub.add_parser("convert", help="ribbon diagram file to ribbon graph file")
    c.add_argument("--diagram", metavar="FILE", required=True)
    c.add_argument("-o", "--output", metavar="FILE")
    c.set_defaults(func=cmd_convert)

    c = sub.add_parser("reduce", help="reduce a ribbon graph; prints the step log")
    c.add_argument("--graph", metavar="FILE", required=True)
    c.add_argument("--r3", action="store_true")
    c.add_argument("-o", "--output", metavar="FILE")
    c.set_defaults(func=cmd_reduce)

    c = sub.add_parser("verify", help="Seifert-matrix oracle with random L blocks")
    c.add_argument("--graph", metavar="FILE", required=True)
    c.add_argument("--samples", type=int, default=10)
    c.add_argument("--seed", type=int, required=True)
    c.add_argument("--bound", type=int, default=3)
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("enumerate", help="every labeled ribbon graph of a genus")
    c.add_argument("--genus", type=int, required=True)
    c.add_argument("--distinct", action="store_true", help="tabulate distinct Alexander polynomials")
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("selftest", help="run every invariant sweep")
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (InvalidRibbonGraph, InvalidRibbonDiagram) as exc:
        for problem in exc.problems:
            err.write(f"error: {problem}\n")
        return EXIT_INVALID
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
