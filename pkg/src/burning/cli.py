"""Command-line entry point: ``burning <command> ...``.

Exit codes: 0 ok, 1 unreadable graph, 2 search budget exhausted,
3 method does not fit the input, 4 contract failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from fractions import Fraction
from pathlib import Path

from .bench import (
    METHODS,
    build_corpus,
    parse_corpus_entry,
    parse_epsilon,
    rows_to_csv,
    run_bench,
    run_method,
)
from .binary import as_binary, burn_binary_nonextremal, classify_binary
from .errors import (
    BudgetExhausted,
    ContractError,
    GraphParseError,
    GraphValidationError,
    InputMismatchError,
)
from .exact import SearchLimits, burning_number_exact
from .generators import FAMILIES, GenSpec, generate
from .graph import Graph, format_graph, parse_graph
from .report import make_report
from .schedule import repair, schedule_json, verify_burning, verify_covering

EXIT_OK, EXIT_PARSE, EXIT_BUDGET, EXIT_MISMATCH, EXIT_CONTRACT = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, message: str, payload: dict | None = None):
        super().__init__(message)
        self.code = code
        self.payload = payload


def _load(path: str) -> Graph:
    try:
        data = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc}") from None
    try:
        return parse_graph(data)
    except (GraphParseError, GraphValidationError) as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None


def _sequence(g: Graph, ids: list[int]) -> tuple[int, ...]:
    bad = [v for v in ids if not 0 <= v < g.n]
    if not ids or bad:
        raise CliError(EXIT_CONTRACT, f"sequence must be nonempty valid vertex ids; bad: {bad}")
    return tuple(ids)


def _emit(obj: dict, fmt: str = "json") -> None:
    if fmt == "csv":
        keys = list(obj)
        print(",".join(keys))
        print(",".join(" ".join(map(str, v)) if isinstance(v, list) else str(v) for v in obj.values()))
    else:
        print(json.dumps(obj))


def cmd_exact(args) -> int:
    g = _load(args.file)
    if g.n > args.max_n_exact:
        raise CliError(EXIT_BUDGET, f"n={g.n} exceeds --max-n-exact {args.max_n_exact}")
    limits = SearchLimits(time_budget=args.timeout_ms)
    try:
        k, s = burning_number_exact(g, limits)
    except BudgetExhausted as exc:
        raise CliError(EXIT_BUDGET, str(exc),
                       {"error": "budget", "upper_bound": exc.upper_bound,
                        "sequence": list(exc.schedule)}) from None
    _emit(make_report("exact", g, k, s).to_json(), args.format)
    return EXIT_OK


def cmd_bound(args) -> int:
    g = _load(args.file)
    try:
        report = run_method(args.method, g, args.epsilon)
    except InputMismatchError as exc:
        raise CliError(EXIT_MISMATCH, str(exc)) from None
    _emit(report.to_json(), args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load(args.file)
    s = _sequence(g, args.sequence)
    out = schedule_json(g, s)
    out["uncovered"] = sorted(verify_covering(g, s)[1])
    violation = verify_burning(g, s)[1]
    out["violation"] = None if violation is None else str(violation)
    _emit(out)
    return EXIT_OK


def cmd_repair(args) -> int:
    g = _load(args.file)
    s = _sequence(g, args.sequence)
    try:
        fixed = repair(g, s)
    except ContractError as exc:
        raise CliError(EXIT_CONTRACT, str(exc)) from None
    _emit(schedule_json(g, fixed))
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _load(args.file)
    try:
        t = as_binary(g, args.root)
    except InputMismatchError as exc:
        raise CliError(EXIT_MISMATCH, str(exc)) from None
    r = t.height
    verdict = classify_binary(t, r)
    out = {"root": args.root, "r": r, "extremal": verdict.extremal,
           "witness": verdict.witness, "reason": verdict.reason}
    if not verdict.extremal:
        s = burn_binary_nonextremal(g, t, r)
        out.update(schedule_json(g, s))
    _emit(out)
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        spec = GenSpec(args.family, tuple(args.params), args.seed)
    except ValueError as exc:
        raise CliError(EXIT_CONTRACT, str(exc)) from None
    text = format_graph(generate(spec))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args) -> int:
    try:
        entries = [parse_corpus_entry(c) for c in args.corpus]
    except ValueError as exc:
        raise CliError(EXIT_CONTRACT, str(exc)) from None
    methods = args.methods.split(",") if args.methods else []
    unknown = [m for m in methods if m not in METHODS]
    if unknown:
        raise CliError(EXIT_CONTRACT, f"unknown methods {unknown}")
    corpus = build_corpus(entries, args.seed)
    rows = run_bench(corpus, methods, args.epsilon, exact=args.exact,
                     max_n_exact=args.max_n_exact, timeout_ms=args.timeout_ms)
    if args.format == "json":
        text = json.dumps([asdict(row) for row in rows]) + "\n"
    else:
        text = rows_to_csv(rows, timing=args.timing)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the contract code; argparse's own 2 means budget here."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONTRACT, f"{self.prog}: error: {message}\n")


def _epsilon(text: str) -> Fraction:
    try:
        return parse_epsilon(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="burning", description="Burning number of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        if fmt:
            p.add_argument("--format", choices=["json", "csv"], default="json")
        return p

    p = common(sub.add_parser("exact", help="exact burning number"))
    p.add_argument("file")
    p.add_argument("--timeout-ms", type=float, default=None)
    p.add_argument("--max-n-exact", type=int, default=40)
    p.set_defaults(func=cmd_exact)

    p = common(sub.add_parser("bound", help="constructive upper bound with certificate"))
    p.add_argument("file")
    p.add_argument("--method", choices=sorted(METHODS), required=True)
    p.add_argument("--epsilon", type=_epsilon, default=Fraction(1, 2))
    p.set_defaults(func=cmd_bound)

    for name, func in (("verify", cmd_verify), ("repair", cmd_repair)):
        p = sub.add_parser(name, help=f"{name} a schedule")
        p.add_argument("file")
        p.add_argument("sequence", type=int, nargs="+")
        p.set_defaults(func=func)

    p = sub.add_parser("classify", help="extremal test for a rooted binary tree")
    p.add_argument("file")
    p.add_argument("--root", type=int, default=0)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("generate", help="emit a graph instance")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="run methods over a seeded corpus, CSV out")
    p.add_argument("--corpus", action="append", default=[],
                   help="family:p1,p2*count, repeatable (e.g. random_tree:100*20)")
    p.add_argument("--methods", default="cor1,thm2simple,mm")
    p.add_argument("--epsilon", type=_epsilon, default=Fraction(1, 2))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exact", action="store_true", help="fill the exact column for small n")
    p.add_argument("--max-n-exact", type=int, default=40)
    p.add_argument("--timeout-ms", type=float, default=None)
    p.add_argument("--timing", action="store_true",
                   help="fill time_ms (makes output run-dependent)")
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        if exc.payload is not None:
            print(json.dumps(exc.payload))
        print(f"burning: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
