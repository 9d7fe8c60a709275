"""Run bound methods over a generated corpus and tabulate the results."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .domination import bound_domination, bound_radius
from .errors import BudgetExhausted, InputMismatchError
from .exact import SearchLimits, burning_number_exact
from .generators import GenSpec, SplitMix64, generate
from .graph import Graph
from .paths import PathForest, bound_path_forest, bound_theorem3, ceil_sqrt
from .report import BoundReport
from .trees import bound_corollary1, bound_theorem2, bound_theorem2_simple, bound_theorem4

CSV_HEADER = ["instance", "n", "method", "k", "bound", "exact", "time_ms", "conj", "status"]


def _lem4(g: Graph, epsilon: Fraction) -> BoundReport:
    return bound_path_forest(PathForest.from_graph(g), g)


METHODS: dict[str, Callable[[Graph, Fraction], BoundReport]] = {
    "cor1": lambda g, eps: bound_corollary1(g),
    "thm2": bound_theorem2,
    "thm2simple": lambda g, eps: bound_theorem2_simple(g),
    "thm3": lambda g, eps: bound_theorem3(g),
    "thm4": lambda g, eps: bound_theorem4(g),
    "lem4": _lem4,
    "mm": lambda g, eps: bound_domination(g),
    "radius": lambda g, eps: bound_radius(g),
}


def run_method(name: str, g: Graph, epsilon: Fraction | float | str = Fraction(1, 2)) -> BoundReport:
    try:
        method = METHODS[name]
    except KeyError:
        raise ValueError(f"unknown method {name!r}; choose from {sorted(METHODS)}") from None
    return method(g, Fraction(epsilon))


def parse_epsilon(text: str) -> Fraction:
    """Accepts ``0.1``, ``1/10`` and the like."""
    try:
        eps = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"bad epsilon {text!r}") from None
    if not 0 < eps < 1:
        raise ValueError("epsilon must lie strictly between 0 and 1")
    return eps


@dataclass(frozen=True)
class CorpusEntry:
    family: str
    params: tuple[int, ...]
    count: int = 1


def parse_corpus_entry(text: str) -> CorpusEntry:
    """``family:p1,p2`` optionally followed by ``*count``, e.g. ``random_tree:100*20``."""
    body, _, count = text.partition("*")
    family, _, params = body.partition(":")
    try:
        values = tuple(int(p) for p in params.split(",") if p)
        n = int(count) if count else 1
    except ValueError:
        raise ValueError(f"bad corpus entry {text!r}") from None
    if n < 0:
        raise ValueError("count must be non-negative")
    GenSpec(family, values)  # validates family and arity
    return CorpusEntry(family, values, n)


def build_corpus(entries: Iterable[CorpusEntry], seed: int) -> list[tuple[str, Graph]]:
    rng = SplitMix64(seed)
    out = []
    for entry in entries:
        for idx in range(entry.count):
            spec = GenSpec(entry.family, entry.params, rng.next_u64())
            out.append((f"{spec.name}-{idx:03d}", generate(spec)))
    return out


@dataclass(frozen=True)
class BenchRow:
    instance: str
    n: int
    method: str
    k_achieved: int | None
    formula_value: float | None
    exact_k: int | None
    wall_time_ms: float | None
    status: str

    @property
    def within_root_n(self) -> bool | None:
        if self.k_achieved is None:
            return None
        return self.k_achieved <= ceil_sqrt(self.n)

    def as_csv(self, timing: bool) -> list[str]:
        conj = self.within_root_n
        return [
            self.instance,
            str(self.n),
            self.method,
            "" if self.k_achieved is None else str(self.k_achieved),
            "" if self.formula_value is None else f"{self.formula_value:.6f}",
            "" if self.exact_k is None else str(self.exact_k),
            f"{self.wall_time_ms:.3f}" if timing and self.wall_time_ms is not None else "",
            "" if conj is None else ("yes" if conj else "no"),
            self.status,
        ]


def run_bench(
    corpus: list[tuple[str, Graph]],
    methods: list[str],
    epsilon: Fraction = Fraction(1, 2),
    exact: bool = False,
    max_n_exact: int = 40,
    timeout_ms: float | None = None,
) -> list[BenchRow]:
    rows = []
    for name, g in corpus:
        exact_k = None
        if exact and g.n <= max_n_exact:
            try:
                exact_k = burning_number_exact(g, SearchLimits(time_budget=timeout_ms))[0]
            except BudgetExhausted:
                exact_k = None
        for method in methods:
            start = time.perf_counter()
            try:
                report = run_method(method, g, epsilon)
            except InputMismatchError as exc:
                rows.append(BenchRow(name, g.n, method, None, None, exact_k, None, f"skipped: {exc}"))
                continue
            except Exception as exc:  # recorded per row, never fatal
                rows.append(BenchRow(name, g.n, method, None, None, exact_k, None,
                                     f"error: {type(exc).__name__}: {exc}"))
                continue
            elapsed = (time.perf_counter() - start) * 1000
            status = "ok" if report.ok else "invalid"
            if exact_k is not None and report.k_achieved < exact_k:
                status = "below-exact"
            rows.append(BenchRow(name, g.n, method, report.k_achieved, report.formula_value,
                                 exact_k, elapsed, status))
    rows.sort(key=lambda r: (r.instance, r.method))
    return rows


def rows_to_csv(rows: list[BenchRow], timing: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.as_csv(timing))
    return buf.getvalue()
