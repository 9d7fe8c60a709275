from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph
from .schedule import Schedule, assignment_to_schedule, verify_burning, verify_covering


@dataclass(frozen=True)
class BoundReport:
    method: str
    n: int
    formula_value: float
    k_achieved: int
    schedule: Schedule
    covering_ok: bool
    burning_ok: bool

    @property
    def integer_bound(self) -> int:
        """The method's bound rounded down to an integer (b(G) is integral)."""
        return math.floor(self.formula_value + 1e-9)

    @property
    def ok(self) -> bool:
        return self.covering_ok and self.burning_ok and self.k_achieved <= self.integer_bound

    def to_json(self) -> dict:
        return {
            "method": self.method,
            "n": self.n,
            "formula_value": self.formula_value,
            "k": self.k_achieved,
            "sequence": list(self.schedule),
            "valid_covering": self.covering_ok,
            "valid_burning": self.burning_ok,
        }


def make_report(method: str, g: Graph, formula_value: float, schedule: Schedule) -> BoundReport:
    return BoundReport(
        method=method,
        n=g.n,
        formula_value=float(formula_value),
        k_achieved=len(schedule),
        schedule=tuple(schedule),
        covering_ok=verify_covering(g, schedule)[0],
        burning_ok=verify_burning(g, schedule)[0],
    )


def report_from_assignment(method: str, g: Graph, formula_value: float,
                           pairs: Iterable[tuple[int, int]], k: int) -> BoundReport:
    return make_report(method, g, formula_value, assignment_to_schedule(pairs, k, g))
