"""Burning schedules: simulation, verification and repair.

A schedule is a plain tuple of vertex ids ``(x_1, ..., x_k)``; entry ``i``
(1-based) carries the implicit radius ``k - i``.  A *covering* schedule only
requires the balls of those radii to cover the graph; a *burning* schedule
additionally requires ``dist(x_i, x_j) >= j - i`` for all ``i < j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ContractError
from .graph import Graph

Schedule = tuple[int, ...]
CoverAssignment = tuple[tuple[int, int], ...]  # (center, radius) pairs

UNBURNED = None


@dataclass(frozen=True)
class BurnTrace:
    burn_time: tuple[int | None, ...]  # None = UNBURNED
    steps: int

    @property
    def unburned(self) -> list[int]:
        return [v for v, t in enumerate(self.burn_time) if t is None]

    def all_burned(self) -> bool:
        return all(t is not None for t in self.burn_time)


@dataclass(frozen=True)
class Violation:
    """First failure found by :func:`verify_burning`.

    ``kind`` is ``"uncovered"`` (``vertex`` is never reached) or
    ``"too_close"`` (centers ``i < j`` sit at ``distance < j - i``).
    """

    kind: str
    vertex: int | None = None
    i: int | None = None
    j: int | None = None
    distance: float | None = None

    def __str__(self) -> str:
        if self.kind == "uncovered":
            return f"vertex {self.vertex} is not covered"
        return (f"positions i={self.i}, j={self.j}: distance {self.distance} "
                f"< {self.j - self.i}")


def _check_ids(g: Graph, s: Sequence[int]) -> None:
    if not s:
        raise ValueError("schedule must be nonempty")
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"schedule entry {v} is not a vertex (n={g.n})")


def simulate(g: Graph, s: Sequence[int]) -> BurnTrace:
    """Run the fire process for ``len(s)`` steps.

    At step ``i`` the fire first starts at ``x_i`` (if not already burning),
    then spreads one hop; the spread of the final step is not recorded.
    """
    _check_ids(g, s)
    k = len(s)
    burn: list[int | None] = [None] * g.n
    burning: list[int] = []
    for step, x in enumerate(s, start=1):
        if burn[x] is None:
            burn[x] = step
            burning.append(x)
        if step == k:
            break
        fresh = []
        for v in burning:
            for w in g.adjacency[v]:
                if burn[w] is None:
                    burn[w] = step + 1
                    fresh.append(w)
        burning.extend(fresh)
    return BurnTrace(tuple(burn), k)


def uncovered_vertices(g: Graph, s: Sequence[int]) -> set[int]:
    k = len(s)
    missed = set(range(g.n))
    for i, x in enumerate(s, start=1):
        row = g.distances[x]
        radius = k - i
        missed = {v for v in missed if row[v] > radius}
        if not missed:
            break
    return missed


def verify_covering(g: Graph, s: Sequence[int]) -> tuple[bool, set[int]]:
    _check_ids(g, s)
    missed = uncovered_vertices(g, s)
    return not missed, missed


def first_conflict(g: Graph, s: Sequence[int]) -> tuple[int, int] | None:
    """Smallest ``j`` (then smallest ``i``) with ``dist(x_i, x_j) < j - i``, 1-based."""
    for j in range(2, len(s) + 1):
        row = g.distances[s[j - 1]]
        for i in range(1, j):
            if row[s[i - 1]] < j - i:
                return i, j
    return None


def verify_burning(g: Graph, s: Sequence[int]) -> tuple[bool, Violation | None]:
    _check_ids(g, s)
    missed = uncovered_vertices(g, s)
    if missed:
        return False, Violation("uncovered", vertex=min(missed))
    clash = first_conflict(g, s)
    if clash is not None:
        i, j = clash
        d = g.distances[s[i - 1]][s[j - 1]]
        return False, Violation("too_close", i=i, j=j, distance=d)
    return True, None


def repair(g: Graph, s: Sequence[int]) -> Schedule:
    """Turn a covering schedule into a burning schedule of no greater length.

    Repeatedly takes the smallest index ``j`` whose center is too close to an
    earlier one and swaps in the minimum-id vertex that the shrunken prefix
    balls (radii ``(j-1) - i``) miss.  If the prefix already covers every
    vertex, the schedule is cut to length ``j - 1``.
    """
    ok, missed = verify_covering(g, s)
    if not ok:
        raise ContractError(f"repair needs a covering schedule; uncovered: {sorted(missed)}")
    seq = list(s)
    while True:
        clash = first_conflict(g, seq)
        if clash is None:
            return tuple(seq)
        j = clash[1]
        outside = uncovered_vertices(g, seq[: j - 1])
        if not outside:
            seq = seq[: j - 1]
        else:
            seq[j - 1] = min(outside)


def assignment_to_schedule(
    assignment: Iterable[tuple[int, int]], k: int, g: Graph | None = None
) -> Schedule:
    """Place each (center, radius) at position ``k - radius``.

    Free positions get the smallest vertex ids not already used (vertex 0 is
    reused when the graph has no unused vertex left) and, when ``g`` is
    given, the result is repaired.  Without ``g`` every position must be
    assigned.
    """
    if k < 1:
        raise ValueError("k must be positive")
    slots: list[int | None] = [None] * k
    for center, radius in assignment:
        if not 0 <= radius < k:
            raise ValueError(f"radius {radius} outside 0..{k - 1}")
        pos = k - radius - 1
        if slots[pos] is not None:
            raise ValueError(f"duplicate radius {radius}")
        slots[pos] = center
    if g is None:
        if None in slots:
            raise ValueError("unassigned positions need a graph to fill and repair")
        return tuple(slots)  # type: ignore[arg-type]
    used = {c for c in slots if c is not None}
    spare = (v for v in range(g.n) if v not in used)
    filled = [c if c is not None else next(spare, 0) for c in slots]
    return repair(g, filled)


def schedule_json(g: Graph, s: Sequence[int]) -> dict:
    return {
        "k": len(s),
        "sequence": list(s),
        "valid_covering": verify_covering(g, s)[0],
        "valid_burning": verify_burning(g, s)[0],
    }
