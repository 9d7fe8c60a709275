"""Exact burning number by branch-and-bound over covering sequences.

Only the ball-covering condition is searched; the winning covering is then
run through :func:`~burning.schedule.repair`, which cannot shorten an
optimal sequence, so the returned schedule is a burning schedule of length
``b(G)``.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .errors import BudgetExhausted
from .graph import Graph
from .schedule import Schedule, repair, verify_covering


@dataclass(frozen=True)
class SearchLimits:
    max_k: int | None = None
    node_budget: int | None = None
    time_budget: float | None = None  # milliseconds

    def __post_init__(self):
        for name in ("max_k", "node_budget", "time_budget"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name} must be positive, got {value}")


def _ball_sizes(g: Graph) -> list[list[int]]:
    """sizes[v][r] = |N^r[v]| for r = 0..n-1."""
    out = []
    for row in g.distances:
        counts = [0] * g.n
        for d in row:
            if d != float("inf"):
                counts[int(d)] += 1
        acc, sizes = 0, []
        for c in counts:
            acc += c
            sizes.append(acc)
        out.append(sizes)
    return out


def lower_bound(g: Graph) -> int:
    """Smallest k whose k largest possible balls (radii 0..k-1) could cover n vertices."""
    if g.n == 0:
        raise ValueError("empty graph")
    sizes = _ball_sizes(g)
    total = 0
    for k in range(1, g.n + 1):
        total += max(s[k - 1] for s in sizes)
        if total >= g.n:
            return k
    return g.n


def _ball_masks(g: Graph, max_radius: int) -> list[list[int]]:
    masks = []
    for row in g.distances:
        layers = [0] * (max_radius + 1)
        for v, d in enumerate(row):
            if d <= max_radius:
                layers[int(d)] |= 1 << v
        acc, per_r = 0, []
        for layer in layers:
            acc |= layer
            per_r.append(acc)
        masks.append(per_r)
    return masks


def _twin_representatives(g: Graph) -> list[int]:
    """One vertex per class of vertices with identical distances to all others."""
    dist = g.distances
    reps: list[int] = []
    for v in range(g.n):
        for r in reps:
            if all(dist[v][w] == dist[r][w] for w in range(g.n) if w != v and w != r):
                break
        else:
            reps.append(v)
    return reps


def _trivial_upper_bound(g: Graph) -> Schedule:
    best = repair(g, tuple(range(g.n)))
    if g.is_connected():
        from .domination import bound_radius
        from .trees import bound_corollary1
        for report in (bound_radius(g), bound_corollary1(g)):
            if report.burning_ok and report.k_achieved < len(best):
                best = report.schedule
    return best


class _Search:
    def __init__(self, g: Graph, limits: SearchLimits, fallback: Schedule):
        self.g = g
        self.limits = limits
        self.fallback = fallback
        self.nodes = 0
        self.deadline = (None if limits.time_budget is None
                         else time.monotonic() + limits.time_budget / 1000.0)
        self.sizes = _ball_sizes(g)

    def _tick(self):
        self.nodes += 1
        budget = self.limits.node_budget
        if budget is not None and self.nodes > budget:
            raise BudgetExhausted(len(self.fallback), self.fallback, "node budget exhausted")
        if self.deadline is not None and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise BudgetExhausted(len(self.fallback), self.fallback, "time budget exhausted")

    def run(self, k: int) -> Schedule | None:
        n = self.g.n
        self.k = k
        self.balls = _ball_masks(self.g, k - 1)
        self.failed: set[tuple[int, int]] = set()
        self.assigned: dict[int, int] = {}
        full = (1 << n) - 1
        rest = ((1 << k) - 1) & ~(1 << (k - 1))  # bit r set = radius r still free
        for rep in _twin_representatives(self.g):
            self.assigned = {k - 1: rep}
            if self._extend(full & ~self.balls[rep][k - 1], rest):
                return tuple(self.assigned.get(k - 1 - p, 0) for p in range(k))
        return None

    def _extend(self, unc: int, free: int) -> bool:
        if unc == 0:
            return True
        if free == 0:
            return False
        key = (unc, free)
        if key in self.failed:
            return False
        self._tick()
        radii = [r for r in range(self.k - 1, -1, -1) if free >> r & 1]
        balls = self.balls
        n = self.g.n
        members = [v for v in range(n) if unc >> v & 1]

        # the largest available balls must be able to absorb what is left
        reach = 0
        for r in radii:
            reach += max((balls[c][r] & unc).bit_count() for c in range(n))
        if reach < len(members):
            self.failed.add(key)
            return False

        sizes = self.sizes
        u = min(members, key=lambda v: (sum(sizes[v][r] for r in radii), v))
        for r in radii:
            cands = [c for c in range(n) if balls[u][r] >> c & 1]
            gains = [balls[c][r] & unc for c in cands]
            for idx, c in enumerate(cands):
                gain = gains[idx]
                dominated = False
                for jdx, other in enumerate(gains):
                    if jdx == idx or gain & ~other:
                        continue
                    # ``other`` covers everything ``c`` would; keep only the first of equals
                    if other != gain or jdx < idx:
                        dominated = True
                        break
                if dominated:
                    continue
                self.assigned[r] = c
                if self._extend(unc & ~gain, free & ~(1 << r)):
                    return True
                del self.assigned[r]
        self.failed.add(key)
        return False


def burning_number_exact(g: Graph, limits: SearchLimits | None = None) -> tuple[int, Schedule]:
    """Return ``(b(G), schedule)`` with a burning schedule of length ``b(G)``.

    Raises :class:`BudgetExhausted` carrying the best known upper bound when
    a budget or ``max_k`` stops the search early.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    limits = limits or SearchLimits()
    fallback = _trivial_upper_bound(g)
    search = _Search(g, limits, fallback)
    k = lower_bound(g)
    while k < len(fallback):
        if limits.max_k is not None and k > limits.max_k:
            raise BudgetExhausted(len(fallback), fallback, f"no schedule with k <= {limits.max_k}")
        found = search.run(k)
        if found is not None:
            s = repair(g, found)
            assert len(s) == k
            return k, s
        k += 1
    if limits.max_k is not None and k > limits.max_k:
        raise BudgetExhausted(len(fallback), fallback, f"no schedule with k <= {limits.max_k}")
    return len(fallback), fallback


def brute_force_oracle(g: Graph, k: int, budget: int = 5_000_000) -> Schedule | None:
    """Try every length-``k`` sequence (n**k of them) in lexicographic order."""
    if k < 1:
        raise ValueError("k must be positive")
    if g.n ** k > budget:
        raise ValueError(f"enumeration of {g.n}**{k} sequences exceeds budget {budget}")
    balls = [[frozenset(g.ball(v, r)) for r in range(k)] for v in range(g.n)]
    everything = frozenset(range(g.n))
    for seq in itertools.product(range(g.n), repeat=k):
        covered: set[int] = set()
        for i, x in enumerate(seq):
            covered |= balls[x][k - 1 - i]
        if covered == everything:
            assert verify_covering(g, seq)[0]
            return seq
    return None


def brute_force_burning_number(g: Graph, budget: int = 5_000_000) -> int:
    k = 1
    while brute_force_oracle(g, k, budget) is None:
        k += 1
    return k
