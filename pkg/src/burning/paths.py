"""Burning disjoint unions of paths, and trees with few branch vertices."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Sequence

from .errors import InputMismatchError
from .graph import Graph, require_tree
from .report import BoundReport, make_report, report_from_assignment
from .schedule import Schedule, assignment_to_schedule


def ceil_sqrt(n: int) -> int:
    r = isqrt(n)
    return r if r * r == n else r + 1


@dataclass(frozen=True)
class PathForest:
    """Vertex-disjoint paths, each listed end to end from its lower-id end."""

    components: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for comp in self.components:
            if not comp:
                raise ValueError("empty path component")
            if seen.intersection(comp) or len(set(comp)) != len(comp):
                raise ValueError("path components must be vertex-disjoint")
            seen.update(comp)

    @classmethod
    def from_orders(cls, orders: Sequence[int]) -> PathForest:
        comps, start = [], 0
        for size in orders:
            if size < 1:
                raise ValueError("path orders must be positive")
            comps.append(tuple(range(start, start + size)))
            start += size
        return cls(tuple(comps))

    @classmethod
    def from_graph(cls, g: Graph, vertices: Sequence[int] | None = None) -> PathForest:
        """Path components of the subgraph induced on ``vertices`` (default: all)."""
        keep = set(range(g.n)) if vertices is None else set(vertices)
        nbrs = {v: [w for w in g.adjacency[v] if w in keep] for v in keep}
        if any(len(a) > 2 for a in nbrs.values()):
            raise InputMismatchError("not a union of paths: a vertex has degree above 2")
        comps, seen = [], set()
        for v in sorted(keep):
            if v in seen or len(nbrs[v]) == 2:
                continue
            path = [v]
            seen.add(v)
            while True:
                nxt = [w for w in nbrs[path[-1]] if w not in seen]
                if not nxt:
                    break
                path.append(nxt[0])
                seen.add(nxt[0])
            comps.append(tuple(path) if path[0] <= path[-1] else tuple(reversed(path)))
        if len(seen) != len(keep):
            raise InputMismatchError("not a union of paths: contains a cycle")
        return cls(tuple(comps))

    @property
    def orders(self) -> list[int]:
        return sorted(len(c) for c in self.components)

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.components)

    def vertices(self) -> list[int]:
        return sorted(v for c in self.components for v in c)

    def to_graph(self) -> tuple[Graph, list[int]]:
        """The forest relabelled to 0..n-1, with the local-to-original id map."""
        ids = self.vertices()
        local = {v: i for i, v in enumerate(ids)}
        edges = [(local[c[i]], local[c[i + 1]]) for c in self.components for i in range(len(c) - 1)]
        return Graph.from_edges(len(ids), edges), ids


def lemma4_feasible(orders: Sequence[int], k: int) -> bool:
    """Whether ``n_1 + ... + n_p + k(p - 1) <= k^2``."""
    p = len(orders)
    return sum(orders) + k * (p - 1) <= k * k


def _largest(comps: list[tuple[int, ...]]) -> int:
    return max(range(len(comps)), key=lambda i: (len(comps[i]), -min(comps[i])))


def _path_forest_pairs(comps: list[tuple[int, ...]], k: int) -> list[tuple[int, int]]:
    pairs: list[tuple[int, int]] = []
    while comps:
        assert lemma4_feasible([len(c) for c in comps], k), "premise lost in recursion"
        p = len(comps)
        big = _largest(comps)
        path = comps[big]
        size = len(path)
        if size <= k - p + 1:
            order = sorted(range(p), key=lambda i: (-len(comps[i]), min(comps[i])))
            for step, i in enumerate(order):
                pairs.append((comps[i][0], k - 1 - step))
            return pairs
        if size >= 2 * k:
            pairs.append((path[k - 1], k - 1))
            piece = path[2 * k - 1:]
            comps[big] = piece if piece[0] <= piece[-1] else piece[::-1]
        else:
            mid = (size - 1) // 2
            center = path[mid] if size % 2 else min(path[mid], path[mid + 1])
            pairs.append((center, k - 1))
            del comps[big]
        k -= 1
    return pairs


def burn_path_forest(f: PathForest, k: int) -> Schedule:
    """Burning schedule of length at most ``k`` for a feasible path forest.

    Returned ids are those of ``f``; the schedule is repaired against the
    forest itself.
    """
    if k < 1 or not lemma4_feasible(f.orders, k):
        raise ValueError(f"orders {f.orders} are not burnable in {k} steps by this construction")
    pairs = _path_forest_pairs(list(f.components), k)
    g, ids = f.to_graph()
    local = {v: i for i, v in enumerate(ids)}
    s = assignment_to_schedule([(local[c], r) for c, r in pairs], k, g)
    return tuple(ids[v] for v in s)


def bound_path_forest(f: PathForest, g: Graph | None = None) -> BoundReport:
    """``ceil(sqrt(n)) + p - 1`` bound; ``g`` defaults to the forest itself."""
    p = len(f.components)
    k = ceil_sqrt(f.n) + p - 1
    s = burn_path_forest(f, k)
    if g is None:
        g, ids = f.to_graph()
        local = {v: i for i, v in enumerate(ids)}
        s = tuple(local[v] for v in s)
    return make_report("lem4", g, k, s)


def bound_theorem3(g: Graph) -> BoundReport:
    """Balls of radius at least ceil(sqrt(n)) on every branch vertex, then paths."""
    require_tree(g)
    root_n = ceil_sqrt(g.n)
    branch = [v for v in range(g.n) if g.degree(v) >= 3]
    k = root_n + len(branch)
    pairs = [(x, k - 1 - i) for i, x in enumerate(branch)]
    burnt: set[int] = set()
    for x, r in pairs:
        burnt |= g.ball(x, r)
    rest = [v for v in range(g.n) if v not in burnt]
    if rest:
        forest = PathForest.from_graph(g, rest)
        assert lemma4_feasible(forest.orders, root_n), "leftover paths too long"
        tail = burn_path_forest(forest, root_n)
        pairs += [(y, len(tail) - 1 - j) for j, y in enumerate(tail)]
    return report_from_assignment("thm3", g, k, pairs, k)
