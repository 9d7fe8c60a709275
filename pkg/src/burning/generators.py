"""Seeded instance generators.

Randomness comes from SplitMix64 (increment 0x9E3779B97F4A7C15, mixing
multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB, shifts 30/27/31), and
bounded integers use the multiply-high reduction ``(x * m) >> 64``, so any
implementation following the same recipe rebuilds identical graphs.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .binary import build_tr
from .graph import Graph

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        """Integer in ``[0, m)``."""
        if m <= 0:
            raise ValueError("bound must be positive")
        return (self.next_u64() * m) >> 64


FAMILIES = {
    # family: number of integer parameters
    "path": 1,
    "cycle": 1,
    "star": 1,
    "spider": 2,
    "perfect_binary": 1,
    "tr": 1,
    "random_tree": 1,
    "comet": 2,
    "random_connected": 2,
}


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: tuple[int, ...]
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {sorted(FAMILIES)}")
        if len(self.params) != FAMILIES[self.family]:
            raise ValueError(f"{self.family} takes {FAMILIES[self.family]} parameter(s)")
        if self.family == "random_connected":
            bad = self.params[0] < 1 or self.params[1] < 0
        elif self.family == "perfect_binary":
            bad = self.params[0] < 0
        else:
            bad = any(p < 1 for p in self.params)
        if bad:
            raise ValueError(f"invalid parameters {self.params} for {self.family}")
        if self.family == "cycle" and self.params[0] < 3:
            raise ValueError("a cycle needs at least 3 vertices")

    @property
    def name(self) -> str:
        return "-".join([self.family, *map(str, self.params)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def spider(legs: int, length: int) -> Graph:
    """Center 0 with ``legs`` paths of ``length`` vertices; leg i is 1+i*length outwards."""
    edges = []
    for i in range(legs):
        prev = 0
        for j in range(length):
            v = 1 + i * length + j
            edges.append((prev, v))
            prev = v
    return Graph.from_edges(1 + legs * length, edges)


def perfect_binary(depth: int) -> Graph:
    n = 2 ** (depth + 1) - 1
    return Graph.from_edges(n, [((v - 1) // 2, v) for v in range(1, n)])


def prufer_decode(code: list[int], n: int) -> list[tuple[int, int]]:
    """Edges of the labelled tree with the given Prüfer code (smallest leaf first)."""
    degree = [1] * n
    for v in code:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return edges


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree on n vertices via a random Prüfer code."""
    if n <= 2:
        return path(n)
    rng = SplitMix64(seed)
    code = [rng.below(n) for _ in range(n - 2)]
    return Graph.from_edges(n, prufer_decode(code, n))


def comet(core: int, tail: int) -> Graph:
    """A path of ``tail`` vertices hanging off every vertex of a core.

    The core is a cycle when it has at least 3 vertices, else a path.
    Core vertices are 0..core-1; the tail of core vertex c continues outwards
    from ``core + c*tail``.
    """
    edges = [(i, i + 1) for i in range(core - 1)]
    if core >= 3:
        edges.append((core - 1, 0))
    for c in range(core):
        prev = c
        for j in range(tail):
            v = core + c * tail + j
            edges.append((prev, v))
            prev = v
    return Graph.from_edges(core * (tail + 1), edges)


def random_connected(n: int, extra: int, seed: int) -> Graph:
    """Random tree plus up to ``extra`` distinct random chords."""
    rng = SplitMix64(seed)
    base = random_tree(n, rng.next_u64())
    edges = set(base.edges)
    attempts = 0
    added = 0
    while added < extra and attempts < 20 * (extra + 1) and n >= 3:
        attempts += 1
        u, v = rng.below(n), rng.below(n)
        e = (min(u, v), max(u, v))
        if u == v or e in edges:
            continue
        edges.add(e)
        added += 1
    return Graph.from_edges(n, sorted(edges))


def generate(spec: GenSpec) -> Graph:
    p = spec.params
    match spec.family:
        case "path":
            return path(p[0])
        case "cycle":
            return cycle(p[0])
        case "star":
            return star(p[0])
        case "spider":
            return spider(p[0], p[1])
        case "perfect_binary":
            return perfect_binary(p[0])
        case "tr":
            return build_tr(p[0])[0]
        case "random_tree":
            return random_tree(p[0], spec.seed)
        case "comet":
            return comet(p[0], p[1])
        case "random_connected":
            return random_connected(p[0], p[1], spec.seed)
    raise AssertionError(spec.family)
