"""Simple undirected graphs, BFS distances and rooted-tree views.

Vertex ids are always ``0..n-1``.  Unreachable vertices get the distance
``INFINITE`` (``math.inf``), which compares correctly against integers.
Rooted trees never re-index: removal flips vertices to dead so that ids
stay stable across repeated peeling.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    DisconnectedGraphError,
    GraphParseError,
    GraphValidationError,
    InputMismatchError,
    NotATreeError,
)

INFINITE = math.inf


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise GraphValidationError(f"negative vertex count {n}")
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphValidationError(f"duplicate edge {e}")
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, frozenset(seen), tuple(tuple(sorted(a)) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def distances(self) -> tuple[tuple[float, ...], ...]:
        """All-pairs distance matrix (one BFS per vertex)."""
        return tuple(tuple(bfs_distances(self, u)) for u in range(self.n))

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        comp_of = [-1] * self.n
        comps = []
        for s in range(self.n):
            if comp_of[s] >= 0:
                continue
            members = [s]
            comp_of[s] = len(comps)
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if comp_of[w] < 0:
                        comp_of[w] = len(comps)
                        members.append(w)
                        queue.append(w)
            comps.append(tuple(sorted(members)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components)

    def ball(self, u: int, radius: int) -> set[int]:
        """Closed ball: every vertex within ``radius`` of ``u``."""
        row = self.distances[u]
        return {v for v in range(self.n) if row[v] <= radius}

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Subgraph induced on ``vertices``, relabelled to 0..len-1.

        Returns the subgraph and the local-to-original id map.
        """
        keep = sorted(set(vertices))
        local = {v: i for i, v in enumerate(keep)}
        edges = [(local[u], local[v]) for u, v in self.edges if u in local and v in local]
        return Graph.from_edges(len(keep), edges), keep


def parse_graph(text: str | bytes) -> Graph:
    """Parse the edge-list format: optional ``p <n> <m>`` header, then ``u v`` lines."""
    if isinstance(text, bytes):
        text = text.decode()
    declared_n = declared_m = None
    edges: list[tuple[int, int]] = []
    edge_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if declared_n is not None or edges:
                raise GraphParseError("header must come first and only once", lineno)
            if len(parts) != 3:
                raise GraphParseError("header must be 'p <n> <m>'", lineno)
            try:
                declared_n, declared_m = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError(f"bad header {line!r}", lineno) from None
            if declared_n < 0 or declared_m < 0:
                raise GraphParseError("header counts must be non-negative", lineno)
            continue
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex id in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphParseError(f"negative vertex id in {line!r}", lineno)
        edges.append((u, v))
        edge_lines.append(lineno)

    if declared_n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    else:
        n = declared_n
        if declared_m != len(edges):
            raise GraphParseError(f"header declares {declared_m} edges, found {len(edges)}")
    try:
        return Graph.from_edges(n, edges)
    except GraphValidationError as exc:
        # re-run edge by edge to report the offending line
        seen = set()
        for (u, v), lineno in zip(edges, edge_lines):
            e = (min(u, v), max(u, v))
            if u == v or max(u, v) >= n or e in seen:
                raise GraphValidationError(f"line {lineno}: {exc}") from None
            seen.add(e)
        raise


def format_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def bfs_distances(g: Graph, u: int) -> list[float]:
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range 0..{g.n - 1}")
    dist: list[float] = [INFINITE] * g.n
    dist[u] = 0
    queue = deque([u])
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in g.adjacency[v]:
            if dist[w] == INFINITE:
                dist[w] = dv
                queue.append(w)
    return dist


def graph_metrics(g: Graph) -> tuple[list[float], float, int | None]:
    """Eccentricities, radius, and the minimum-id center.

    A disconnected graph yields INFINITE everywhere and no center.
    """
    ecc = [max(row, default=0) for row in g.distances]
    if not ecc:
        return [], INFINITE, None
    radius = min(ecc)
    if radius == INFINITE:
        return ecc, INFINITE, None
    return ecc, radius, ecc.index(radius)


def require_connected(g: Graph) -> None:
    if g.n == 0:
        raise InputMismatchError("empty graph")
    if not g.is_connected():
        raise DisconnectedGraphError(g.components[1][0])


def require_tree(g: Graph) -> None:
    if g.n == 0:
        raise NotATreeError("empty graph is not a tree")
    if not g.is_connected():
        raise NotATreeError(f"not a tree: vertex {g.components[1][0]} is unreachable from 0")
    if g.m != g.n - 1:
        raise NotATreeError(f"not a tree: {g.m} edges on {g.n} vertices")


@dataclass(frozen=True)
class RootedTree:
    """Rooted view of a tree over the original id space.

    ``parent``, ``children`` and ``depth`` are indexed by vertex id and
    fixed at construction; ``alive`` records which vertices survive removals.
    """

    root: int
    parent: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]
    depth: tuple[int, ...]
    order: tuple[int, ...]  # BFS order of all tree vertices
    alive: frozenset[int]

    def __len__(self) -> int:
        return len(self.alive)

    def __contains__(self, v: int) -> bool:
        return v in self.alive

    @property
    def vertices(self) -> frozenset[int]:
        return self.alive

    def is_empty(self) -> bool:
        return not self.alive

    def alive_children(self, v: int) -> list[int]:
        return [c for c in self.children[v] if c in self.alive]

    def heights(self) -> dict[int, int]:
        """Height of T_v for every alive v, counting alive vertices only."""
        h: dict[int, int] = {}
        for v in reversed(self.order):
            if v not in self.alive:
                continue
            best = 0
            for c in self.children[v]:
                if c in h:
                    best = max(best, h[c] + 1)
            h[v] = best
        return h

    @property
    def height(self) -> int:
        """Height of the whole tree; -1 when empty."""
        if self.root not in self.alive:
            return -1
        return self.heights()[self.root]

    def descendants(self, x: int) -> list[int]:
        """Alive vertices of T_x, x first."""
        out = [x]
        i = 0
        while i < len(out):
            out.extend(self.alive_children(out[i]))
            i += 1
        return out

    def ball(self, x: int, radius: int) -> set[int]:
        """N^radius[x] inside the alive tree."""
        seen = {x}
        frontier = [x]
        for _ in range(radius):
            nxt = []
            for v in frontier:
                p = self.parent[v]
                nbrs = self.alive_children(v)
                if p is not None and p in self.alive:
                    nbrs.append(p)
                for w in nbrs:
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            if not nxt:
                break
            frontier = nxt
        return seen

    def path_to_root(self, v: int) -> list[int]:
        path = [v]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]])
        return path

    def with_alive(self, alive: Iterable[int]) -> RootedTree:
        return RootedTree(self.root, self.parent, self.children, self.depth, self.order,
                          frozenset(alive))

    def to_graph(self) -> Graph:
        """Alive part as a Graph on the full id space (dead vertices isolated)."""
        n = len(self.parent)
        edges = [(self.parent[v], v) for v in self.alive
                 if self.parent[v] is not None and self.parent[v] in self.alive]
        return Graph.from_edges(n, edges)

    def iter_alive(self) -> Iterator[int]:
        return (v for v in self.order if v in self.alive)


def spanning_tree(g: Graph, root: int = 0) -> RootedTree:
    """BFS spanning tree; neighbors explored in ascending id order."""
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range 0..{g.n - 1}")
    parent: list[int | None] = [None] * g.n
    depth = [-1] * g.n
    children: list[list[int]] = [[] for _ in range(g.n)]
    depth[root] = 0
    order = [root]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for w in g.adjacency[v]:
            if depth[w] < 0:
                depth[w] = depth[v] + 1
                parent[w] = v
                children[v].append(w)
                order.append(w)
    if len(order) != g.n:
        missing = next(v for v in range(g.n) if depth[v] < 0)
        raise DisconnectedGraphError(missing)
    return RootedTree(root, tuple(parent), tuple(tuple(c) for c in children),
                      tuple(depth), tuple(order), frozenset(range(g.n)))


def rooted_tree(g: Graph, root: int = 0) -> RootedTree:
    """Root a tree graph; rejects graphs with cycles."""
    require_tree(g)
    return spanning_tree(g, root)


def find_height_vertex(t: RootedTree, d: int) -> int | None:
    """Minimum-id alive x whose subtree T_x has height exactly ``d``."""
    heights = t.heights()
    hits = [v for v, h in heights.items() if h == d]
    return min(hits) if hits else None


def remove_subtree(t: RootedTree, x: int, keep_root: bool = False) -> RootedTree:
    if x not in t.alive:
        raise ValueError(f"vertex {x} is not alive in the tree")
    gone = t.descendants(x)
    if keep_root:
        gone = gone[1:]
    return t.with_alive(t.alive.difference(gone))
