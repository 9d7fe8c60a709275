"""Peeling constructions for upper bounds on trees and connected graphs.

Every bound here works on a BFS spanning tree rooted at vertex 0: balls in
a spanning tree are contained in the balls of the host graph, so a cover
found on the tree is a cover of the graph.  Peels remove a rooted subtree
whose vertices lie in a ball of prescribed radius; when a ball around the
current root already reaches everything, the peel reports ``complete``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import (
    Graph,
    RootedTree,
    find_height_vertex,
    remove_subtree,
    require_connected,
    rooted_tree,
    spanning_tree,
)
from .report import BoundReport, report_from_assignment
from .schedule import CoverAssignment


@dataclass(frozen=True)
class Peel:
    """Outcome of one peel.

    ``pairs`` are the (center, radius) balls used, ``removed`` the vertices
    they account for, ``rest`` the surviving tree.  ``complete`` means the
    balls cover the whole input tree, so ``rest`` is empty.
    """

    pairs: CoverAssignment
    removed: frozenset[int]
    rest: RootedTree
    complete: bool


def _cover_all(t: RootedTree, pairs: CoverAssignment) -> Peel:
    return Peel(pairs, t.alive, t.with_alive(()), True)


def peel_single(t: RootedTree, d: int) -> Peel:
    """Remove a subtree of height exactly ``d``; at least ``d + 1`` vertices go."""
    if t.is_empty():
        raise ValueError("cannot peel an empty tree")
    if d < 0:
        raise ValueError("radius must be non-negative")
    if t.height <= d:
        return _cover_all(t, ((t.root, d),))
    x = find_height_vertex(t, d)
    removed = frozenset(t.descendants(x))
    return Peel(((x, d),), removed, remove_subtree(t, x), False)


def _descend(t: RootedTree, z: int, steps: int, heights: dict[int, int]) -> int:
    """Walk ``steps`` levels down from ``z`` keeping on a deepest branch."""
    v = z
    for _ in range(steps):
        v = min(c for c in t.alive_children(v) if heights[c] == heights[v] - 1)
    return v


def peel_pair(t: RootedTree, d1: int, d2: int) -> Peel:
    """Peel with two balls of radii ``d1 < d2`` where ``d2 >= ceil(3*d1/2)``.

    Unless ``complete``, at least ``ceil(3*d1/2) + d2 + 2`` vertices are
    removed.  The first pair returned has radius ``d1``.
    """
    if d1 < 1 or d2 < 1:
        raise ValueError("radii must be positive")
    if d2 < -(-3 * d1 // 2):
        raise ValueError(f"need d2 >= ceil(3*d1/2): d1={d1}, d2={d2}")
    if t.is_empty():
        raise ValueError("cannot peel an empty tree")
    if t.height <= d2:
        return _cover_all(t, ((t.root, d2),))

    heights = t.heights()
    z = find_height_vertex(t, d2)
    x = _descend(t, z, d2 - d1, heights)
    y = x
    for _ in range(-(-d1 // 2)):
        y = t.parent[y]
    below_y = t.descendants(y)
    near_x = t.ball(x, d1)
    if near_x.issuperset(below_y):
        first = (x, d1)
        cut = remove_subtree(t, y)
        inner = peel_single(cut, d2)
    else:
        first = (z, d2)
        cut = remove_subtree(t, z)
        inner = peel_single(cut, d1)
    pairs = (first, inner.pairs[0])
    if first[1] == d2:
        pairs = (inner.pairs[0], first)
    if inner.complete:
        return _cover_all(t, pairs)
    removed = t.alive - inner.rest.alive
    return Peel(pairs, frozenset(removed), inner.rest, False)


def cover_with_radii(t: RootedTree, radii: Sequence[int]) -> CoverAssignment:
    """Cover the tree with one ball per radius, largest radius peeled first.

    Requires ``sum(d + 1) >= |t|``; radii left over once the tree is covered
    are dropped.
    """
    if sum(d + 1 for d in radii) < len(t):
        raise ValueError(f"radii {list(radii)} cannot cover {len(t)} vertices")
    pairs: list[tuple[int, int]] = []
    for d in sorted(radii, reverse=True):
        if t.is_empty():
            break
        peel = peel_single(t, d)
        pairs.extend(peel.pairs)
        t = peel.rest
    assert t.is_empty(), "peeling left vertices uncovered"
    return tuple(pairs)


def corollary1_k(n: int) -> int:
    """ceil(sqrt(2n + 1/4) - 1/2), i.e. the least k with k(k+1)/2 >= n."""
    k = 1
    while k * (k + 1) // 2 < n:
        k += 1
    return k


def bound_corollary1(g: Graph) -> BoundReport:
    require_connected(g)
    k = corollary1_k(g.n)
    pairs = cover_with_radii(spanning_tree(g, 0), range(k - 1, -1, -1))
    return report_from_assignment("cor1", g, k, pairs, k)


@dataclass(frozen=True)
class Theorem2Params:
    epsilon: Fraction
    ell: int
    k: int
    index_sets: tuple[range, ...]  # radii d paired with k/3**j + d, one range per level j


def theorem2_formula(n: int, epsilon: Fraction | float) -> float:
    eps = float(epsilon)
    return math.sqrt(32 * n / (19 * (1 - eps))) + math.sqrt(27 / (19 * eps))


def _as_fraction(epsilon: Fraction | float | str) -> Fraction:
    eps = Fraction(epsilon)
    if not 0 < eps < 1:
        raise ValueError(f"epsilon must lie strictly between 0 and 1, got {epsilon}")
    return eps


def theorem2_params(n: int, epsilon: Fraction | float | str) -> Theorem2Params:
    """Level count ``ell`` and the smallest admissible ``k`` for order ``n``.

    ``ell`` is the least non-negative integer with ``19*eps*9**ell >= 3``;
    ``k`` is the least positive multiple of ``3**ell`` with
    ``(1 - eps)(19k^2 + 12k) >= 32n``.  Both tests are exact rationals.
    """
    eps = _as_fraction(epsilon)
    ell = 0
    while 19 * eps * 9 ** ell < 3:
        ell += 1
    step = 3 ** ell
    k = step
    while (1 - eps) * (19 * k * k + 12 * k) < 32 * n:
        k += step
    sets = tuple(range(k // 3 ** j, 2 * k // 3 ** j) for j in range(1, ell + 1))
    return Theorem2Params(eps, ell, k, sets)


def _pair_peeling(t: RootedTree, k: int, ell: int) -> CoverAssignment:
    """Pair peels over the radius ranges, then single peels for the small radii."""
    jobs: list[tuple[int, int]] = []
    for j in range(1, ell + 1):
        base = k // 3 ** j
        jobs.extend((d, base + d) for d in range(base, 2 * base))
    jobs.sort(key=lambda p: p[1], reverse=True)
    pairs: list[tuple[int, int]] = []
    for d1, d2 in jobs:
        if t.is_empty():
            break
        peel = peel_pair(t, d1, d2)
        pairs.extend(peel.pairs)
        t = peel.rest
    for d in range(k // 3 ** ell - 1, -1, -1):
        if t.is_empty():
            break
        peel = peel_single(t, d)
        pairs.extend(peel.pairs)
        t = peel.rest
    assert t.is_empty(), "pair peeling left vertices uncovered"
    return tuple(pairs)


def bound_theorem2(g: Graph, epsilon: Fraction | float | str) -> BoundReport:
    require_connected(g)
    params = theorem2_params(g.n, epsilon)
    pairs = _pair_peeling(spanning_tree(g, 0), params.k, params.ell)
    value = theorem2_formula(g.n, params.epsilon)
    return report_from_assignment("thm2", g, value, pairs, params.k)


def theorem2_simple_k(n: int) -> int:
    """Least multiple of 3 with 7k^2 + 5k >= 12n."""
    k = 3
    while 7 * k * k + 5 * k < 12 * n:
        k += 3
    return k


def bound_theorem2_simple(g: Graph) -> BoundReport:
    require_connected(g)
    k = theorem2_simple_k(g.n)
    pairs = _pair_peeling(spanning_tree(g, 0), k, 1)
    value = math.sqrt(12 * g.n / 7) + 3
    return report_from_assignment("thm2simple", g, value, pairs, k)


def theorem4_k(n: int, n2: int) -> int:
    """ceil(sqrt(n + n2 + 1/4) + 1/2), i.e. the least k >= 1 with k(k-1) >= n + n2."""
    k = 1
    while k * (k - 1) < n + n2:
        k += 1
    return k


def bound_theorem4(g: Graph) -> BoundReport:
    """Degree-2 accounting: peels keep their top vertex behind as a leaf."""
    t = rooted_tree(g, 0)
    n2 = sum(1 for v in range(g.n) if g.degree(v) == 2)
    k = theorem4_k(g.n, n2)
    pairs: list[tuple[int, int]] = []
    for d in range(k - 1, -1, -1):
        if t.height <= d:
            pairs.append((t.root, d))
            break
        x = find_height_vertex(t, d)
        pairs.append((x, d))
        t = remove_subtree(t, x, keep_root=True)
    else:
        raise AssertionError("degree-2 peeling did not finish")
    return report_from_assignment("thm4", g, k, pairs, k)
