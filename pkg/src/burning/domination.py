"""Distance-k domination on trees and the bounds built from it."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, RootedTree, graph_metrics, require_connected, rooted_tree, spanning_tree
from .paths import ceil_sqrt
from .report import BoundReport, report_from_assignment


@dataclass(frozen=True)
class DominationCertificate:
    k: int
    set: frozenset[int]
    covered: bool


def dominate_rooted(t: RootedTree, k: int) -> list[int]:
    """Greedy distance-k dominating set, centers in order of selection.

    Takes the deepest uncovered vertex (lowest id on ties), climbs ``k``
    levels (stopping at the root) and marks that vertex's whole k-ball as
    covered.  This greedy is optimal on trees, hence meets the n/(k+1) bound.
    """
    uncovered = set(t.alive)
    by_depth = sorted(t.alive, key=lambda v: (-t.depth[v], v))
    chosen: list[int] = []
    for leaf in by_depth:
        if leaf not in uncovered:
            continue
        v = leaf
        for _ in range(k):
            if t.parent[v] is None:
                break
            v = t.parent[v]
        chosen.append(v)
        uncovered -= t.ball(v, k)
    return chosen


def distance_dominating_set(g: Graph, k: int) -> DominationCertificate:
    if k < 0:
        raise ValueError("k must be non-negative")
    t = rooted_tree(g, 0)
    chosen = dominate_rooted(t, k)
    covered = set()
    for v in chosen:
        covered |= g.ball(v, k)
    return DominationCertificate(k, frozenset(chosen), len(covered) == g.n)


def bound_domination(g: Graph, k: int | None = None) -> BoundReport:
    """Dominating centers get radii ``k + gamma - 1 .. k``; ``k`` filler slots follow."""
    require_connected(g)
    default = k is None
    if default:
        k = ceil_sqrt(g.n) - 1
    if k < 0:
        raise ValueError("k must be non-negative")
    centers = sorted(dominate_rooted(spanning_tree(g, 0), k))
    gamma = len(centers)
    length = gamma + k
    pairs = [(c, length - 1 - i) for i, c in enumerate(centers)]
    if default:
        value = 2 * ceil_sqrt(g.n) - 1
    else:
        value = max(1, g.n // (k + 1)) + k
    return report_from_assignment("mm", g, value, pairs, length)


def bound_radius(g: Graph) -> BoundReport:
    require_connected(g)
    _, rad, center = graph_metrics(g)
    rad = int(rad)
    return report_from_assignment("radius", g, rad + 1, [(center, rad)], rad + 1)
