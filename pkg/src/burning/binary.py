"""Binary trees of depth r whose burning number reaches r + 1.

A binary tree of depth r is extremal exactly when it has no leaf above
depth r and no single-child vertex above depth r - 1; equivalently it
contains, anchored at its root, the perfect binary tree of depth r - 1
with one extra leaf hung below each of its leaves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractError, NotBinaryError
from .graph import Graph, RootedTree, rooted_tree
from .schedule import Schedule, assignment_to_schedule


def build_tr(r: int) -> tuple[Graph, RootedTree]:
    """The extremal tree for depth ``r``: 3 * 2**(r-1) - 1 vertices, rooted at 0.

    Vertices 0..2**r - 2 form a heap-ordered perfect binary tree of depth
    r - 1; each of its leaves gets one more child, numbered left to right.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    core = 2 ** r - 1
    edges = [((v - 1) // 2, v) for v in range(1, core)]
    first_leaf = 2 ** (r - 1) - 1
    for i, leaf in enumerate(range(first_leaf, core)):
        edges.append((leaf, core + i))
    g = Graph.from_edges(core + 2 ** (r - 1), edges)
    return g, rooted_tree(g, 0)


def as_binary(g: Graph, root: int = 0) -> RootedTree:
    t = rooted_tree(g, root)
    for v in range(g.n):
        if len(t.children[v]) > 2:
            raise NotBinaryError(f"vertex {v} has {len(t.children[v])} children")
    return t


@dataclass(frozen=True)
class Classification:
    extremal: bool
    witness: int | None = None
    reason: str | None = None  # "shallow_leaf" or "single_child"


def _shallow_leaf(t: RootedTree, r: int) -> int | None:
    leaves = [v for v in t.alive if not t.alive_children(v) and t.depth[v] < r]
    return min(leaves, key=lambda v: (t.depth[v], v)) if leaves else None


def _single_child(t: RootedTree, r: int) -> int | None:
    lone = [v for v in t.alive if len(t.alive_children(v)) == 1 and t.depth[v] < r - 1]
    return min(lone, key=lambda v: (t.depth[v], v)) if lone else None


def classify_binary(t: RootedTree, r: int) -> Classification:
    if t.height != r:
        raise ValueError(f"tree has depth {t.height}, not {r}")
    for v in t.alive:
        if len(t.alive_children(v)) > 2:
            raise NotBinaryError(f"vertex {v} has more than two children")
    leaf = _shallow_leaf(t, r)
    if leaf is not None:
        return Classification(False, leaf, "shallow_leaf")
    lone = _single_child(t, r)
    if lone is not None:
        return Classification(False, lone, "single_child")
    return Classification(True)


def burn_binary_nonextremal(g: Graph, t: RootedTree, r: int) -> Schedule:
    """Burning schedule of length at most ``r`` for a non-extremal tree.

    Walk from the root towards a leaf of depth below r, placing the sibling
    of each path vertex at the matching position.  If a path vertex has a
    single child (or there is no shallow leaf at all), the shallowest such
    vertex ``x`` stands in for a virtual leaf hung below it: its real child
    takes the next position and ``x`` itself takes the last one.
    """
    verdict = classify_binary(t, r)
    if verdict.extremal:
        raise ContractError("tree is extremal; no schedule of length r exists")

    if verdict.reason == "shallow_leaf":
        path = t.path_to_root(verdict.witness)[::-1]
        lone_on_path = [u for u in path[:-1] if len(t.alive_children(u)) == 1]
        anchor = lone_on_path[0] if lone_on_path else None
    else:
        anchor = verdict.witness
        path = t.path_to_root(anchor)[::-1]

    pairs: list[tuple[int, int]] = []
    if anchor is None:
        # every vertex on the root-to-leaf path branches
        for i in range(1, len(path)):
            (sib,) = [c for c in t.alive_children(path[i - 1]) if c != path[i]]
            pairs.append((sib, r - i))
        pairs.append((path[-1], 0))
    else:
        j = t.depth[anchor]
        path = path[: j + 1]
        for i in range(1, j + 1):
            (sib,) = [c for c in t.alive_children(path[i - 1]) if c != path[i]]
            pairs.append((sib, r - i))
        (child,) = t.alive_children(anchor)
        pairs.append((child, r - j - 1))
        pairs.append((anchor, 0))
    return assignment_to_schedule(pairs, r, g)
