from __future__ import annotations

import pytest
from hypothesis import strategies as st

from burning.generators import prufer_decode
from burning.graph import Graph


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 20) -> Graph:
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        return path_graph(n)
    code = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return Graph.from_edges(n, prufer_decode(code, n))


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 12, connected: bool = False) -> Graph:
    """Random simple graphs; with ``connected`` a random tree plus chords."""
    if connected:
        base = draw(trees(min_n, max_n))
        n = base.n
        edges = set(base.edges)
    else:
        n = draw(st.integers(min_n, max_n))
        edges = set()
    if n >= 2:
        pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
        for u, v in draw(st.lists(pairs, max_size=2 * n)):
            if u != v:
                edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, edges)


def binary_shapes(max_height: int) -> list[tuple]:
    """Every unordered rooted binary tree of height <= max_height, as nested tuples."""
    shapes = [()]
    for _ in range(max_height):
        kids = list(shapes)
        grown = [()]
        grown += [(c,) for c in kids]
        grown += [(a, b) for i, a in enumerate(kids) for b in kids[i:]]
        shapes = grown
    return shapes


def shape_height(shape: tuple) -> int:
    return 1 + max(map(shape_height, shape)) if shape else 0


def shape_graph(shape: tuple) -> Graph:
    """Label the shape in BFS order with the root as 0."""
    edges = []
    queue = [(shape, 0)]
    nxt = 1
    for node, v in queue:
        for child in node:
            edges.append((v, nxt))
            queue.append((child, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance(request):
    """Call with (number, title, passed, detail) to log one criterion line."""

    def record(number: int, title: str, passed: bool, detail: str = "") -> None:
        line = f"[{'PASS' if passed else 'FAIL'}] {number:>2}. {title}" + (f" ({detail})" if detail else "")
        print(line)
        request.config._acceptance_lines.append(line)

    return record
