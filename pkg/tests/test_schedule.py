import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burning.errors import ContractError
from burning.generators import path, star
from burning.graph import Graph, parse_graph
from burning.schedule import (
    assignment_to_schedule,
    repair,
    schedule_json,
    simulate,
    verify_burning,
    verify_covering,
)

from conftest import graphs

two_isolated = parse_graph("p 2 0\n")


@st.composite
def graph_and_schedule(draw, max_n=12):
    g = draw(graphs(max_n=max_n))
    s = draw(st.lists(st.integers(0, g.n - 1), min_size=1, max_size=g.n + 1))
    return g, tuple(s)


@st.composite
def graph_and_covering(draw, max_n=12):
    """A covering schedule obtained by appending uncovered vertices until none remain."""
    g, s = draw(graph_and_schedule(max_n))
    s = list(s)
    while True:
        ok, missed = verify_covering(g, s)
        if ok:
            return g, tuple(s)
        s.append(min(missed))


class TestSimulate:
    def test_one_spread_step(self):
        assert simulate(path(3), (1, 0)).burn_time == (2, 1, 2)

    def test_single_step(self):
        trace = simulate(path(3), (0,))
        assert trace.burn_time == (1, None, None)
        assert trace.unburned == [1, 2]

    def test_isolated(self):
        assert simulate(two_isolated, (0, 1)).burn_time == (1, 2)

    @given(graph_and_schedule())
    def test_trace_invariants(self, gs):
        g, s = gs
        trace = simulate(g, s)
        for i, x in enumerate(s, start=1):
            assert trace.burn_time[x] <= i
        for v, t in enumerate(trace.burn_time):
            if t is not None and t > 1 and (t > len(s) or s[t - 1] != v):
                assert any(trace.burn_time[w] is not None and trace.burn_time[w] <= t - 1
                           for w in g.neighbors(v))

    @given(graph_and_schedule())
    @settings(max_examples=300)
    def test_simulation_agrees_with_covering(self, gs):
        g, s = gs
        assert verify_covering(g, s)[0] == simulate(g, s).all_burned()


class TestVerify:
    def test_covering_examples(self):
        assert verify_covering(path(3), (1, 0)) == (True, set())
        assert verify_covering(path(3), (1,)) == (False, {0, 2})
        assert verify_covering(path(9), (2, 6, 8)) == (True, set())

    def test_burning_examples(self):
        assert verify_burning(path(3), (1, 0)) == (True, None)
        ok, why = verify_burning(path(3), (1, 1))
        assert not ok and why.kind == "too_close" and (why.i, why.j) == (1, 2)
        assert why.distance == 0
        assert verify_burning(path(9), (2, 6, 8))[0]

    def test_uncovered_reported(self):
        ok, why = verify_burning(path(3), (1,))
        assert not ok and why.kind == "uncovered" and why.vertex == 0

    def test_disconnected_centers_far_apart(self):
        assert verify_burning(two_isolated, (0, 1))[0]

    def test_invalid_entry(self):
        with pytest.raises(ValueError):
            verify_covering(path(3), (5,))
        with pytest.raises(ValueError):
            verify_covering(path(3), ())

    @given(graph_and_schedule())
    def test_burning_implies_covering(self, gs):
        g, s = gs
        if verify_burning(g, s)[0]:
            assert verify_covering(g, s)[0]

    def test_json(self):
        assert schedule_json(path(3), (1, 1)) == {
            "k": 2, "sequence": [1, 1], "valid_covering": True, "valid_burning": False}


class TestRepair:
    def test_replaces_duplicate(self):
        assert repair(path(3), (1, 1)) == (1, 0)

    def test_valid_untouched(self):
        assert repair(path(3), (1, 0)) == (1, 0)

    def test_star(self):
        assert repair(star(3), (0, 0)) == (0, 1)

    def test_truncates_when_prefix_covers(self):
        # once the prefix covers everything, the conflicting tail is dropped
        assert repair(path(3), (1, 1, 1)) == (1, 0)
        assert repair(path(5), (2, 2, 2)) == (2, 0, 4)
        assert repair(path(1), (0, 0, 0)) == (0,)

    def test_requires_covering(self):
        with pytest.raises(ContractError):
            repair(path(3), (1,))

    @given(graph_and_covering())
    @settings(max_examples=300)
    def test_repair_is_legal_and_not_longer(self, gc):
        g, s = gc
        fixed = repair(g, s)
        assert verify_burning(g, fixed)[0]
        assert len(fixed) <= len(s)

    @given(graphs(max_n=10), st.data())
    def test_covering_survives_added_edges(self, h, data):
        """A covering of a spanning subgraph covers the supergraph too."""
        s = tuple(data.draw(st.lists(st.integers(0, h.n - 1), min_size=1, max_size=h.n)))
        extra = data.draw(st.lists(st.tuples(st.integers(0, h.n - 1), st.integers(0, h.n - 1)),
                                   max_size=5))
        g = Graph.from_edges(h.n, set(h.edges) | {(min(u, v), max(u, v)) for u, v in extra if u != v})
        if verify_covering(h, s)[0]:
            assert verify_covering(g, s)[0]


class TestAssignment:
    def test_direct_placement(self):
        assert assignment_to_schedule([(4, 2), (1, 1), (0, 0)], 3) == (4, 1, 0)

    def test_filled_and_repaired(self):
        s = assignment_to_schedule([(6, 3), (1, 2)], 4, path(9))
        assert s[:2] == (6, 1) and len(s) == 4
        assert verify_burning(path(9), s)[0]
        # fillers 0, 2 go into slots 3, 4; repair swaps slot 4 for vertex 3
        assert s == (6, 1, 0, 3)

    def test_single(self):
        assert assignment_to_schedule([(0, 0)], 1) == (0,)

    def test_duplicate_radius(self):
        with pytest.raises(ValueError, match="duplicate"):
            assignment_to_schedule([(0, 1), (2, 1)], 3)

    def test_radius_too_large(self):
        with pytest.raises(ValueError):
            assignment_to_schedule([(0, 3)], 3)

    def test_holes_without_graph(self):
        with pytest.raises(ValueError):
            assignment_to_schedule([(0, 2)], 3)

    def test_single_vertex_reuses_zero(self):
        assert assignment_to_schedule([(0, 2)], 3, path(1)) == (0,)
