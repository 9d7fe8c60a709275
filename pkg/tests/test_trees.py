import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burning.errors import DisconnectedGraphError, NotATreeError
from burning.exact import burning_number_exact
from burning.generators import path, random_connected, random_tree, star
from burning.graph import Graph, parse_graph, remove_subtree, rooted_tree
from burning.trees import (
    bound_corollary1,
    bound_theorem2,
    bound_theorem2_simple,
    bound_theorem4,
    corollary1_k,
    cover_with_radii,
    peel_pair,
    peel_single,
    theorem2_formula,
    theorem2_params,
    theorem2_simple_k,
    theorem4_k,
)

from conftest import graphs, trees


def covered_by(t, pairs):
    out = set()
    for c, r in pairs:
        out |= t.ball(c, r)
    return out


class TestPeelSingle:
    def test_path5(self):
        p = peel_single(rooted_tree(path(5)), 1)
        assert p.pairs == ((3, 1),) and p.removed == {3, 4} and not p.complete

    def test_whole_tree(self):
        p = peel_single(rooted_tree(path(5)), 4)
        assert p.complete and p.pairs == ((0, 4),) and p.rest.is_empty()

    def test_path6(self):
        p = peel_single(rooted_tree(path(6)), 2)
        assert p.pairs == ((3, 2),) and p.removed == {3, 4, 5}

    def test_errors(self):
        t = rooted_tree(path(3))
        with pytest.raises(ValueError):
            peel_single(t, -1)
        with pytest.raises(ValueError):
            peel_single(remove_subtree(t, 0), 0)

    @given(trees(max_n=40), st.data())
    @settings(max_examples=150)
    def test_guarantee(self, g, data):
        t = rooted_tree(g)
        d = data.draw(st.integers(0, t.height + 1))
        p = peel_single(t, d)
        (x, r), = p.pairs
        assert r == d
        assert p.removed | p.rest.alive == t.alive and not p.removed & p.rest.alive
        if p.complete:
            assert t.ball(x, d) == t.alive
        else:
            assert len(p.removed) >= d + 1
            assert p.removed <= t.ball(x, d)


class TestPeelPair:
    def test_path10(self):
        p = peel_pair(rooted_tree(path(10)), 1, 2)
        assert p.pairs == ((8, 1), (4, 2))
        assert p.removed == set(range(4, 10))

    def test_path4_complete(self):
        p = peel_pair(rooted_tree(path(4)), 1, 2)
        assert p.complete
        assert covered_by(rooted_tree(path(4)), p.pairs) == set(range(4))

    def test_bad_radii(self):
        with pytest.raises(ValueError):
            peel_pair(rooted_tree(path(10)), 2, 2)
        with pytest.raises(ValueError):
            peel_pair(rooted_tree(path(10)), 0, 3)

    @given(trees(max_n=60), st.data())
    @settings(max_examples=150)
    def test_guarantee(self, g, data):
        t = rooted_tree(g)
        d1 = data.draw(st.integers(1, 6))
        d2 = data.draw(st.integers(-(-3 * d1 // 2), 12))
        p = peel_pair(t, d1, d2)
        assert p.removed | p.rest.alive == t.alive
        if p.complete:
            assert covered_by(t, p.pairs) == t.alive
        else:
            (c1, r1), (c2, r2) = p.pairs
            assert (r1, r2) == (d1, d2)
            assert len(p.removed) >= -(-3 * d1 // 2) + d2 + 2
            assert p.removed <= t.ball(c1, d1) | t.ball(c2, d2)


class TestCoverWithRadii:
    def test_path6(self):
        assert cover_with_radii(rooted_tree(path(6)), (2, 1, 0)) == ((3, 2), (1, 1), (0, 0))

    def test_path3(self):
        assert cover_with_radii(rooted_tree(path(3)), (2,)) == ((0, 2),)

    def test_insufficient(self):
        with pytest.raises(ValueError):
            cover_with_radii(rooted_tree(path(9)), (2, 1, 0))

    @given(trees(max_n=15))
    @settings(max_examples=60)
    def test_totality_over_radius_multisets(self, g):
        t = rooted_tree(g)
        for k in range(1, 5):
            for radii in itertools.combinations_with_replacement(range(g.n), k):
                if sum(d + 1 for d in radii) < g.n:
                    continue
                pairs = cover_with_radii(t, radii)
                assert covered_by(t, pairs) == t.alive


class TestArithmetic:
    @pytest.mark.parametrize("n, k", [(1, 1), (2, 2), (3, 2), (6, 3), (10, 4), (11, 5)])
    def test_triangular_k(self, n, k):
        assert corollary1_k(n) == k
        assert k == math.ceil(math.sqrt(2 * n + 0.25) - 0.5)

    def test_level_params(self):
        p = theorem2_params(100, Fraction(1, 10))
        assert (p.ell, p.k) == (1, 15)
        p = theorem2_params(100, 0.5)
        assert (p.ell, p.k) == (0, 19)

    @pytest.mark.parametrize("eps", [0, 1, 1.5, -0.1])
    def test_epsilon_range(self, eps):
        with pytest.raises(ValueError):
            theorem2_params(10, eps)

    def test_real_formula(self):
        assert theorem2_formula(100, Fraction(1, 10)) == pytest.approx(17.45, abs=0.01)

    @pytest.mark.parametrize("n, k", [(100, 15), (7, 6), (1, 3), (4, 3)])
    def test_simple_k(self, n, k):
        assert theorem2_simple_k(n) == k

    @pytest.mark.parametrize("n, n2, k", [(9, 7, 5), (6, 0, 3), (2, 0, 2), (1, 0, 2)])
    def test_degree_two_k(self, n, n2, k):
        assert theorem4_k(n, n2) == k
        assert k == math.ceil(math.sqrt(n + n2 + 0.25) + 0.5)

    @pytest.mark.parametrize("i", range(1, 20))
    def test_pair_peel_k_below_formula(self, i):
        """k stays below the real-valued formula for every n up to 10^4."""
        eps = Fraction(i, 20)
        ell = 0
        while 19 * eps * 9 ** ell < 3:
            ell += 1
        step = 3 ** ell
        k = step
        num, den = eps.numerator, eps.denominator
        for n in range(1, 10_001):
            # (1 - eps)(19k^2 + 12k) >= 32n with denominators cleared
            while (den - num) * (19 * k * k + 12 * k) < 32 * n * den:
                k += step
            assert k <= theorem2_formula(n, eps) + 1e-9
            if n % 97 == 1:
                assert theorem2_params(n, eps).k == k


class TestBounds:
    def test_triangular_examples(self):
        assert bound_corollary1(path(1)).k_achieved == 1
        r = bound_corollary1(path(10))
        assert r.formula_value == 4 and r.ok

    def test_pair_peel_random_tree(self):
        r = bound_theorem2(random_tree(100, 3), Fraction(1, 10))
        assert r.ok and r.k_achieved <= 15

    def test_pair_peel_path9(self):
        r = bound_theorem2(path(9), Fraction(1, 2))
        assert r.covering_ok and r.k_achieved <= theorem2_params(9, 0.5).k

    def test_pair_peel_single_vertex(self):
        assert bound_theorem2(path(1), 0.3).k_achieved == 1
        assert bound_theorem2_simple(path(1)).k_achieved == 1

    def test_one_level_value(self):
        r = bound_theorem2_simple(random_tree(100, 1))
        assert r.formula_value == pytest.approx(16.09, abs=0.01) and r.ok

    def test_degree_two_bound(self):
        assert bound_theorem4(path(9)).formula_value == 5
        assert bound_theorem4(star(5)).ok
        assert bound_theorem4(path(2)).k_achieved <= 2

    def test_degree_two_rejects_cycle(self):
        with pytest.raises(NotATreeError):
            bound_theorem4(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            bound_corollary1(parse_graph("p 3 1\n0 1\n"))

    def test_general_graph_via_spanning_tree(self):
        g = random_connected(50, 30, 5)
        for r in (bound_corollary1(g), bound_theorem2(g, 0.2), bound_theorem2_simple(g)):
            assert r.ok

    @given(trees(max_n=25), st.sampled_from([Fraction(1, 10), Fraction(1, 2), Fraction(9, 10)]))
    @settings(max_examples=80, deadline=None)
    def test_reports_valid_and_not_below_exact(self, g, eps):
        b = burning_number_exact(g)[0]
        for r in (bound_corollary1(g), bound_theorem2(g, eps), bound_theorem2_simple(g),
                  bound_theorem4(g)):
            assert r.ok, r
            assert r.k_achieved >= b

    @given(graphs(min_n=1, max_n=25, connected=True))
    @settings(max_examples=40, deadline=None)
    def test_connected_graphs(self, g):
        for r in (bound_corollary1(g), bound_theorem2_simple(g)):
            assert r.ok
