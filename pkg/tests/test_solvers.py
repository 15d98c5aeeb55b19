import pytest
from hypothesis import given, settings

from oddthick import generators as gen
from oddthick.budget import Budget
from oddthick.coloring import odd_verdict
from oddthick.errors import BudgetExhausted, DomainError
from oddthick.graph import Graph
from oddthick.instances import EXAMPLE_GRAPH
from oddthick.solvers import chromatic_number, find_coloring, has_odd_coloring, odd_chromatic_number
from oracles import brute_chi
from strategies import graphs


class TestAgainstBruteForce:
    @settings(max_examples=80)
    @given(graphs(min_n=1, max_n=6))
    def test_chromatic_number(self, g):
        assert chromatic_number(g).k == brute_chi(g.n, g.edges(), odd=False)

    @settings(max_examples=80)
    @given(graphs(min_n=1, max_n=6))
    def test_odd_chromatic_number(self, g):
        res = odd_chromatic_number(g)
        assert res.k == brute_chi(g.n, g.edges(), odd=True)
        assert odd_verdict(g, res.witness).is_odd
        assert res.witness.palette_size == res.k

    @given(graphs(min_n=1, max_n=6))
    def test_lookahead_does_not_change_answers(self, g):
        assert odd_chromatic_number(g, lookahead=True).k == odd_chromatic_number(g).k

    @given(graphs(min_n=1, max_n=7))
    def test_odd_at_least_proper(self, g):
        assert odd_chromatic_number(g).k >= chromatic_number(g).k


class TestKnownValues:
    @pytest.mark.parametrize(
        "g, expected",
        [
            (gen.cycle(5), 5),
            (EXAMPLE_GRAPH, 4),
            (gen.cycle(4), 4),
            (gen.cycle(6), 3),
            (gen.cycle(7), 4),
            (gen.complete(4), 4),
            (gen.path(3), 3),
            (gen.path(2), 2),
            (Graph(3), 1),
        ],
    )
    def test_odd_chromatic_number(self, g, expected):
        assert odd_chromatic_number(g).k == expected

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_subdivided_complete(self, n):
        assert odd_chromatic_number(gen.star_subdivision(n)).k == n

    def test_subdivided_k2_is_a_path(self):
        assert odd_chromatic_number(gen.star_subdivision(2)).k == 3

    def test_join_c5_k6(self):
        assert chromatic_number(gen.join(gen.cycle(5), gen.complete(6))).k == 9

    def test_refuted_palettes_recorded(self):
        res = odd_chromatic_number(gen.cycle(5))
        # 2 fails already as a proper coloring
        assert res.refuted == (2, 3, 4)
        assert res.exact and res.lower == res.upper == 5

    def test_result_unpacks(self):
        k, witness = odd_chromatic_number(gen.cycle(5))
        assert k == 5 and witness.palette_size == 5

    def test_empty_graph_is_a_domain_error(self):
        with pytest.raises(DomainError):
            odd_chromatic_number(Graph(0))


class TestBudget:
    def test_exhaustion_gives_bounds(self):
        g = gen.star_subdivision(5)
        res = odd_chromatic_number(g, Budget(max_nodes=20))
        assert not res.exact and res.k is None
        assert res.lower <= 5 <= res.upper
        assert odd_verdict(g, res.witness).is_odd

    def test_decision_raises(self):
        with pytest.raises(BudgetExhausted):
            has_odd_coloring(gen.cycle(19), 3, Budget(max_nodes=5))

    def test_matching_bounds_need_no_search(self):
        res = odd_chromatic_number(gen.complete(9), Budget(max_nodes=1))
        assert res.exact and res.k == 9


class TestFindColoring:
    def test_isolated_vertices_get_color_one(self):
        g = Graph(4, [(0, 1)])
        assert find_coloring(g, 2)[2:] == [1, 1]

    def test_infeasible(self):
        assert find_coloring(gen.cycle(5), 4) is None

    def test_proper_mode(self):
        assert find_coloring(gen.cycle(5), 3, odd=False) is not None

    def test_has_odd_coloring_respects_palette(self):
        c = has_odd_coloring(gen.cycle(6), 3)
        assert c is not None and c.palette_size <= 3
