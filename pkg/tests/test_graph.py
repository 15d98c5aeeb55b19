from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given

from oddthick import generators as gen
from oddthick.errors import DomainError, ParameterError
from oddthick.graph import ACYCLIC, Graph, degree_stats, girth
from strategies import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(ParameterError, match="self-loop"):
            Graph(3, [(1, 1)])

    def test_rejects_duplicate_in_either_orientation(self):
        with pytest.raises(ParameterError, match="duplicate"):
            Graph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ParameterError):
            Graph(2, [(0, 2)])

    def test_empty_graph(self):
        g = Graph(0)
        assert g.m == 0 and g.edges() == ()

    @given(graphs())
    def test_masks_roundtrip(self, g):
        assert Graph.from_masks(g.masks) == g

    @given(graphs())
    def test_handshake(self, g):
        assert sum(g.degrees()) == 2 * g.m


class TestDegreeStats:
    def test_cycle(self):
        s = degree_stats(gen.cycle(5))
        assert (s.min_degree, s.max_degree, s.average_degree) == (2, 2, 2)

    def test_average_is_exact(self):
        s = degree_stats(gen.path(3))
        assert s.average_degree == Fraction(4, 3)

    def test_empty_graph_is_a_domain_error(self):
        with pytest.raises(DomainError):
            degree_stats(Graph(0))


class TestGirth:
    @pytest.mark.parametrize("n", [3, 4, 5, 9])
    def test_cycles(self, n):
        assert girth(gen.cycle(n)) == n

    def test_forest_is_acyclic(self):
        assert girth(gen.path(6)) is ACYCLIC
        assert girth(Graph(4)) is ACYCLIC

    def test_acyclic_sorts_above_integers(self):
        assert ACYCLIC > 10**9 and ACYCLIC >= 6

    def test_petersen(self):
        g = Graph(10, nx.petersen_graph().edges())
        assert girth(g) == 5

    @given(graphs(max_n=8))
    def test_matches_networkx(self, g):
        expected = nx.girth(to_nx(g))
        got = girth(g)
        if expected == float("inf"):
            assert got is ACYCLIC
        else:
            assert got == expected


class TestDerived:
    def test_contract_merges_into_smaller_label(self):
        g = gen.cycle(4).contract_edge(0, 1)
        assert g.n == 3 and g.m == 3

    def test_contract_drops_parallel_edges(self):
        g = gen.complete(3).contract_edge(1, 2)
        assert g.n == 2 and g.edges() == ((0, 1),)

    def test_contract_requires_edge(self):
        with pytest.raises(ParameterError):
            gen.path(3).contract_edge(0, 2)

    @given(graphs(min_n=1))
    def test_induced_labels(self, g):
        keep = [v for v in range(g.n) if v % 2 == 0]
        sub, labels = g.induced(keep)
        assert labels == keep
        for i, j in sub.edges():
            assert g.has_edge(labels[i], labels[j])
        assert sub.m == sum(1 for u, v in g.edges() if u in keep and v in keep)

    @given(graphs())
    def test_components_match_networkx(self, g):
        ours = sorted(map(tuple, g.components()))
        theirs = sorted(tuple(sorted(c)) for c in nx.connected_components(to_nx(g)))
        assert ours == theirs


class TestGenerators:
    def test_complete(self):
        assert gen.complete(6).m == 15

    def test_multipartite(self):
        g = gen.complete_multipartite([3, 3])
        assert g.m == 9 and nx.is_bipartite(to_nx(g))

    def test_join_c5_k6(self):
        g = gen.join(gen.cycle(5), gen.complete(6))
        assert (g.n, g.m) == (11, 5 + 15 + 30)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_star_subdivision_shape(self, n):
        g = gen.star_subdivision(n)
        pairs = n * (n - 1) // 2
        assert (g.n, g.m) == (n + pairs, 2 * pairs)
        assert all(g.degree(v) == n - 1 for v in range(n))
        assert all(g.degree(v) == 2 for v in range(n, g.n))

    def test_hexagonal_patch_is_cubic_inside(self):
        g = gen.hexagonal_patch(3, 3)
        assert max(g.degrees()) == 3 and girth(g) == 6

    def test_generate_dispatch(self):
        assert gen.generate("join", [5, 6]) == gen.join(gen.cycle(5), gen.complete(6))

    def test_generate_rejects_arity(self):
        with pytest.raises(ParameterError):
            gen.generate("cycle", [3, 4])

    def test_generate_rejects_unknown_kind(self):
        with pytest.raises(ParameterError, match="unknown"):
            gen.generate("wheel", [5])
