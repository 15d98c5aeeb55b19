import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oddthick import generators as gen
from oddthick.discharging import (
    apply_rule,
    count_threshold,
    initial_charges,
    largest_allowed_count,
    surplus_analysis,
    surplus_from_count,
    verify_certificate,
)
from oddthick.errors import DomainError
from oddthick.graph import Graph, girth
from oddthick.planarity import planar_embed
from oddthick.sampling import random_planar, random_planar_girth6
from oddthick.thickness import EdgePartition, thickness
from strategies import graphs


def single_layer(g):
    return [(g, planar_embed(g).embedding)]


def certify(g, t=None):
    part = thickness(g).certificate
    embs = [planar_embed(layer).embedding for layer in part.layers(g)]
    return verify_certificate(g, part, embs, t or part.t), part


class TestInitialCharges:
    def test_hexagon(self):
        ledger = initial_charges(single_layer(gen.cycle(6)))
        layer = ledger.layers[0]
        assert layer.faces == (0, 0)
        assert layer.vertices == (-2,) * 6
        assert layer.components == (6,)
        assert ledger.total() == -6

    def test_isolated_vertex(self):
        layer = initial_charges(single_layer(Graph(1))).layers[0]
        assert (layer.faces, layer.vertices, layer.components) == ((-6,), (-6,), (6,))

    @given(graphs(max_n=9))
    def test_every_planar_layer_sums_to_minus_six(self, g):
        res = planar_embed(g)
        if res.is_planar:
            assert initial_charges([(g, res.embedding)]).total() == -6

    def test_two_layers(self):
        g = gen.complete(6)
        part = thickness(g).certificate
        layers = [(h, planar_embed(h).embedding) for h in part.layers(g)]
        assert initial_charges(layers).total() == -12

    def test_mismatched_vertex_sets(self):
        with pytest.raises(DomainError):
            initial_charges(single_layer(gen.cycle(4)) + single_layer(gen.cycle(5)))

    def test_embedding_must_match_graph(self):
        with pytest.raises(DomainError):
            initial_charges([(gen.cycle(4), planar_embed(gen.path(4)).embedding)])


class TestRule:
    def test_hexagon_vertices_end_at_minus_two(self):
        g = gen.cycle(6)
        final = apply_rule(g, initial_charges(single_layer(g)), 1)
        assert [final.vertex_charge(v) for v in range(6)] == [-2] * 6
        assert final.total() == -6

    def test_regular_graph_is_untouched(self):
        # K7 is 6-regular, so no vertex is below 3t = 6
        g = gen.complete(7)
        part = thickness(g).certificate
        ledger = initial_charges([(h, planar_embed(h).embedding) for h in part.layers(g)])
        final = apply_rule(g, ledger, 2)
        assert final.layers == ledger.layers
        assert set(final.received) == {0}

    def test_star_leaves_receive_from_center(self):
        g = Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
        final = apply_rule(g, initial_charges(single_layer(g)), 1)
        assert final.received[1] == final.received[2] == 1
        assert final.sent[0] == 3  # to leaves 1, 2 and to vertex 3 (degree 2)
        assert final.received[0] == 0

    @given(st.integers(0, 10**6))
    def test_conservation(self, seed):
        g = random_planar(random.Random(seed))
        ledger = initial_charges(single_layer(g))
        for t in (1, 2, 3):
            final = apply_rule(g, ledger, t)
            assert final.total() == ledger.total() == -6
            # faces and components are untouched
            assert all(a.faces == b.faces and a.components == b.components
                       for a, b in zip(final.layers, ledger.layers))


class TestCertificate:
    def test_hexagon_report(self):
        report, _ = certify(gen.cycle(6))
        assert report.total_initial == report.total_final == -6
        assert report.face_violations == []
        assert [v["final"] for v in report.vertex_violations] == [-2] * 6
        assert report.girth_at_least_6 and report.min_degree_at_least_2t_minus_1

    def test_hexagonal_patch(self):
        g = gen.hexagonal_patch(3, 3)
        report, _ = certify(g)
        assert report.face_violations == []
        # vertices whose closed neighborhood is all cubic neither send nor receive
        interior = [v for v in range(g.n) if all(g.degree(w) == 3 for w in (v, *g.adj[v]))]
        assert interior
        bad = {v["vertex"] for v in report.vertex_violations}
        assert not bad & set(interior)

    def test_triangle_face_violation(self):
        report, _ = certify(gen.complete(4))
        assert len(report.face_violations) == 4
        assert not report.girth_at_least_6

    def test_single_edge_face_is_acyclic(self):
        report, _ = certify(gen.path(2))
        (face,) = report.face_violations
        assert face["degree"] == 2 and face["acyclic_boundary"]

    @given(st.integers(0, 10**6))
    def test_girth_six_faces_with_cycles_never_short(self, seed):
        g = random_planar_girth6(random.Random(seed))
        assert girth(g) >= 6
        report, _ = certify(g)
        assert report.total_final == report.total_initial == -6
        assert report.face_violations == []

    @given(graphs(max_n=8))
    def test_girth_six_invariant_on_arbitrary_graphs(self, g):
        report, part = certify(g)
        assert report.total_initial == report.total_final == -6 * part.t
        if report.girth_at_least_6:
            assert all(f["acyclic_boundary"] for f in report.face_violations)

    def test_padding_with_empty_layers(self):
        g = gen.cycle(6)
        report, _ = certify(g, t=3)
        assert report.total_initial == report.total_final == -18
        assert report.t == 3

    def test_t_below_class_count(self):
        g = gen.complete(6)
        part = thickness(g).certificate
        embs = [planar_embed(h).embedding for h in part.layers(g)]
        with pytest.raises(DomainError):
            verify_certificate(g, part, embs, 1)

    def test_invalid_partition(self):
        g = gen.cycle(4)
        bad = EdgePartition((((0, 1),),))
        with pytest.raises(DomainError, match="invalid partition"):
            verify_certificate(g, bad, [planar_embed(Graph(4, [(0, 1)])).embedding], 1)

    def test_json_report(self):
        report, _ = certify(gen.cycle(6))
        doc = report.to_json()
        assert doc["S"] == doc["S_star"] == -6
        assert doc["easy_union_depth"] == {"used_by_argument": 1, "largest_with_k_ge_4n_plus_2": 1}


class TestSurplus:
    def test_thresholds(self):
        assert count_threshold(1) is None
        assert count_threshold(2) == 4
        assert count_threshold(3) == 3
        assert count_threshold(4) == Fraction(8, 3)

    def test_largest_counts(self):
        assert largest_allowed_count(2) == 3
        assert all(largest_allowed_count(t) == 2 for t in range(3, 50))

    @given(st.integers(2, 200))
    def test_largest_count_is_strictly_below(self, t):
        c = largest_allowed_count(t)
        assert c < Fraction(2 * t, t - 1) <= c + 1

    @pytest.mark.parametrize("t, count, applies", [(2, 3, True), (3, 2, True), (2, 4, False), (1, 0, None)])
    def test_from_count(self, t, count, applies):
        assert surplus_from_count(t, count).applies is applies

    def test_aggregate_bound(self):
        r = surplus_from_count(2, 3, {0: 2, 1: 3, 2: 3})
        assert r.deficit_bounds == {0: -6, 1: -3, 2: -3}
        assert r.aggregate_bound == -18

    def test_from_report(self):
        report, _ = certify(gen.cycle(6), t=2)
        r = surplus_analysis(report, 2)
        assert r.low_vertices == tuple(range(6))
        assert r.applies is False
