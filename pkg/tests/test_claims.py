import json

import pytest

from oddthick.claims import CONFIRMED, MISMATCH, REFUTED, REGISTRY, SKIPPED, TIERS, run_claims


@pytest.fixture(scope="module")
def smoke(tmp_path_factory):
    out = tmp_path_factory.mktemp("claims")
    return out, run_claims("smoke", out)


def test_one_result_per_claim(smoke):
    _, results = smoke
    assert [r.claim_id for r in results] == list(REGISTRY)


def test_nothing_refuted(smoke):
    _, results = smoke
    assert not [r.claim_id for r in results if r.status == REFUTED]


def test_known_mismatches(smoke):
    _, results = smoke
    status = {r.claim_id: r.status for r in results}
    assert status["chi_o_subdivided_complete_n2"] == MISMATCH
    assert status["subdivided_complete_girth"] == MISMATCH
    assert status["easy_depth_in_range"] == MISMATCH


def test_deep_only_claims_skip(smoke):
    _, results = smoke
    status = {r.claim_id: r.status for r in results}
    assert status["c5_join_k6_biplanar"] == SKIPPED
    assert status["k9_not_biplanar"] == SKIPPED


def test_core_values_confirmed(smoke):
    _, results = smoke
    status = {r.claim_id: r.status for r in results}
    for cid in ("odd_coloring_table", "chi_o_c5", "chi_o_example_graph", "c5_odd_4_critical", "surplus_thresholds"):
        assert status[cid] == CONFIRMED


def test_evidence_files(smoke):
    out, results = smoke
    for r in results:
        doc = json.loads(open(r.evidence).read())
        assert doc["claim_id"] == r.claim_id and doc["status"] == r.status
    assert (out / "claims.csv").read_text().count("\n") == len(results) + 1


def test_reports_reproducible_apart_from_timestamp(tmp_path):
    a = run_claims("smoke", tmp_path / "a", only=["chi_o_c5", "girth6_planar_odd6", "extend_edge_pair"])
    b = run_claims("smoke", tmp_path / "b", only=["chi_o_c5", "girth6_planar_odd6", "extend_edge_pair"])
    for x, y in zip(a, b):
        dx, dy = json.loads(open(x.evidence).read()), json.loads(open(y.evidence).read())
        dx.pop("timestamp")
        dy.pop("timestamp")
        assert dx == dy


def test_truncation_maps_to_skipped(tmp_path, monkeypatch):
    from oddthick import claims

    monkeypatch.setitem(claims.TIERS, "tiny", claims.Tier("tiny", 6, 5, 5, 5, seconds=10, max_nodes=2))
    results = run_claims("tiny", tmp_path, only=["chi_o_c5", "chi_o_subdivided_complete"])
    assert [r.status for r in results] == [SKIPPED] * 2


def test_tiers_are_ordered():
    assert TIERS["smoke"].samples < TIERS["desk"].samples < TIERS["deep"].samples
