"""Registry of checkable statements about odd coloring and thickness, run at a budget tier.

Statuses: ``confirmed`` (computed and agrees), ``refuted`` (computed and
disagrees: a bug or a genuine counterexample), ``mismatch`` (a stated value
differs from the computed one in a known, documented way) and
``skipped-budget`` (the computation was truncated, so nothing is claimed).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable

from . import generators as gen
from .budget import Budget
from .canonical import connected_graphs
from .coloring import odd_verdict
from .critical import is_odd_k_critical, is_odd_k_minor_critical, search_critical
from .discharging import largest_allowed_count
from .errors import BudgetExhausted, LemmaTraceError
from .extension import extend_after_edge_pair_deletion, extend_after_vertex_deletion, n_easy_recolor
from .formats import to_graph6
from .graph import degree_stats, girth
from .instances import EXAMPLE_GRAPH, EXAMPLE_NOT_ODD, EXAMPLE_NOT_ODD_TABLE, EXAMPLE_ODD, EXAMPLE_ODD_TABLE
from .sampling import (
    edge_pair_instance,
    n_easy_instance,
    random_planar,
    random_planar_girth6,
    vertex_deletion_instance,
)
from .solvers import chromatic_number, has_odd_coloring, odd_chromatic_number
from .thickness import thickness, thickness_lower_bound

CONFIRMED = "confirmed"
REFUTED = "refuted"
MISMATCH = "mismatch"
SKIPPED = "skipped-budget"


@dataclass(frozen=True)
class Tier:
    name: str
    star_max: int
    corpus_n: int
    samples: int
    extension_samples: int
    seconds: float
    deep: bool = False
    max_nodes: int | None = None


TIERS = {
    "smoke": Tier("smoke", star_max=4, corpus_n=5, samples=40, extension_samples=100, seconds=10),
    "desk": Tier("desk", star_max=6, corpus_n=6, samples=500, extension_samples=1000, seconds=120),
    "deep": Tier("deep", star_max=6, corpus_n=6, samples=2000, extension_samples=5000, seconds=1800, deep=True),
}


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    status: str
    evidence: str


Outcome = tuple[str, dict]
REGISTRY: dict[str, tuple[str, Callable[[Tier, int], Outcome]]] = {}


def claim(claim_id: str, statement: str):
    def deco(fn: Callable[[Tier, int], Outcome]):
        REGISTRY[claim_id] = (statement, fn)
        return fn

    return deco


def _budget(tier: Tier) -> Budget:
    return Budget(max_nodes=tier.max_nodes, max_seconds=tier.seconds)


# ---------------------------------------------------------------------------
# coloring
# ---------------------------------------------------------------------------


@claim("odd_coloring_table", "odd color sets and star colors of the two example colorings")
def _table(tier: Tier, seed: int) -> Outcome:
    bad = []
    cases = (("odd", EXAMPLE_ODD, EXAMPLE_ODD_TABLE, True), ("not_odd", EXAMPLE_NOT_ODD, EXAMPLE_NOT_ODD_TABLE, False))
    for name, phi, table, want_odd in cases:
        v = odd_verdict(EXAMPLE_GRAPH, phi)
        if v.is_odd != want_odd or not v.is_proper:
            bad.append(f"{name}: verdict odd={v.is_odd}")
        for i, (odd, star) in enumerate(table):
            if set(v.odd_sets[i]) != odd:
                bad.append(f"{name} v{i + 1}: odd set {sorted(v.odd_sets[i])} != {sorted(odd)}")
            if len(odd) == 1 and v.stars[i] != star:
                bad.append(f"{name} v{i + 1}: star {v.stars[i]} != {star}")
            if odd and v.stars[i] not in odd:
                bad.append(f"{name} v{i + 1}: star outside odd set")
    v2 = odd_verdict(EXAMPLE_GRAPH, EXAMPLE_NOT_ODD)
    if sorted(v2.failing_parity) != [2]:
        bad.append(f"second coloring fails at {sorted(v2.failing_parity)}, expected vertex 2 only")
    return (REFUTED if bad else CONFIRMED), {"problems": bad}


def _exact_chi_o(g, tier: Tier):
    res = odd_chromatic_number(g, _budget(tier))
    return res


@claim("chi_o_c5", "the 5-cycle has odd chromatic number 5")
def _c5(tier: Tier, seed: int) -> Outcome:
    res = _exact_chi_o(gen.cycle(5), tier)
    if not res.exact:
        return SKIPPED, {"lower": res.lower}
    return (CONFIRMED if res.k == 5 else REFUTED), {"computed": res.k, "witness": list(res.witness.colors)}


@claim("chi_o_example_graph", "the 7-vertex example graph has odd chromatic number 4")
def _example_graph(tier: Tier, seed: int) -> Outcome:
    res = _exact_chi_o(EXAMPLE_GRAPH, tier)
    if not res.exact:
        return SKIPPED, {"lower": res.lower}
    return (CONFIRMED if res.k == 4 else REFUTED), {"computed": res.k, "witness": list(res.witness.colors)}


@claim("chi_join_c5_k6", "the join of C5 and K6 has chromatic number 9")
def _join_chi(tier: Tier, seed: int) -> Outcome:
    res = chromatic_number(gen.join(gen.cycle(5), gen.complete(6)), _budget(tier))
    if not res.exact:
        return SKIPPED, {"lower": res.lower}
    return (CONFIRMED if res.k == 9 else REFUTED), {"computed": res.k}


@claim("chi_o_subdivided_complete", "K_n with every edge subdivided has odd chromatic number n (n >= 3)")
def _star_chi(tier: Tier, seed: int) -> Outcome:
    values = {}
    for n in range(3, tier.star_max + 1):
        res = _exact_chi_o(gen.star_subdivision(n), tier)
        if not res.exact:
            return SKIPPED, {"computed": values, "truncated_at": n}
        values[str(n)] = res.k
    ok = all(values[str(n)] == n for n in range(3, tier.star_max + 1))
    return (CONFIRMED if ok else REFUTED), {"computed": values}


@claim("chi_o_subdivided_complete_n2", "the same formula at n = 2 (a 3-vertex path)")
def _star_chi2(tier: Tier, seed: int) -> Outcome:
    res = _exact_chi_o(gen.star_subdivision(2), tier)
    return (CONFIRMED if res.k == 2 else MISMATCH), {"stated": 2, "computed": res.k}


@claim("subdivided_complete_min_degree", "K_n with every edge subdivided has minimum degree 2")
def _star_delta(tier: Tier, seed: int) -> Outcome:
    vals = {str(n): degree_stats(gen.star_subdivision(n)).min_degree for n in range(3, tier.star_max + 1)}
    return (CONFIRMED if set(vals.values()) == {2} else REFUTED), {"computed": vals}


@claim("subdivided_complete_girth", "K_n with every edge subdivided has girth 4")
def _star_girth(tier: Tier, seed: int) -> Outcome:
    vals = {}
    for n in range(3, tier.star_max + 1):
        gi = girth(gen.star_subdivision(n))
        vals[str(n)] = gi if isinstance(gi, int) else "acyclic"
    status = CONFIRMED if set(vals.values()) == {4} else MISMATCH
    return status, {"stated": 4, "computed": vals, "note": "subdividing a triangle yields a 6-cycle"}


@claim("subdivided_complete_biplanar", "K_n with every edge subdivided has thickness at most 2")
def _star_biplanar(tier: Tier, seed: int) -> Outcome:
    vals = {}
    top = 7 if tier.name != "smoke" else 5
    for n in range(3, top + 1):
        res = thickness(gen.star_subdivision(n), budget=_budget(tier))
        if not res.exact:
            return SKIPPED, {"computed": vals, "truncated_at": n}
        vals[str(n)] = res.theta
    return (CONFIRMED if max(vals.values()) <= 2 else REFUTED), {"computed": vals}


# ---------------------------------------------------------------------------
# extension procedures
# ---------------------------------------------------------------------------


def _extension_run(tier: Tier, seed: int, which: str) -> Outcome:
    rng = random.Random(seed)
    failures, traces, ok = [], [], 0
    for i in range(tier.extension_samples):
        if which == "vertex":
            ins = vertex_deletion_instance(rng)
            call = lambda: extend_after_vertex_deletion(ins.graph, ins.vertex, ins.coloring, ins.k)
        elif which == "edge":
            ins = edge_pair_instance(rng)
            call = lambda: extend_after_edge_pair_deletion(ins.graph, ins.vertex, ins.partner, ins.coloring, ins.k)
        else:
            ins = n_easy_instance(rng)
            call = lambda: n_easy_recolor(ins.graph, ins.vertex, 1, 6, ins.coloring)
        try:
            out = call()
        except LemmaTraceError as exc:
            if len(traces) < 20:
                traces.append({"graph6": to_graph6(ins.graph), "vertex": ins.vertex, "k": ins.k,
                               "input": {str(v): c for v, c in sorted(ins.coloring.items())},
                               "message": str(exc), "trace": exc.trace})
            else:
                traces.append(None)
            continue
        if out.palette_size <= ins.k - 1 and odd_verdict(ins.graph, out).is_odd:
            ok += 1
        else:
            failures.append({"graph6": to_graph6(ins.graph), "k": ins.k})
    details = {
        "instances": tier.extension_samples,
        "valid_outputs": ok,
        "invalid_outputs": failures,
        "trace_events": len(traces),
        "trace_samples": [t for t in traces if t is not None],
    }
    if failures:
        return REFUTED, details
    return (MISMATCH if traces else CONFIRMED), details


@claim("extend_vertex_deletion", "a low odd-degree vertex can always be recolored back in")
def _ext_v(tier: Tier, seed: int) -> Outcome:
    return _extension_run(tier, seed, "vertex")


@claim("extend_edge_pair", "an edge between two low even-degree vertices can always be recolored back in")
def _ext_e(tier: Tier, seed: int) -> Outcome:
    return _extension_run(tier, seed, "edge")


@claim("n_easy_recoloring", "the three-stage recoloring around an n-easy vertex terminates with an odd coloring (n=1, k=6)")
def _ext_n(tier: Tier, seed: int) -> Outcome:
    return _extension_run(tier, seed, "n_easy")


# ---------------------------------------------------------------------------
# thickness
# ---------------------------------------------------------------------------


def _thickness_corpus(tier: Tier):
    return connected_graphs(tier.corpus_n) + [gen.complete(n) for n in (5, 6, 7)]


@claim("avg_degree_below_6theta", "average degree is strictly below 6 times the thickness")
def _avg(tier: Tier, seed: int) -> Outcome:
    bad, done = [], 0
    for g in _thickness_corpus(tier):
        if g.n == 0:
            continue
        res = thickness(g, budget=_budget(tier))
        if not res.exact:
            return SKIPPED, {"checked": done, "truncated_at": to_graph6(g)}
        avg = degree_stats(g).average_degree
        if not avg < 6 * res.theta:
            bad.append({"graph6": to_graph6(g), "avg": str(avg), "theta": res.theta})
        done += 1
    return (REFUTED if bad else CONFIRMED), {"checked": done, "violations": bad}


@claim("k11_not_biplanar", "K11 is not biplanar")
def _k11(tier: Tier, seed: int) -> Outcome:
    lb = thickness_lower_bound(gen.complete(11))
    return (CONFIRMED if lb >= 3 else SKIPPED), {"euler_lower_bound": lb}


@claim("c5_join_k6_biplanar", "the join of C5 and K6 is biplanar")
def _join_biplanar(tier: Tier, seed: int) -> Outcome:
    if not tier.deep:
        return SKIPPED, {"reason": "deep tier only"}
    res = thickness(gen.join(gen.cycle(5), gen.complete(6)), t_max=2, budget=_budget(tier), restarts=500, seed=seed)
    if res.upper <= 2:
        return CONFIRMED, {"certificate": res.certificate.to_json()}
    if res.lower > 2:
        return REFUTED, {"lower": res.lower}
    return SKIPPED, {"lower": res.lower, "upper": res.upper}


@claim("k9_not_biplanar", "K9 is not biplanar")
def _k9(tier: Tier, seed: int) -> Outcome:
    if not tier.deep:
        return SKIPPED, {"reason": "deep tier only"}
    res = thickness(gen.complete(9), budget=_budget(tier))
    if res.exact:
        return (CONFIRMED if res.theta == 3 else REFUTED), {"theta": res.theta}
    return SKIPPED, {"lower": res.lower, "upper": res.upper, "nodes": res.nodes}


# ---------------------------------------------------------------------------
# criticality
# ---------------------------------------------------------------------------


@claim("c5_odd_4_critical", "C5 is odd 4+-critical")
def _c5crit(tier: Tier, seed: int) -> Outcome:
    r = is_odd_k_critical(gen.cycle(5), 4)
    return (CONFIRMED if r.is_critical else REFUTED), r.to_json()


@claim("critical_structure", "odd k+-critical graphs satisfy the low-degree structure conditions")
def _crit_struct(tier: Tier, seed: int) -> Outcome:
    out, bad = {}, []
    for k in (4, 5, 6):
        found = search_critical(k, tier.corpus_n)
        out[str(k)] = [to_graph6(r.graph) for r in found]
        for r in found:
            for name, c in r.lemma_checks.items():
                if c.applicable and not c.passed:
                    bad.append({"graph6": to_graph6(r.graph), "k": k, "check": name, "violations": c.to_json()})
    return (REFUTED if bad else CONFIRMED), {"members": out, "violations": bad}


@claim("minor_critical_subset", "minor-critical graphs are subgraph-critical and have minimum degree >= floor(k/2)")
def _minor(tier: Tier, seed: int) -> Outcome:
    n_max = 5 if tier.name == "smoke" else 6
    members, bad = {}, []
    for k in (3, 4, 5):
        members[str(k)] = []
        for g in connected_graphs(n_max):
            r = is_odd_k_minor_critical(g, k)
            if not r.is_critical:
                continue
            members[str(k)].append(to_graph6(g))
            if not r.min_degree_check.passed:
                bad.append({"graph6": to_graph6(g), "k": k, "check": "min_degree"})
            if g.m <= 14 and not is_odd_k_critical(g, k).is_critical:
                bad.append({"graph6": to_graph6(g), "k": k, "check": "not subgraph-critical"})
    return (REFUTED if bad else CONFIRMED), {"members": members, "violations": bad}


# ---------------------------------------------------------------------------
# bounds, sampled
# ---------------------------------------------------------------------------


def _sample_bound(tier: Tier, seed: int, make, palette: int) -> Outcome:
    rng = random.Random(seed)
    counter = []
    for _ in range(tier.samples):
        g = make(rng)
        try:
            found = has_odd_coloring(g, palette, _budget(tier))
        except BudgetExhausted:
            return SKIPPED, {"truncated_at": to_graph6(g)}
        if found is None:
            counter.append(to_graph6(g))
    return (REFUTED if counter else CONFIRMED), {"samples": tier.samples, "counterexamples": counter}


@claim("girth6_planar_odd6", "planar graphs of girth >= 6 and min degree >= 1 are odd 6-colorable (sampled)")
def _g6(tier: Tier, seed: int) -> Outcome:
    return _sample_bound(tier, seed, random_planar_girth6, 6)


@claim("planar_odd8", "planar graphs are odd 8-colorable (sampled)")
def _p8(tier: Tier, seed: int) -> Outcome:
    return _sample_bound(tier, seed, random_planar, 8)


@claim("surplus_thresholds", "largest counts below 2t/(t-1) are 3 at t=2 and 2 for t>=3")
def _surplus(tier: Tier, seed: int) -> Outcome:
    vals = {str(t): largest_allowed_count(t) for t in range(2, 21)}
    ok = vals["2"] == 3 and all(vals[str(t)] == 2 for t in range(3, 21))
    return (CONFIRMED if ok else REFUTED), {"computed": vals}


@claim("easy_depth_in_range", "the easy-neighborhood depth floor(3t/2) satisfies k >= 4n+2 at k = 6t+1")
def _depth(tier: Tier, seed: int) -> Outcome:
    rows = {}
    for t in range(1, 9):
        n, k = (3 * t) // 2, 6 * t + 1
        rows[str(t)] = {"depth": n, "k": k, "needs": 4 * n + 2, "ok": k >= 4 * n + 2,
                        "largest_valid": (6 * t - 1) // 4}
    ok = all(r["ok"] for r in rows.values())
    return (CONFIRMED if ok else MISMATCH), {"rows": rows}


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------


def run_claims(tier_name: str, out_dir: str | Path, seed: int = 0, only: list[str] | None = None) -> list[ClaimResult]:
    tier = TIERS[tier_name]
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    results = []
    for claim_id, (statement, fn) in REGISTRY.items():
        if only and claim_id not in only:
            continue
        status, details = fn(tier, seed)
        path = out / f"{claim_id}.json"
        doc = {
            "claim_id": claim_id,
            "statement": statement,
            "status": status,
            "tier": tier.name,
            "seed": seed,
            "details": details,
            "timestamp": datetime.now(timezone.utc).isoformat(),
        }
        path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        results.append(ClaimResult(claim_id, status, str(path)))
    summary = out / "claims.csv"
    summary.write_text("claim_id,status,evidence\n" + "".join(
        f"{r.claim_id},{r.status},{r.evidence}\n" for r in results))
    return results
