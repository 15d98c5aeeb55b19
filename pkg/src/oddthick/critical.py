"""Odd k+-criticality under subgraphs and minors, and structural checks on critical graphs."""

from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .budget import Budget, BudgetMeter
from .canonical import MAX_ENUM_N, canonical_key, connected_graphs
from .errors import ParameterError, ParseError, SizeCapError
from .extension import easy_neighbors, is_n_easy, low_even_neighbors
from .formats import from_graph6, to_graph6
from .graph import Graph
from .solvers import find_coloring

log = logging.getLogger(__name__)

SUBGRAPH_MAX_N = 8
SUBGRAPH_MAX_M = 14
MINOR_MAX_N = 6


@dataclass(frozen=True)
class LemmaCheck:
    applicable: bool
    passed: bool
    violations: tuple = ()

    def to_json(self) -> dict:
        return {"applicable": self.applicable, "passed": self.passed, "violations": [
            list(x) if isinstance(x, tuple) else x for x in self.violations]}


@dataclass
class CriticalityReport:
    graph_key: bytes
    k: int
    is_critical: bool
    chi_o_at_least_k: bool
    failing_subgraph: tuple[tuple[int, ...], tuple[tuple[int, int], ...]] | None = None
    subgraph_classes_checked: int = 0
    lemma_checks: dict[str, LemmaCheck] = field(default_factory=dict)
    graph: Graph | None = None

    def to_json(self) -> dict:
        fs = self.failing_subgraph
        return {
            "graph": self.graph_key.decode(),
            "graph6": to_graph6(self.graph) if self.graph is not None else None,
            "n": self.graph.n if self.graph is not None else None,
            "m": self.graph.m if self.graph is not None else None,
            "k": self.k,
            "is_critical": self.is_critical,
            "chi_o_at_least_k": self.chi_o_at_least_k,
            "failing_subgraph": None if fs is None else {"vertices": list(fs[0]), "edges": [list(e) for e in fs[1]]},
            "subgraph_classes_checked": self.subgraph_classes_checked,
            "lemma_checks": {name: c.to_json() for name, c in self.lemma_checks.items()},
        }


def _colorable(g: Graph, palette: int, meter: BudgetMeter) -> bool:
    return find_coloring(g, palette, odd=True, meter=meter) is not None


# ---------------------------------------------------------------------------
# structural checks
# ---------------------------------------------------------------------------


def _n_easy_inequality(g: Graph, k: int, n: int) -> LemmaCheck:
    bad = []
    for v in range(g.n):
        if not g.adj[v] or not is_n_easy(g, v, n):
            continue
        lhs = 2 * g.degree(v)
        rhs = len(low_even_neighbors(g, v, n)) + len(easy_neighbors(g, v, n)) + k - 1
        if lhs < rhs:
            bad.append((v, lhs, rhs))
    return LemmaCheck(True, not bad, tuple(bad))


def check_structural_lemmas(g: Graph, k: int) -> dict[str, LemmaCheck]:
    """Degree conditions every odd k+-critical graph must satisfy.

    Keys: ``odd_low_degree`` (odd degrees are at least ``floor(k/2)``),
    ``low_degree_edge`` (same-parity edges need a high endpoint),
    ``no_degree_one`` and ``easy_inequality`` (``k >= 6``), and
    ``n_easy_inequality_n{n}`` for every ``n`` with ``4n + 2 <= k``.
    Violations list vertices, edges, or ``(vertex, lhs, rhs)`` triples.
    """
    out: dict[str, LemmaCheck] = {}
    degs = g.degrees()
    if k >= 4:
        bad = tuple(v for v in range(g.n) if degs[v] % 2 == 1 and degs[v] < k // 2)
        out["odd_low_degree"] = LemmaCheck(True, not bad, bad)
        bad_e = []
        for u, v in g.edges():
            du, dv = degs[u], degs[v]
            if du % 2 != dv % 2:
                continue
            if 2 * max(du, dv) > k - 1 or (2 * du == k - 1 and 2 * dv == k - 1):
                continue
            bad_e.append((u, v))
        out["low_degree_edge"] = LemmaCheck(True, not bad_e, tuple(bad_e))
    else:
        out["odd_low_degree"] = LemmaCheck(False, True)
        out["low_degree_edge"] = LemmaCheck(False, True)
    if k >= 6:
        ones = tuple(v for v in range(g.n) if degs[v] == 1)
        out["no_degree_one"] = LemmaCheck(True, not ones, ones)
        out["easy_inequality"] = _n_easy_inequality(g, k, 1)
    else:
        out["no_degree_one"] = LemmaCheck(False, True)
        out["easy_inequality"] = LemmaCheck(False, True)
    n = 1
    while 4 * n + 2 <= k:
        out[f"n_easy_inequality_n{n}"] = _n_easy_inequality(g, k, n)
        n += 1
    return out


# ---------------------------------------------------------------------------
# subgraph criticality
# ---------------------------------------------------------------------------


def _spanned(edges: list[tuple[int, int]]) -> tuple[Graph, list[int]]:
    labels = sorted({x for e in edges for x in e})
    idx = {v: i for i, v in enumerate(labels)}
    return Graph(len(labels), [(idx[u], idx[v]) for u, v in edges]), labels


def is_odd_k_critical(
    g: Graph,
    k: int,
    budget: Budget | None = None,
    *,
    max_n: int = SUBGRAPH_MAX_N,
    max_m: int = SUBGRAPH_MAX_M,
) -> CriticalityReport:
    """Exact decision of membership in the odd k+-critical class.

    Every proper subgraph is examined, not just maximal ones, because the odd
    chromatic number is not monotone under subgraphs. Isolated vertices do not
    change the odd chromatic number, so subgraphs are enumerated as proper
    edge subsets restricted to the vertices they span. Raises
    ``BudgetExhausted`` if the budget runs out.
    """
    if k < 2:
        raise ParameterError("k must be >= 2")
    if g.n > max_n or g.m > max_m:
        raise SizeCapError(f"graph with n={g.n}, m={g.m} exceeds the enumeration cap n<={max_n}, m<={max_m}")
    meter = BudgetMeter(budget)
    key = canonical_key(g)
    if g.n == 0 or _colorable(g, k - 1, meter):
        return CriticalityReport(key, k, False, False, graph=g)
    iso = g.isolated()
    if iso and g.n > 1:
        keep = tuple(v for v in range(g.n) if v != iso[0])
        return CriticalityReport(key, k, False, True, (keep, g.edges()), 0, graph=g)
    edges = list(g.edges())
    m = len(edges)
    verdicts: dict[bytes, bool] = {}
    for mask in range((1 << m) - 2, 0, -1):
        sub_edges = [edges[i] for i in range(m) if mask >> i & 1]
        h, labels = _spanned(sub_edges)
        hk = canonical_key(h)
        if hk not in verdicts:
            verdicts[hk] = _colorable(h, k - 1, meter)
        if not verdicts[hk]:
            wit = (tuple(labels), tuple(sub_edges))
            return CriticalityReport(key, k, False, True, wit, len(verdicts), graph=g)
    return CriticalityReport(key, k, True, True, None, len(verdicts), check_structural_lemmas(g, k), graph=g)


def _check_one(args: tuple[str, int]) -> CriticalityReport | str:
    text, k = args
    g = from_graph6(text)
    try:
        return is_odd_k_critical(g, k)
    except SizeCapError:
        return "oversize"


def search_critical(
    k: int,
    n_max: int,
    corpus: Iterable[Graph | str] | None = None,
    *,
    workers: int = 1,
    stats: dict | None = None,
) -> list[CriticalityReport]:
    """All odd k+-critical graphs in ``corpus`` (default: every connected graph with at most ``n_max`` vertices).

    Corpus items may be graphs or graph6 lines; unparsable lines are counted
    and skipped, as are graphs above the subgraph enumeration cap. Output is
    deduplicated and sorted by canonical key whatever the worker count.
    """
    if corpus is None:
        if n_max > MAX_ENUM_N:
            raise SizeCapError(f"internal enumeration stops at n={MAX_ENUM_N}; pass a graph6 corpus")
        corpus = connected_graphs(n_max)
    counts = {"scanned": 0, "parse_failures": 0, "oversize": 0, "duplicates": 0}
    seen: set[bytes] = set()
    jobs: list[tuple[str, int]] = []
    for item in corpus:
        if isinstance(item, str):
            try:
                item = from_graph6(item)
            except ParseError:
                counts["parse_failures"] += 1
                continue
        if item.n > n_max:
            continue
        key = canonical_key(item)
        if key in seen:
            counts["duplicates"] += 1
            continue
        seen.add(key)
        jobs.append((to_graph6(item), k))
    counts["scanned"] = len(jobs)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_one, jobs, chunksize=8))
    else:
        results = [_check_one(j) for j in jobs]
    found = []
    for res in results:
        if res == "oversize":
            counts["oversize"] += 1
        elif res.is_critical:
            found.append(res)
    if counts["parse_failures"]:
        log.warning("skipped %d unparsable corpus lines", counts["parse_failures"])
    if counts["oversize"]:
        log.warning("skipped %d graphs above the enumeration cap", counts["oversize"])
    if stats is not None:
        stats.update(counts)
    return sorted(found, key=lambda r: r.graph_key)


def reports_to_jsonl(reports: Iterable[CriticalityReport]) -> str:
    return "".join(json.dumps(r.to_json(), sort_keys=True) + "\n" for r in reports)


def reports_to_csv(reports: Iterable[CriticalityReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    reports = list(reports)
    names = sorted({name for r in reports for name in r.lemma_checks})
    writer.writerow(["graph", "n", "m", "k", "critical"] + names)
    for r in reports:
        g = r.graph
        row = [to_graph6(g) if g else r.graph_key.decode(), g.n if g else "", g.m if g else "", r.k, r.is_critical]
        for name in names:
            c = r.lemma_checks.get(name)
            row.append("" if c is None or not c.applicable else ("pass" if c.passed else "fail"))
        writer.writerow(row)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# minor criticality
# ---------------------------------------------------------------------------


@dataclass
class MinorCriticalityReport:
    graph_key: bytes
    k: int
    is_critical: bool
    chi_o_at_least_k: bool
    failing_minor: Graph | None = None
    minors_checked: int = 0
    min_degree_check: LemmaCheck | None = None

    def to_json(self) -> dict:
        return {
            "graph": self.graph_key.decode(),
            "k": self.k,
            "is_critical": self.is_critical,
            "chi_o_at_least_k": self.chi_o_at_least_k,
            "failing_minor": None if self.failing_minor is None else to_graph6(self.failing_minor),
            "minors_checked": self.minors_checked,
            "min_degree_check": None if self.min_degree_check is None else self.min_degree_check.to_json(),
        }


def proper_minors(g: Graph) -> dict[bytes, Graph]:
    """Every proper minor of ``g`` with at least one vertex, keyed by canonical key."""
    start = canonical_key(g)
    seen: dict[bytes, Graph] = {start: g}
    frontier = [g]
    while frontier:
        nxt = []
        for h in frontier:
            children = [h.delete_edge(u, v) for u, v in h.edges()]
            children += [h.contract_edge(u, v) for u, v in h.edges()]
            if h.n > 1:
                children += [h.delete_vertices([v])[0] for v in range(h.n)]
            for c in children:
                ck = canonical_key(c)
                if ck not in seen:
                    seen[ck] = c
                    nxt.append(c)
        frontier = nxt
    del seen[start]
    return seen


def is_odd_k_minor_critical(
    g: Graph, k: int, budget: Budget | None = None, *, max_n: int = MINOR_MAX_N
) -> MinorCriticalityReport:
    """Exact decision of membership in the minor-closed analogue of the critical class."""
    if k < 2:
        raise ParameterError("k must be >= 2")
    if g.n > max_n:
        raise SizeCapError(f"graph with n={g.n} exceeds the minor enumeration cap n<={max_n}")
    meter = BudgetMeter(budget)
    key = canonical_key(g)
    if g.n == 0 or _colorable(g, k - 1, meter):
        return MinorCriticalityReport(key, k, False, False)
    minors = proper_minors(g)
    for mk in sorted(minors):
        h = minors[mk]
        if not _colorable(h, k - 1, meter):
            return MinorCriticalityReport(key, k, False, True, h, len(minors))
    delta = min(g.degrees())
    low = tuple(v for v in range(g.n) if g.degree(v) < k // 2)
    check = LemmaCheck(True, delta >= k // 2, low)
    return MinorCriticalityReport(key, k, True, True, None, len(minors), check)
