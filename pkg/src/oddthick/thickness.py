"""Exact graph thickness by edge-partition search."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .budget import Budget, BudgetMeter
from .errors import BudgetExhausted, DomainError, ParameterError
from .graph import Edge, Graph
from .planarity import edges_planar, is_planar, planar_embed


@dataclass(frozen=True)
class EdgePartition:
    classes: tuple[tuple[Edge, ...], ...]

    @property
    def t(self) -> int:
        return len(self.classes)

    def layers(self, g: Graph) -> list[Graph]:
        return [g.edge_subgraph(c) for c in self.classes]

    def validate(self, g: Graph) -> None:
        """Raise ``DomainError`` unless the classes partition ``E(g)`` into planar spanning subgraphs."""
        seen: set[Edge] = set()
        for i, cls in enumerate(self.classes):
            for u, v in cls:
                e = (min(u, v), max(u, v))
                if not g.has_edge(*e):
                    raise DomainError(f"class {i} contains non-edge {e}")
                if e in seen:
                    raise DomainError(f"edge {e} appears in more than one class")
                seen.add(e)
            if not planar_embed(g.edge_subgraph(cls)).is_planar:
                raise DomainError(f"class {i} is not planar")
        if len(seen) != g.m:
            raise DomainError(f"classes cover {len(seen)} of {g.m} edges")

    def to_json(self) -> list[list[list[int]]]:
        return [[list(e) for e in cls] for cls in self.classes]

    @classmethod
    def from_json(cls, data: list) -> EdgePartition:
        return cls(tuple(tuple((min(u, v), max(u, v)) for u, v in c) for c in data))


@dataclass(frozen=True)
class ThicknessResult:
    theta: int | None
    lower: int
    upper: int
    certificate: EdgePartition | None
    exact: bool
    nodes: int = 0


def thickness_lower_bound(g: Graph) -> int:
    """Euler bound ``ceil(m / (3n - 6))`` combined with the average-degree form ``6t > avg degree``."""
    if g.n < 3:
        return 1
    by_edges = -(-g.m // (3 * g.n - 6))
    avg = Fraction(2 * g.m, g.n)
    by_avg = int(avg // 6) + 1
    return max(by_edges, by_avg, 1)


def branching_order(g: Graph) -> list[Edge]:
    return sorted(g.edges(), key=lambda e: (-min(g.degree(e[0]), g.degree(e[1])), e))


def _first_fit(n: int, edges: list[Edge]) -> list[list[Edge]]:
    classes: list[list[Edge]] = []
    for e in edges:
        for cls in classes:
            if edges_planar(n, cls + [e]):
                cls.append(e)
                break
        else:
            classes.append([e])
    return classes


def _search(n: int, edges: list[Edge], t: int, meter: BudgetMeter) -> list[list[Edge]] | None:
    cap = 3 * n - 6 if n >= 3 else len(edges)
    classes: list[list[Edge]] = [[] for _ in range(t)]
    total = len(edges)

    def dfs(i: int) -> bool:
        if i == total:
            return True
        meter.tick()
        room = sum(cap - len(c) for c in classes)
        if room < total - i:
            return False
        e = edges[i]
        for j in range(t):
            cls = classes[j]
            if not cls and j > 0 and not classes[j - 1]:
                break
            if len(cls) >= cap:
                continue
            cls.append(e)
            if edges_planar(n, cls) and dfs(i + 1):
                return True
            cls.pop()
        return False

    return classes if dfs(0) else None


def thickness(
    g: Graph,
    t_max: int | None = None,
    budget: Budget | None = None,
    *,
    restarts: int = 0,
    seed: int = 0,
) -> ThicknessResult:
    """Exact thickness with a verified certificate, or bounds when the budget runs out.

    An upper bound comes from first-fit over the branching order (plus
    ``restarts`` shuffled first-fit passes); then each ``t`` from the lower
    bound upward is settled by exhaustive search, stopping at ``t_max``.
    """
    if t_max is not None and t_max < 1:
        raise ParameterError("t_max must be >= 1")
    lb = thickness_lower_bound(g)
    if g.m == 0:
        return ThicknessResult(1, 1, 1, EdgePartition(((),)), True)
    if is_planar(g):
        return ThicknessResult(1, 1, 1, EdgePartition((tuple(g.edges()),)), True)
    lb = max(lb, 2)
    order = branching_order(g)
    meter = BudgetMeter(budget)
    best = _first_fit(g.n, order)
    rng = random.Random(seed)
    for _ in range(restarts):
        shuffled = list(order)
        rng.shuffle(shuffled)
        cand = _first_fit(g.n, shuffled)
        if len(cand) < len(best):
            best = cand
    ub = len(best)
    cert = EdgePartition(tuple(tuple(sorted(c)) for c in best))
    limit = ub - 1 if t_max is None else min(ub - 1, t_max)
    t = lb
    try:
        while t <= limit:
            found = _search(g.n, order, t, meter)
            if found is not None:
                part = EdgePartition(tuple(tuple(sorted(c)) for c in found if c))
                part.validate(g)
                return ThicknessResult(part.t, part.t, part.t, part, True, meter.nodes)
            t += 1
    except BudgetExhausted:
        return ThicknessResult(None, t, ub, cert, False, meter.nodes)
    if t >= ub:
        cert.validate(g)
        return ThicknessResult(ub, ub, ub, cert, True, meter.nodes)
    return ThicknessResult(None, t, ub, cert, False, meter.nodes)


def is_biplanar(g: Graph, budget: Budget | None = None, **kwargs) -> bool | None:
    """``True``/``False`` when decided, ``None`` when the budget ran out first."""
    res = thickness(g, t_max=2, budget=budget, **kwargs)
    if res.upper <= 2:
        return True
    if res.lower > 2:
        return False
    return None
