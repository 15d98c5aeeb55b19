"""Exact chromatic and odd chromatic number solvers.

Both run the same depth-first assignment: vertices in descending-degree order
(ties by index), colors tried in increasing order, and vertex ``i`` restricted
to colors ``<= 1 + max color used so far``. The odd variant additionally
keeps, for every vertex, the bitmask of neighbor colors seen an odd number of
times and prunes as soon as an even-degree vertex has its whole neighborhood
colored with that mask empty. Odd-degree vertices never need a check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .budget import Budget, BudgetMeter
from .coloring import VertexColoring, odd_verdict
from .errors import BudgetExhausted, DomainError, InvariantError
from .graph import Graph


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact minimisation.

    ``k`` is set only when the search completed; otherwise ``lower``/``upper``
    carry the bounds established before the budget ran out. ``refuted`` lists
    the palette sizes proven infeasible by exhaustive search.
    """

    k: int | None
    witness: VertexColoring | None
    lower: int
    upper: int
    exact: bool
    nodes: int
    refuted: tuple[int, ...] = field(default=())

    def __iter__(self):
        yield self.k
        yield self.witness


def search_order(g: Graph) -> list[int]:
    return sorted((v for v in range(g.n) if g.adj[v]), key=lambda v: (-len(g.adj[v]), v))


def _greedy_clique(g: Graph) -> int:
    best = 1 if g.n else 0
    for start in range(g.n):
        clique = [start]
        cand = g.masks[start]
        while cand:
            v = max((w for w in range(g.n) if cand >> w & 1), key=lambda w: (len(g.adj[w]), -w))
            clique.append(v)
            cand &= g.masks[v]
        best = max(best, len(clique))
    return best


def find_coloring(
    g: Graph,
    k: int,
    *,
    odd: bool = True,
    meter: BudgetMeter | None = None,
    rng: random.Random | None = None,
    lookahead: bool = False,
) -> list[int] | None:
    """Colors ``1..k`` for every vertex forming a proper (odd, if ``odd``) coloring, or ``None``.

    Raises ``BudgetExhausted`` through ``meter``. ``rng`` shuffles the color
    trial order and is meant for sampling diverse witnesses only.
    """
    n = g.n
    adj = g.adj
    meter = meter or BudgetMeter(None)
    colors = [0] * n
    for v in range(n):
        if not adj[v]:
            colors[v] = 1
    order = search_order(g)
    if not order:
        return colors if k >= 1 else None
    if k < 2:
        return None
    even = [len(a) % 2 == 0 for a in adj]
    oddmask = [0] * n
    uncolored = [len(a) for a in adj]

    def forbidden_for(v: int) -> int:
        mask = 0
        for w in adj[v]:
            if colors[w]:
                mask |= 1 << colors[w]
        return mask

    def last_uncolored(w: int) -> int:
        for x in adj[w]:
            if not colors[x]:
                return x
        raise InvariantError("no uncolored neighbor left")

    def assign(u: int, c: int) -> bool:
        colors[u] = c
        ok = True
        bit = 1 << c
        for w in adj[u]:
            oddmask[w] ^= bit
            uncolored[w] -= 1
            if odd and even[w]:
                if uncolored[w] == 0 and oddmask[w] == 0:
                    ok = False
                elif lookahead and uncolored[w] == 1 and oddmask[w] & (oddmask[w] - 1) == 0 and oddmask[w]:
                    x = last_uncolored(w)
                    avail = ((1 << (k + 1)) - 2) & ~forbidden_for(x) & ~oddmask[w]
                    if not avail:
                        ok = False
        return ok

    def unassign(u: int, c: int) -> None:
        bit = 1 << c
        for w in adj[u]:
            oddmask[w] ^= bit
            uncolored[w] += 1
        colors[u] = 0

    def dfs(i: int, used: int) -> bool:
        if i == len(order):
            return True
        meter.tick()
        u = order[i]
        blocked = forbidden_for(u)
        top = min(k, used + 1)
        trial = [c for c in range(1, top + 1) if not blocked >> c & 1]
        if rng is not None:
            rng.shuffle(trial)
        for c in trial:
            if assign(u, c) and dfs(i + 1, max(used, c)):
                return True
            unassign(u, c)
        return False

    # isolated vertices hold color 1, so the palette already contains it
    used0 = 1 if len(order) < n else 0
    return list(colors) if dfs(0, used0) else None


def _trivial_upper(g: Graph) -> list[int]:
    """All non-isolated vertices get distinct colors: always proper and odd."""
    colors, nxt = [], 1
    for v in range(g.n):
        if g.adj[v]:
            colors.append(nxt)
            nxt += 1
        else:
            colors.append(1)
    return colors


def _minimise(g: Graph, lower: int, odd: bool, meter: BudgetMeter, lookahead: bool) -> SolveResult:
    fallback = _trivial_upper(g)
    upper = max(fallback)
    refuted: list[int] = []
    k = max(lower, 1)
    try:
        while True:
            if k >= upper:
                # the fallback already meets the lower bound
                return SolveResult(upper, VertexColoring(tuple(fallback)), upper, upper, True, meter.nodes, tuple(refuted))
            found = find_coloring(g, k, odd=odd, meter=meter, lookahead=lookahead)
            if found is not None:
                witness = VertexColoring(tuple(found))
                if odd and not odd_verdict(g, witness).is_odd:
                    raise InvariantError("solver produced a non-odd witness")
                return SolveResult(k, witness, k, k, True, meter.nodes, tuple(refuted))
            refuted.append(k)
            k += 1
    except BudgetExhausted:
        return SolveResult(None, VertexColoring(tuple(fallback)), k, upper, False, meter.nodes, tuple(refuted))


def chromatic_number(g: Graph, budget: Budget | None = None) -> SolveResult:
    """Exact chromatic number, starting from a greedy clique lower bound."""
    if g.n == 0:
        raise DomainError("coloring numbers are undefined for the empty graph")
    return _minimise(g, _greedy_clique(g), False, BudgetMeter(budget), False)


def odd_chromatic_number(
    g: Graph,
    budget: Budget | None = None,
    *,
    lookahead: bool = False,
    lower: int | None = None,
) -> SolveResult:
    """Exact odd chromatic number by upward search from the chromatic number.

    On budget exhaustion the result is inexact and reports ``lower`` (the
    smallest palette size not yet refuted) and the trivial upper bound.
    """
    if g.n == 0:
        raise DomainError("coloring numbers are undefined for the empty graph")
    meter = BudgetMeter(budget)
    if lower is None:
        chi = _minimise(g, _greedy_clique(g), False, meter, False)
        if not chi.exact:
            return SolveResult(None, chi.witness, chi.lower, chi.upper, False, meter.nodes)
        res = _minimise(g, chi.k, True, meter, lookahead)
        return SolveResult(
            res.k, res.witness, res.lower, res.upper, res.exact, res.nodes, chi.refuted + res.refuted
        )
    return _minimise(g, lower, True, meter, lookahead)


def has_odd_coloring(g: Graph, k: int, budget: Budget | None = None) -> VertexColoring | None:
    """Odd coloring with at most ``k`` colors, or ``None`` when none exists.

    Raises ``BudgetExhausted`` when the cap is hit before a decision.
    """
    found = find_coloring(g, k, odd=True, meter=BudgetMeter(budget))
    return VertexColoring(tuple(found)) if found is not None else None
