"""Constructive coloring extensions for odd k+-critical structure arguments.

Each procedure takes an odd ``(k-1)``-coloring of a vertex-deleted subgraph,
given as a mapping over the surviving vertices of ``g``, and extends it to an
odd ``(k-1)``-coloring of ``g``. Every "some color exists" step picks the
minimum qualifying color and every "pick a vertex" step the minimum index, so
runs are reproducible.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .coloring import VertexColoring, odd_colors, odd_verdict
from .errors import InvariantError, LemmaTraceError, PreconditionError
from .graph import Graph


def _check_partial(g: Graph, phi: Mapping[int, int], removed: set[int], palette: int) -> None:
    keep = [v for v in range(g.n) if v not in removed]
    missing = [v for v in keep if v not in phi]
    if missing:
        raise PreconditionError(f"input coloring misses vertices {missing}")
    extra = [v for v in phi if v in removed]
    if extra:
        raise PreconditionError(f"input coloring colors deleted vertices {extra}")
    bad = [v for v in keep if not 1 <= phi[v] <= palette]
    if bad:
        raise PreconditionError(f"colors outside 1..{palette} at {bad}")
    sub, labels = g.induced(keep)
    if not odd_verdict(sub, [phi[v] for v in labels]).is_odd:
        raise PreconditionError(f"input is not an odd {palette}-coloring of the reduced graph")


def _min_free(blocked: Iterable[int], palette: int) -> int | None:
    blocked = set(blocked)
    return next((c for c in range(1, palette + 1) if c not in blocked), None)


def _star(g: Graph, colors: Mapping[int, int], v: int) -> int:
    odd = odd_colors(g, colors, v)
    return min(odd) if odd else 0


def _finish(g: Graph, colors: Mapping[int, int], k: int) -> VertexColoring:
    out = VertexColoring.of(colors, g.n)
    if out.palette_size > k - 1 or not odd_verdict(g, out).is_odd:
        raise InvariantError(f"extension did not produce an odd {k - 1}-coloring")
    return out


def extend_after_vertex_deletion(
    g: Graph, v: int, phi: Mapping[int, int], k: int
) -> VertexColoring:
    """Recolor a low odd-degree vertex back into an odd ``(k-1)``-coloring of ``g - v``."""
    d = g.degree(v)
    if k < 4:
        raise PreconditionError("requires k >= 4")
    if d % 2 == 0:
        raise PreconditionError(f"vertex {v} has even degree {d}")
    if d >= k // 2:
        raise PreconditionError(f"degree {d} is not below floor(k/2) = {k // 2}")
    _check_partial(g, phi, {v}, k - 1)
    blocked = {phi[w] for w in g.adj[v]} | {_star(g, phi, w) for w in g.adj[v]}
    blocked.discard(0)
    alpha = _min_free(blocked, k - 1)
    if alpha is None:
        raise InvariantError(f"no free color: {len(blocked)} blocked of {k - 1}")
    return _finish(g, {**phi, v: alpha}, k)


def extend_after_edge_pair_deletion(
    g: Graph, v0: int, v1: int, phi: Mapping[int, int], k: int
) -> VertexColoring:
    """Color both ends of an edge between two low even-degree vertices.

    The endpoint of larger degree is colored first (ties: ``v0``); the second
    one also avoids the first one's new color. Each endpoint avoids the odd
    color it is guarding in its partner's remaining neighborhood.
    """
    if k < 4:
        raise PreconditionError("requires k >= 4")
    if not g.has_edge(v0, v1):
        raise PreconditionError(f"({v0}, {v1}) is not an edge")
    d0, d1 = g.degree(v0), g.degree(v1)
    if d0 % 2 or d1 % 2:
        raise PreconditionError(f"endpoint degrees {d0}, {d1} are not both even")
    if d0 + d1 >= k:
        raise PreconditionError(f"d(v0) + d(v1) = {d0 + d1} is not below k = {k}")
    if 2 * max(d0, d1) > k - 1:
        raise PreconditionError(f"max degree {max(d0, d1)} exceeds (k-1)/2")
    if 2 * d0 == k - 1 and 2 * d1 == k - 1:
        raise PreconditionError("both degrees equal (k-1)/2; no free color is guaranteed")
    _check_partial(g, phi, {v0, v1}, k - 1)

    def guard(a: int, b: int) -> int:
        # odd color of b's neighborhood without a; a must not take it
        odd = odd_colors(g, {w: phi[w] for w in g.adj[b] if w != a}, b)
        if not odd:
            raise InvariantError(f"vertex {b} has no odd color outside {a}")
        return min(odd)

    colors = dict(phi)
    first, second = (v0, v1) if d0 >= d1 else (v1, v0)
    for a, b in ((first, second), (second, first)):
        blocked = set()
        for w in g.adj[a]:
            if w == b:
                continue
            blocked.add(phi[w])
            blocked.add(_star(g, phi, w))
        blocked.discard(0)
        blocked.add(guard(a, b))
        if b in colors:
            blocked.add(colors[b])
        beta = _min_free(blocked, k - 1)
        if beta is None:
            raise InvariantError(f"no free color for {a}: {sorted(blocked)}")
        colors[a] = beta
    return _finish(g, colors, k)


# ---------------------------------------------------------------------------
# n-easy recoloring
# ---------------------------------------------------------------------------


def low_even_neighbors(g: Graph, v: int, n: int) -> list[int]:
    """Neighbors of ``v`` whose degree is even and between 2 and ``2n``."""
    return [w for w in g.adj[v] if g.degree(w) % 2 == 0 and 2 <= g.degree(w) <= 2 * n]


def is_n_easy(g: Graph, v: int, n: int) -> bool:
    return g.degree(v) % 2 == 1 or bool(low_even_neighbors(g, v, n))


def easy_neighbors(g: Graph, v: int, n: int) -> list[int]:
    return [w for w in g.adj[v] if is_n_easy(g, w, n)]


def _deficient(g: Graph, colors: Mapping[int, int]) -> set[int]:
    return {z for z in range(g.n) if g.adj[z] and not odd_colors(g, colors, z)}


def n_easy_recolor(
    g: Graph,
    v: int,
    n: int,
    k: int,
    phi0: Mapping[int, int],
    trace: list[dict] | None = None,
) -> VertexColoring:
    """Extend an odd ``(k-1)``-coloring of ``g - (X + v)`` to all of ``g``.

    ``X`` is the set of low even-degree neighbors of the ``n``-easy vertex
    ``v``. Three stages: paint ``X`` with the spare color ``k`` and give
    ``v`` a color clear of its high-degree neighbors; recolor each member of
    ``X`` into ``1..k-1``; then repair parity-deficient vertices one at a time
    by recoloring a low even-degree neighbor. The repair loop must strictly
    shrink the deficient set each step, otherwise ``LemmaTraceError`` is raised
    with the recorded trace. Pass a list as ``trace`` to collect the steps.
    """
    steps: list[dict] = trace if trace is not None else []
    if n < 1:
        raise PreconditionError("n must be a positive integer")
    if k < 4 * n + 2:
        raise PreconditionError(f"requires k >= 4n+2 = {4 * n + 2}")
    low = [u for u in range(g.n) if g.degree(u) % 2 == 1 and g.degree(u) < 2 * n + 1]
    if low:
        raise PreconditionError(f"vertices {low} have odd degree below 2n+1")
    if not is_n_easy(g, v, n):
        raise PreconditionError(f"vertex {v} is not {n}-easy")
    xs = low_even_neighbors(g, v, n)
    x_set = set(xs)
    ys = [w for w in g.adj[v] if w not in x_set]
    easy = set(easy_neighbors(g, v, n))
    d = g.degree(v)
    if 2 * d > len(xs) + len(easy) + k - 2:
        raise PreconditionError(
            f"2d(v) = {2 * d} exceeds |X| + |N_ez(v)| + k - 2 = {len(xs) + len(easy) + k - 2}"
        )
    removed = x_set | {v}
    _check_partial(g, phi0, removed, k - 1)
    star0 = {w: _star(g, phi0, w) for w in phi0}

    # place v, park X on the spare color
    blocked = {phi0[y] for y in ys} | {star0[y] for y in ys if y not in easy}
    blocked.discard(0)
    alpha = _min_free(blocked, k - 1)
    if alpha is None:
        raise InvariantError(f"no free color for v: {sorted(blocked)}")
    colors = dict(phi0)
    for x in xs:
        colors[x] = k
    colors[v] = alpha
    steps.append({"stage": "place_center", "vertex": v, "color": alpha, "blocked": sorted(blocked)})

    # move X back into the palette
    for x in sorted(xs):
        blocked = {alpha}
        for y in g.adj[x]:
            if y == v:
                continue
            blocked.add(colors[y])
            blocked.add(star0.get(y, 0))
        blocked.discard(0)
        beta = _min_free(blocked, k - 1)
        if beta is None:
            raise InvariantError(f"no free color for {x}: {sorted(blocked)}")
        colors[x] = beta
        steps.append({"stage": "recolor_low", "vertex": x, "color": beta, "blocked": sorted(blocked)})

    # repair parity one deficient vertex at a time
    zs = _deficient(g, colors)
    while zs:
        z = min(zs)
        cands = low_even_neighbors(g, z, n)
        if not cands:
            steps.append({"stage": "repair", "deficient": sorted(zs), "z": z, "error": "no low even neighbor"})
            raise LemmaTraceError(f"deficient vertex {z} has no even neighbor of degree <= {2 * n}", steps)
        u = cands[0]
        blocked = {colors[u]}
        for y in g.adj[u]:
            blocked.add(colors[y])
            blocked.add(_star(g, colors, y))
        blocked.discard(0)
        gamma = _min_free(blocked, k - 1)
        if gamma is None:
            raise InvariantError(f"no free color for {u}: {sorted(blocked)}")
        colors[u] = gamma
        after = _deficient(g, colors)
        step = {"stage": "repair", "deficient": sorted(zs), "z": z, "vertex": u, "color": gamma,
                "deficient_after": sorted(after)}
        steps.append(step)
        if not after < zs:
            raise LemmaTraceError(
                f"recoloring {u} did not shrink the deficient set: {sorted(zs)} -> {sorted(after)}", steps
            )
        zs = after
    return _finish(g, colors, k)
