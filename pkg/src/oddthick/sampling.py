"""Seeded random graph families and extension-procedure instances."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .extension import easy_neighbors, is_n_easy, low_even_neighbors
from .graph import Graph
from .planarity import edges_planar
from .solvers import find_coloring


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def _random_tree(rng: random.Random, n: int) -> list[tuple[int, int]]:
    verts = list(range(n))
    rng.shuffle(verts)
    return [(min(verts[i], w), max(verts[i], w)) for i in range(1, n) for w in [verts[rng.randrange(i)]]]


def random_planar(rng: random.Random, n_lo: int = 4, n_hi: int = 12) -> Graph:
    """Connected planar graph: a random spanning tree grown by random planarity-preserving edges."""
    n = rng.randint(n_lo, n_hi)
    edges = _random_tree(rng, n)
    target = rng.randint(n - 1, max(n - 1, 3 * n - 6))
    present = set(edges)
    pairs = [e for e in combinations(range(n), 2) if e not in present]
    rng.shuffle(pairs)
    for e in pairs:
        if len(edges) >= target:
            break
        if edges_planar(n, edges + [e]):
            edges.append(e)
    return Graph(n, edges)


def _dist(adj: list[set[int]], s: int, t: int, cutoff: int) -> int:
    seen = {s: 0}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        if seen[x] >= cutoff:
            continue
        for y in adj[x]:
            if y not in seen:
                seen[y] = seen[x] + 1
                if y == t:
                    return seen[y]
                queue.append(y)
    return cutoff + 1


def random_planar_girth6(rng: random.Random, n_lo: int = 6, n_hi: int = 16) -> Graph:
    """Connected planar graph of girth at least 6 (so minimum degree at least 1)."""
    n = rng.randint(n_lo, n_hi)
    edges = _random_tree(rng, n)
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    pairs = [e for e in combinations(range(n), 2) if e[1] not in adj[e[0]]]
    rng.shuffle(pairs)
    extra = rng.randint(0, n)
    for u, v in pairs:
        if extra <= 0:
            break
        if _dist(adj, u, v, 4) >= 5 and edges_planar(n, edges + [(u, v)]):
            edges.append((u, v))
            adj[u].add(v)
            adj[v].add(u)
            extra -= 1
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# extension-procedure instances
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtensionInstance:
    graph: Graph
    removed: tuple[int, ...]
    k: int
    coloring: dict[int, int]
    vertex: int = -1
    partner: int = -1
    n: int = 0


def _color_remainder(rng: random.Random, g: Graph, removed: set[int], palette: int) -> dict[int, int] | None:
    sub, labels = g.delete_vertices(removed)
    found = find_coloring(sub, palette, odd=True, rng=rng)
    if found is None:
        return None
    return {labels[i]: c for i, c in enumerate(found)}


def vertex_deletion_instance(rng: random.Random) -> ExtensionInstance:
    while True:
        g = random_graph(rng, rng.randint(3, 9), rng.uniform(0.2, 0.7))
        cands = [v for v in range(g.n) if g.degree(v) % 2 == 1]
        if not cands:
            continue
        v = rng.choice(cands)
        k = max(4, 2 * g.degree(v) + 2) + rng.randint(0, 2)
        phi = _color_remainder(rng, g, {v}, k - 1)
        if phi is not None:
            return ExtensionInstance(g, (v,), k, phi, vertex=v)


def edge_pair_instance(rng: random.Random) -> ExtensionInstance:
    while True:
        g = random_graph(rng, rng.randint(3, 9), rng.uniform(0.2, 0.7))
        cands = [e for e in g.edges() if g.degree(e[0]) % 2 == 0 and g.degree(e[1]) % 2 == 0]
        if not cands:
            continue
        v0, v1 = rng.choice(cands)
        if rng.random() < 0.5:
            v0, v1 = v1, v0
        d0, d1 = g.degree(v0), g.degree(v1)
        k = max(4, 2 * max(d0, d1) + 1, d0 + d1 + 1)
        if d0 == d1 and 2 * d0 == k - 1:
            k += 1
        k += rng.randint(0, 2)
        phi = _color_remainder(rng, g, {v0, v1}, k - 1)
        if phi is not None:
            return ExtensionInstance(g, (v0, v1), k, phi, vertex=v0, partner=v1)


def _strip_low_odd(g: Graph, n: int) -> Graph:
    while True:
        low = [v for v in range(g.n) if g.degree(v) % 2 == 1 and g.degree(v) < 2 * n + 1]
        if not low:
            return g
        g, _ = g.delete_vertices(low[:1])


def n_easy_instance(rng: random.Random, n: int = 1, k: int = 6) -> ExtensionInstance:
    while True:
        size = rng.randint(4, 11)
        g = _strip_low_odd(random_graph(rng, size, rng.uniform(0.15, 0.6)), n)
        cands = []
        for v in range(g.n):
            if not g.adj[v] or not is_n_easy(g, v, n):
                continue
            xs = low_even_neighbors(g, v, n)
            if 2 * g.degree(v) <= len(xs) + len(easy_neighbors(g, v, n)) + k - 2:
                cands.append((v, xs))
        if not cands:
            continue
        v, xs = rng.choice(cands)
        phi = _color_remainder(rng, g, set(xs) | {v}, k - 1)
        if phi is not None:
            return ExtensionInstance(g, tuple(sorted(set(xs) | {v})), k, phi, vertex=v, n=n)
