"""Named graph families."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .errors import ParameterError
from .graph import Graph

KINDS = ("complete", "cycle", "path", "complete_multipartite", "join", "star_subdivision", "hexagonal_patch")


def complete(n: int) -> Graph:
    if n < 1:
        raise ParameterError("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError("cycle needs length >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ParameterError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise ParameterError("complete multipartite graph needs at least one part, each of size >= 1")
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them; ``h`` is shifted by ``g.n``."""
    shift = g.n
    edges = list(g.edges())
    edges += [(u + shift, v + shift) for u, v in h.edges()]
    edges += [(u, w + shift) for u in range(g.n) for w in range(h.n)]
    return Graph(g.n + h.n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, list(g.edges()) + [(u + shift, v + shift) for u, v in h.edges()])


def star_subdivision(n: int) -> Graph:
    """``K_n`` with every edge subdivided once.

    Vertices ``0..n-1`` are the original ones; the subdivision vertex of
    ``{i, j}`` follows in lexicographic order of the pairs.
    """
    if n < 2:
        raise ParameterError("star_subdivision needs n >= 2")
    edges = []
    nxt = n
    for i, j in combinations(range(n), 2):
        edges += [(i, nxt), (j, nxt)]
        nxt += 1
    return Graph(nxt, edges)


def hexagonal_patch(rows: int, cols: int) -> Graph:
    """Finite patch of the hexagonal lattice with ``rows x cols`` hexagons."""
    import networkx as nx

    if rows < 1 or cols < 1:
        raise ParameterError("hexagonal patch needs rows, cols >= 1")
    lattice = nx.hexagonal_lattice_graph(rows, cols)
    labels = {v: i for i, v in enumerate(sorted(lattice.nodes))}
    return Graph(len(labels), [(labels[u], labels[v]) for u, v in lattice.edges])


def generate(kind: str, params: Sequence[int]) -> Graph:
    """Build a graph by family name.

    ``join`` takes ``[a, b]`` and builds ``C_a`` joined with ``K_b``; call
    :func:`join` directly for other operands.
    """
    params = list(params)

    def need(count: int) -> None:
        if len(params) != count:
            raise ParameterError(f"{kind} takes {count} integer parameter(s), got {len(params)}")

    if kind == "complete":
        need(1)
        return complete(params[0])
    if kind == "cycle":
        need(1)
        return cycle(params[0])
    if kind == "path":
        need(1)
        return path(params[0])
    if kind == "complete_multipartite":
        return complete_multipartite(params)
    if kind == "join":
        need(2)
        return join(cycle(params[0]), complete(params[1]))
    if kind == "star_subdivision":
        need(1)
        return star_subdivision(params[0])
    if kind == "hexagonal_patch":
        need(2)
        return hexagonal_patch(params[0], params[1])
    raise ParameterError(f"unknown graph kind {kind!r}; expected one of {', '.join(KINDS)}")
