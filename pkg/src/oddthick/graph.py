"""Simple undirected graphs on dense integer vertices."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DomainError, ParameterError

Edge = tuple[int, int]


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Adjacency is stored twice: as sorted neighbor tuples and as integer bitmasks,
    the latter being what the exhaustive searches work on.
    """

    __slots__ = ("n", "adj", "masks", "m", "_edges", "_hash")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()) -> None:
        if n < 0:
            raise ParameterError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise ParameterError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self.masks: tuple[int, ...] = tuple(sum(1 << w for w in s) for s in nbrs)
        self.m = sum(len(s) for s in nbrs) // 2
        self._edges: tuple[Edge, ...] | None = None
        self._hash: int | None = None

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> Graph:
        masks = list(masks)
        edges = [(u, v) for u, mk in enumerate(masks) for v in _bits(mk) if u < v]
        return cls(len(masks), edges)

    def edges(self) -> tuple[Edge, ...]:
        if self._edges is None:
            self._edges = tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)
        return self._edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def vertices(self) -> range:
        return range(self.n)

    def isolated(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    # -- derived graphs -------------------------------------------------

    def induced(self, keep: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled densely; returns it with the old labels."""
        labels = sorted(set(keep))
        index = {v: i for i, v in enumerate(labels)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph(len(labels), edges), labels

    def delete_vertices(self, drop: Iterable[int]) -> tuple[Graph, list[int]]:
        gone = set(drop)
        return self.induced(v for v in range(self.n) if v not in gone)

    def delete_edge(self, u: int, v: int) -> Graph:
        e = (min(u, v), max(u, v))
        return Graph(self.n, [f for f in self.edges() if f != e])

    def contract_edge(self, u: int, v: int) -> Graph:
        """Contract ``uv`` into ``min(u, v)``; loops and parallel edges are dropped."""
        if not self.has_edge(u, v):
            raise ParameterError(f"({u}, {v}) is not an edge")
        keep, gone = min(u, v), max(u, v)
        relabel = [x if x < gone else x - 1 for x in range(self.n)]
        relabel[gone] = relabel[keep]
        edges = set()
        for a, b in self.edges():
            ra, rb = relabel[a], relabel[b]
            if ra != rb:
                edges.add((min(ra, rb), max(ra, rb)))
        return Graph(self.n - 1, sorted(edges))

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def edge_subgraph(self, edges: Iterable[Edge]) -> Graph:
        """Spanning subgraph on the same vertex set."""
        return Graph(self.n, edges)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- dunder ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.masks))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class DegreeStats:
    min_degree: int
    max_degree: int
    average_degree: Fraction


def degree_stats(g: Graph) -> DegreeStats:
    if g.n == 0:
        raise DomainError("degree statistics are undefined for the empty graph")
    degs = g.degrees()
    return DegreeStats(min(degs), max(degs), Fraction(2 * g.m, g.n))


class _Acyclic:
    """Girth of a forest: compares greater than every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ACYCLIC"

    def __str__(self) -> str:
        return "acyclic"

    def __eq__(self, other: object) -> bool:
        return other is self or other == math.inf

    def __hash__(self) -> int:
        return hash(math.inf)

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return self == other

    def __gt__(self, other: object) -> bool:
        return not self == other

    def __ge__(self, other: object) -> bool:
        return True


ACYCLIC = _Acyclic()


def girth(g: Graph) -> int | _Acyclic:
    """Length of a shortest cycle, or ``ACYCLIC`` for forests.

    BFS from every vertex; a non-tree edge closing at depths ``a`` and ``b``
    witnesses a closed walk of length ``a + b + 1`` and the minimum over all
    roots is the girth.
    """
    best = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return ACYCLIC if best == math.inf else int(best)
