"""Planarity testing and plane embeddings as rotation systems.

The planarity test itself is networkx's left-right algorithm; this module
turns its output into rotation systems, traces faces and checks Euler's
formula exactly on every embedding it hands out.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import networkx as nx

from .errors import DomainError
from .graph import Graph

Dart = tuple[int, int]


@dataclass(frozen=True)
class Face:
    """A face of a plane embedding; the outer face of a disconnected graph has several boundary walks."""

    walks: tuple[tuple[Dart, ...], ...]

    @property
    def degree(self) -> int:
        return sum(len(w) for w in self.walks)


@dataclass(frozen=True)
class PlaneEmbedding:
    n: int
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[Face, ...]
    component_count: int

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def euler_ok(self) -> bool:
        return self.n - self.m + len(self.faces) == 1 + self.component_count

    def graph(self) -> Graph:
        return Graph(self.n, [(u, v) for u in range(self.n) for v in self.rotation[u] if u < v])

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rotation]

    @classmethod
    def from_rotation(cls, rotation: Sequence[Sequence[int]]) -> PlaneEmbedding:
        """Build an embedding from per-vertex cyclic neighbor orders.

        Components are placed side by side; the longest boundary walk of each
        component (ties: smallest walk) bounds the shared outer face.
        Raises ``DomainError`` when the rotation is not a plane embedding.
        """
        rot = tuple(tuple(int(x) for x in r) for r in rotation)
        n = len(rot)
        pos = []
        for u, r in enumerate(rot):
            if len(set(r)) != len(r) or u in r:
                raise DomainError(f"rotation at {u} repeats a neighbor or loops")
            pos.append({w: i for i, w in enumerate(r)})
        for u, r in enumerate(rot):
            for w in r:
                if not 0 <= w < n or u not in pos[w]:
                    raise DomainError(f"rotation is not symmetric at edge ({u}, {w})")
        g = Graph(n, [(u, w) for u in range(n) for w in rot[u] if u < w])
        comps = g.components()
        owner = [0] * n
        for ci, comp in enumerate(comps):
            for v in comp:
                owner[v] = ci
        walks_by_comp: list[list[tuple[Dart, ...]]] = [[] for _ in comps]
        seen: set[Dart] = set()
        for u in range(n):
            for w in rot[u]:
                if (u, w) in seen:
                    continue
                walk = []
                a, b = u, w
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append((a, b))
                    r = rot[b]
                    a, b = b, r[(pos[b][a] + 1) % len(r)]
                walks_by_comp[owner[u]].append(tuple(walk))
        faces: list[Face] = []
        outer: list[tuple[Dart, ...]] = []
        for walks in walks_by_comp:
            if not walks:
                continue
            big = max(walks, key=lambda wk: (len(wk), [(-x, -y) for x, y in wk]))
            outer.append(big)
            faces.extend(Face((wk,)) for wk in walks if wk is not big)
        faces.insert(0, Face(tuple(outer)))
        emb = cls(n, rot, tuple(faces), len(comps))
        if n and not emb.euler_ok():
            raise DomainError("rotation system is not planar (Euler check failed)")
        return emb


@dataclass(frozen=True)
class PlanarityResult:
    is_planar: bool
    embedding: PlaneEmbedding | None = None
    witness: tuple[tuple[int, int], ...] | None = None
    witness_kind: str | None = None


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def is_planar(g: Graph) -> bool:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    if g.m <= 8:
        return True
    return nx.check_planarity(_to_nx(g))[0]


def edges_planar(n: int, edges: Sequence[tuple[int, int]]) -> bool:
    """Planarity of the spanning graph ``(range(n), edges)`` without building a ``Graph``."""
    m = len(edges)
    if m <= 8:
        return True
    touched = {x for e in edges for x in e}
    if len(touched) >= 3 and m > 3 * len(touched) - 6:
        return False
    h = nx.Graph()
    h.add_edges_from(edges)
    return nx.check_planarity(h)[0]


def _kuratowski_kind(edges: Sequence[tuple[int, int]]) -> str:
    deg: dict[int, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    branch = [d for d in deg.values() if d > 2]
    return "K5" if len(branch) == 5 and all(d == 4 for d in branch) else "K3,3"


def planar_embed(g: Graph) -> PlanarityResult:
    """Embedding with exact Euler check, or a Kuratowski subdivision witness."""
    ok, cert = nx.check_planarity(_to_nx(g), counterexample=True)
    if not ok:
        wit = tuple(sorted((min(u, v), max(u, v)) for u, v in cert.edges))
        return PlanarityResult(False, witness=wit, witness_kind=_kuratowski_kind(wit))
    rotation = [tuple(cert.neighbors_cw_order(v)) if v in cert else () for v in range(g.n)]
    return PlanarityResult(True, embedding=PlaneEmbedding.from_rotation(rotation))
