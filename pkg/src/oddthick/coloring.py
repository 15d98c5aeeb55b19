"""Odd-coloring semantics: parity condition, odd color sets and verdicts."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import DomainError
from .graph import Graph


@dataclass(frozen=True)
class VertexColoring:
    """Total map vertex -> color in ``1..palette_size``."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(not isinstance(c, int) or c < 1 for c in self.colors):
            raise DomainError("colors must be positive integers")

    @classmethod
    def of(cls, colors: Sequence[int] | Mapping[int, int], n: int | None = None) -> VertexColoring:
        if isinstance(colors, Mapping):
            size = n if n is not None else len(colors)
            missing = [v for v in range(size) if v not in colors]
            if missing:
                raise DomainError(f"coloring is partial; uncolored vertices {missing}")
            return cls(tuple(int(colors[v]) for v in range(size)))
        return cls(tuple(int(c) for c in colors))

    @property
    def palette_size(self) -> int:
        return max(self.colors, default=0)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def to_json(self) -> dict:
        return {
            "colors": {str(v): c for v, c in enumerate(self.colors)},
            "palette_size": self.palette_size,
        }

    @classmethod
    def from_json(cls, data: dict | str) -> VertexColoring:
        if isinstance(data, str):
            data = json.loads(data)
        raw = data["colors"] if "colors" in data else data
        return cls.of({int(k): int(v) for k, v in raw.items()})


def odd_colors(g: Graph, colors: Mapping[int, int] | Sequence[int], v: int) -> frozenset[int]:
    """Colors of odd multiplicity among the colored neighbors of ``v``.

    Neighbors missing from a mapping are treated as deleted, which is how
    colorings of vertex-deleted subgraphs are evaluated in place.
    """
    odd: set[int] = set()
    if isinstance(colors, Mapping):
        for w in g.adj[v]:
            c = colors.get(w)
            if c is not None:
                odd ^= {c}
    else:
        for w in g.adj[v]:
            odd ^= {colors[w]}
    return frozenset(odd)


def star_color(g: Graph, colors: Mapping[int, int] | Sequence[int], v: int) -> int:
    """Minimum odd-multiplicity neighbor color, 0 when there is none."""
    odd = odd_colors(g, colors, v)
    return min(odd) if odd else 0


@dataclass(frozen=True)
class OddVerdict:
    is_proper: bool
    failing_parity: frozenset[int]
    odd_sets: tuple[frozenset[int], ...]
    stars: tuple[int, ...]
    conflicts: tuple[tuple[int, int], ...] = field(default=())

    @property
    def is_odd(self) -> bool:
        return self.is_proper and not self.failing_parity

    def to_json(self) -> dict:
        return {
            "is_proper": self.is_proper,
            "is_odd": self.is_odd,
            "failing_parity": sorted(self.failing_parity),
            "conflicts": [list(e) for e in self.conflicts],
            "per_vertex": {
                str(v): {"odd_colors": sorted(s), "star": self.stars[v]}
                for v, s in enumerate(self.odd_sets)
            },
        }


def odd_verdict(g: Graph, coloring: VertexColoring | Sequence[int] | Mapping[int, int]) -> OddVerdict:
    if not isinstance(coloring, VertexColoring):
        coloring = VertexColoring.of(coloring, g.n)
    if len(coloring) != g.n:
        raise DomainError(f"coloring covers {len(coloring)} vertices, graph has {g.n}")
    cols = coloring.colors
    conflicts = tuple((u, v) for u, v in g.edges() if cols[u] == cols[v])
    odd_sets = tuple(odd_colors(g, cols, v) for v in range(g.n))
    failing = frozenset(v for v in range(g.n) if g.adj[v] and not odd_sets[v])
    stars = tuple(min(s) if s else 0 for s in odd_sets)
    return OddVerdict(not conflicts, failing, odd_sets, stars, conflicts)


def is_odd_coloring(g: Graph, colors: Sequence[int], k: int | None = None) -> bool:
    """Shorthand used by tests and oracles: proper, parity-satisfying and within ``k`` colors."""
    if k is not None and any(not 1 <= c <= k for c in colors):
        return False
    return odd_verdict(g, colors).is_odd
