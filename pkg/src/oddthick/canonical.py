"""Canonical labelling and enumeration of small graphs.

The canonical form is found by equitable-partition refinement followed by
exhaustive branching over individualised vertices, keeping the
lexicographically largest adjacency certificate. Components are
canonicalised separately and concatenated in sorted order, and interchangeable
twins within a cell are branched on only once; both cuts keep the search tree
small for the highly symmetric graphs the subgraph lattices are full of.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import SizeCapError
from .formats import to_graph6
from .graph import Graph

Cert = tuple[int, ...]


def _refine(masks: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    cells = [list(c) for c in cells]
    while True:
        cell_masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((masks[v] & cm).bit_count() for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
            out.extend(groups[s] for s in sorted(groups))
        cells = out
        if not changed:
            return cells


def _homogeneous(masks: tuple[int, ...], cells: list[list[int]]) -> bool:
    """True when every cell is a clique or coclique and every cell pair is complete or empty."""
    cell_masks = [sum(1 << v for v in c) for c in cells]
    for i, cell in enumerate(cells):
        for j, cm in enumerate(cell_masks):
            size = len(cells[j]) - (1 if i == j else 0)
            counts = {(masks[v] & cm).bit_count() for v in cell}
            if counts != {0} and counts != {size}:
                return False
    return True


def _certificate(masks: tuple[int, ...], order: list[int]) -> Cert:
    pos = {v: i for i, v in enumerate(order)}
    out = []
    for v in order:
        mk, nm = masks[v], 0
        while mk:
            low = mk & -mk
            nm |= 1 << pos[low.bit_length() - 1]
            mk ^= low
        out.append(nm)
    return tuple(out)


def _twin_reps(masks: tuple[int, ...], cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        for r in reps:
            if masks[v] & ~(1 << r) == masks[r] & ~(1 << v):
                break
        else:
            reps.append(v)
    return reps


def _canon_connected(masks: tuple[int, ...], verts: list[int]) -> tuple[Cert, list[int]]:
    best: list = [None, None]

    def visit(cells: list[list[int]]) -> None:
        cells = _refine(masks, cells)
        if all(len(c) == 1 for c in cells) or _homogeneous(masks, cells):
            order = [v for c in cells for v in c]
            cert = _certificate(masks, order)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, order
            return
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[idx]
        for v in _twin_reps(masks, target):
            rest = [w for w in target if w != v]
            visit(cells[:idx] + [[v], rest] + cells[idx + 1 :])

    visit([list(verts)])
    return best[0], best[1]


def canonical_order(g: Graph) -> list[int]:
    """Vertex order whose induced relabelling is the canonical form of ``g``."""
    parts = []
    for comp in g.components():
        cert, order = _canon_connected(g.masks, comp)
        parts.append((len(comp), cert, order))
    parts.sort(key=lambda p: (p[0], p[1]))
    return [v for _, _, order in parts for v in order]


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def canonical_key(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    return to_graph6(canonical_form(g)).encode()


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

MAX_ENUM_N = 7


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0),)
    if n == 1:
        return (Graph(1),)
    seen: dict[bytes, Graph] = {}
    for g in _all_graphs(n - 1):
        base = list(g.edges())
        for subset in range(1 << g.n):
            h = Graph(n, base + [(v, n - 1) for v in range(g.n) if subset >> v & 1])
            form = canonical_form(h)
            seen.setdefault(to_graph6(form).encode(), form)
    return tuple(seen[k] for k in sorted(seen))


def all_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on ``n`` vertices up to isomorphism, in canonical form."""
    if n > MAX_ENUM_N:
        raise SizeCapError(f"internal enumeration is capped at n={MAX_ENUM_N}; supply a graph6 corpus")
    return _all_graphs(n)


def connected_graphs(n_max: int, n_min: int = 1) -> list[Graph]:
    """All connected graphs with ``n_min <= n <= n_max`` vertices up to isomorphism."""
    return [g for n in range(n_min, n_max + 1) for g in all_graphs(n) if g.is_connected()]
