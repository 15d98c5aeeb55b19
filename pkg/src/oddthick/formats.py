"""Text codecs: graph6, DIMACS ``.col`` and plain edge lists."""

from __future__ import annotations

from typing import Iterator

from .errors import ParseError, ParameterError
from .graph import Graph

FORMATS = ("graph6", "edge_list", "dimacs")


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ParameterError("graph6 supports at most 258047 vertices")


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        mj = g.masks[j]
        bits.extend(mj >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[i : i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def from_graph6(text: str) -> Graph:
    data = text.strip()
    start = 0
    if data.startswith(">>graph6<<"):
        start = 10
    for pos in range(start, len(data)):
        if not 63 <= ord(data[pos]) <= 126:
            raise ParseError(f"invalid graph6 character {data[pos]!r}", pos)
    if start >= len(data):
        raise ParseError("empty graph6 string", start)
    if data[start] != "~":
        n, pos = ord(data[start]) - 63, start + 1
    else:
        if len(data) < start + 4 or data[start + 1] == "~":
            raise ParseError("unsupported or truncated graph6 size field", start)
        n = 0
        for c in data[start + 1 : start + 4]:
            n = (n << 6) | (ord(c) - 63)
        pos = start + 4
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - pos != need:
        raise ParseError(f"graph6 body has {len(data) - pos} bytes, expected {need}", pos)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(data[pos + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if k % 6 and (ord(data[pos + k // 6]) - 63) & ((1 << (6 - k % 6)) - 1):
        raise ParseError("non-zero graph6 padding bits", pos + k // 6)
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# line-based formats
# ---------------------------------------------------------------------------


def _lines(text: str) -> Iterator[tuple[int, str]]:
    offset = 0
    for line in text.splitlines(keepends=True):
        yield offset, line.strip()
        offset += len(line.encode())


def _build(n: int, edges: list[tuple[int, int]], offsets: list[int]) -> Graph:
    seen = set()
    for (u, v), off in zip(edges, offsets):
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", off)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) out of range for n={n}", off)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", off)
        seen.add(key)
    return Graph(n, edges)


def from_edge_list(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    offsets: list[int] = []
    for off, line in _lines(text):
        if not line or line.startswith("#"):
            continue
        if line.startswith("n="):
            if n is not None or edges:
                raise ParseError("n= header must come first and only once", off)
            try:
                n = int(line[2:])
            except ValueError:
                raise ParseError(f"bad vertex count {line[2:]!r}", off) from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two vertex ids, got {line!r}", off)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex id in {line!r}", off) from None
        if u < 0 or v < 0:
            raise ParseError("vertex ids must be non-negative", off)
        edges.append((u, v))
        offsets.append(off)
    top = max((max(e) for e in edges), default=-1) + 1
    if n is None:
        n = top
    elif top > n:
        raise ParseError(f"edge endpoint {top - 1} exceeds declared n={n}", offsets[-1])
    return _build(n, edges, offsets)


def to_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    offsets: list[int] = []
    for off, line in _lines(text):
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", off)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"malformed problem line {line!r}", off)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"malformed problem line {line!r}", off) from None
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", off)
            if len(parts) != 3:
                raise ParseError(f"malformed edge line {line!r}", off)
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise ParseError(f"malformed edge line {line!r}", off) from None
            edges.append((u, v))
            offsets.append(off)
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", off)
    if n is None:
        raise ParseError("missing problem line", 0)
    if m != len(edges):
        raise ParseError(f"problem line declares {m} edges, found {len(edges)}", 0)
    return _build(n, edges, offsets)


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edge_list":
        return from_edge_list(text)
    if fmt == "dimacs":
        return from_dimacs(text)
    raise ParameterError(f"unknown format {fmt!r}")


def serialize_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "edge_list":
        return to_edge_list(g)
    if fmt == "dimacs":
        return to_dimacs(g)
    raise ParameterError(f"unknown format {fmt!r}")


def read_graph6_lines(text: str) -> Iterator[Graph | ParseError]:
    """Yield one graph per non-empty line; malformed lines yield their error instead."""
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            yield from_graph6(line)
        except ParseError as exc:
            yield exc
