"""Small named instances: a 7-vertex graph with an odd coloring and a proper coloring that is not odd."""

from __future__ import annotations

from .graph import Graph

# a 5-cycle 1-2-3-4-5 with pendant 0 at vertex 1; vertex 6 is isolated
EXAMPLE_GRAPH = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])

EXAMPLE_ODD = (1, 2, 1, 3, 4, 1, 1)
EXAMPLE_NOT_ODD = (1, 2, 1, 2, 3, 1, 1)

# per-vertex (odd color set, chosen star color) for EXAMPLE_ODD and EXAMPLE_NOT_ODD
EXAMPLE_ODD_TABLE = (
    ({2}, 2), ({1}, 1), ({2, 3}, 3), ({1, 4}, 1), ({1, 3}, 1), ({2, 4}, 4), (set(), 0),
)
EXAMPLE_NOT_ODD_TABLE = (
    ({2}, 2), ({1}, 1), (set(), 0), ({1, 3}, 1), ({1, 2}, 2), ({2, 3}, 2), (set(), 0),
)
