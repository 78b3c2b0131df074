"""Named graphs that appear as worked examples for the game."""

from __future__ import annotations

from .graph import Graph, double_star, path

# pairing example: two triangles (0,1,2) and (6,7,8) linked through 3, 4, 5
PAIRING_EXAMPLE = Graph.from_edges(
    9,
    [(2, 0), (0, 1), (1, 2), (2, 3), (3, 6), (6, 7), (7, 8), (8, 6), (6, 4), (4, 2), (2, 5), (5, 6)],
)
PAIRING_EXAMPLE_PAIRS = ((0, 1), (7, 8), (2, 6))

# outcome D but no pairing dominating set
D_WITHOUT_PAIRING = Graph.from_edges(
    10,
    [
        (0, 4), (4, 5), (5, 0), (0, 7), (7, 8), (8, 0),
        (8, 5), (5, 1), (1, 8), (8, 9), (9, 3), (3, 8),
        (8, 2), (2, 5), (5, 6), (6, 3), (3, 5),
    ],
)  # fmt: skip

P3 = path(3)
P4 = path(4)
DOUBLE_STAR = double_star(2, 2)

NAMED = {
    "p3": P3,
    "p4": P4,
    "double-star": DOUBLE_STAR,
    "pairing-example": PAIRING_EXAMPLE,
    "d-without-pairing": D_WITHOUT_PAIRING,
}
