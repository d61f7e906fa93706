"""Complete-graph edge colorings and their matching decompositions.

Vertices are numbered 1..p and colors 1..t throughout, in files as well
as in memory.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameterError

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    """Order a vertex pair as (min, max); loops are rejected."""
    if u == v:
        raise InvalidParameterError(f"loops are not allowed: ({u}, {v})")
    return (u, v) if u < v else (v, u)


def all_edges(p: int) -> list[Edge]:
    """Edges of K_p in lexicographic order."""
    return [(u, v) for u in range(1, p + 1) for v in range(u + 1, p + 1)]


@dataclass(frozen=True)
class OrderedMatching:
    """Near-perfect matching of odd K_x that misses exactly ``center``.

    Edge k (1-based) joins the vertices at circle positions center+k and
    center-k, taken mod x with residue 0 read as x.  The order of
    ``edges`` follows k; several colorings rely on it.
    """

    center: int
    edges: tuple[Edge, ...]


@dataclass(frozen=True)
class EdgeColoring:
    """Total assignment of colors 1..t to the edges of K_p."""

    p: int
    t: int
    colors: dict[Edge, int]

    def color_of(self, u: int, v: int) -> int:
        return self.colors[canonical_edge(u, v)]

    @property
    def edge_count(self) -> int:
        return self.p * (self.p - 1) // 2


def near_one_factorization(x: int) -> list[OrderedMatching]:
    """Split E(K_x), x odd, into x matchings M_1..M_x with M_i missing vertex i.

    Each M_i holds (x-1)/2 ordered edges; edge k of M_i is {i+k, i-k}
    (indices mod x, 0 read as x).  Edge {a, b} lands in M_i exactly when
    a + b = 2i (mod x), so the matchings partition the edge set.
    """
    if x < 3 or x % 2 == 0:
        raise InvalidParameterError(f"need odd x >= 3, got {x}")
    half = (x - 1) // 2
    matchings = []
    for i in range(1, x + 1):
        edges = []
        for k in range(1, half + 1):
            a = (i + k - 1) % x + 1
            b = (i - k - 1) % x + 1
            edges.append((a, b) if a < b else (b, a))
        matchings.append(OrderedMatching(center=i, edges=tuple(edges)))
    return matchings


def one_factorization(p: int) -> list[list[Edge]]:
    """Split E(K_p), p even, into p-1 perfect matchings (circle method).

    Round i pairs vertex p with the center that round i of the
    near-factorization of K_{p-1} leaves uncovered.
    """
    if p < 2 or p % 2:
        raise InvalidParameterError(f"need even p >= 2, got {p}")
    if p == 2:
        return [[(1, 2)]]
    rounds = []
    for m in near_one_factorization(p - 1):
        rounds.append(list(m.edges) + [(m.center, p)])
    return rounds


def color_degree_profile(coloring: EdgeColoring) -> list[list[int]]:
    """Per-vertex color counts: rows[v-1][c-1] = edges of color c at vertex v."""
    rows = [[0] * coloring.t for _ in range(coloring.p)]
    for (u, v), c in coloring.colors.items():
        rows[u - 1][c - 1] += 1
        rows[v - 1][c - 1] += 1
    return rows
