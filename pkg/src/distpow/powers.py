"""Natural powers, k-subdivisions and fractional powers."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import GraphError
from .graph import UNREACHABLE, Graph, build

POWER_THEN_SUBDIVIDE = "power_then_subdivide"
SUBDIVIDE_THEN_POWER = "subdivide_then_power"


def power(g: Graph, k: int) -> Graph:
    """G^k: same vertices, xy adjacent iff 1 <= d(x, y) <= k."""
    if k < 1:
        raise GraphError(f"power exponent must be >= 1, got {k}")
    if k == 1:
        return g
    dist = g.distance_matrix
    adj = []
    for x in range(g.n):
        row = 0
        for y, d in enumerate(dist[x]):
            if d != UNREACHABLE and 1 <= d <= k:
                row |= 1 << y
        adj.append(row)
    return Graph(g.n, tuple(adj))


@dataclass(frozen=True)
class SubdividedGraph:
    """A k-subdivision together with its superedge bookkeeping.

    ``superedges[(i, j)]`` (i < j) lists the internal vertices of the path
    replacing edge ij, ordered by distance from ``i``.
    """

    graph: Graph
    base: Graph
    k: int
    superedges: dict[tuple[int, int], tuple[int, ...]]

    @property
    def base_n(self) -> int:
        return self.base.n

    def is_internal(self, v: int) -> bool:
        return v >= self.base.n

    def superedge_path(self, u: int, v: int) -> list[int]:
        """Vertices of the superedge from ``u`` to ``v``, endpoints included."""
        if u < v:
            return [u, *self.superedges[(u, v)], v]
        return [u, *reversed(self.superedges[(v, u)]), v]

    def superedge_edges(self, u: int, v: int) -> list[int]:
        """Canonical edge indices e^1..e^k of the superedge, walking from ``u`` to ``v``."""
        walk = self.superedge_path(u, v)
        return [self.graph.index_of_edge(a, b) for a, b in zip(walk, walk[1:])]

    def owner(self) -> dict[int, tuple[tuple[int, int], int]]:
        """Map internal vertex -> (base edge, position l)."""
        return {w: (e, l) for e, ws in self.superedges.items() for l, w in enumerate(ws, 1)}

    def superedges_json(self) -> str:
        rows = [{"edge": list(e), "internal": list(ws)} for e, ws in sorted(self.superedges.items())]
        return json.dumps(rows, indent=1)


def subdivide(g: Graph, k: int) -> SubdividedGraph:
    """Replace every edge by a path of length ``k``; internal ids follow base_n contiguously."""
    if k < 1:
        raise GraphError(f"subdivision parameter must be >= 1, got {k}")
    if k == 1:
        return SubdividedGraph(g, g, 1, {e: () for e in g.edges})
    nxt = g.n
    edges = []
    superedges = {}
    for i, j in g.edges:
        internal = tuple(range(nxt, nxt + k - 1))
        nxt += k - 1
        walk = [i, *internal, j]
        edges.extend(zip(walk, walk[1:]))
        superedges[(i, j)] = internal
    return SubdividedGraph(build(nxt, edges), g, k, superedges)


def fractional_power(g: Graph, m: int, n: int, order: str) -> Graph:
    """G^{m/n} in either construction order."""
    if order == SUBDIVIDE_THEN_POWER:
        return power(subdivide(g, n).graph, m)
    if order == POWER_THEN_SUBDIVIDE:
        return subdivide(power(g, m), n).graph
    raise GraphError(f"unknown fractional power order {order!r}")


def power_distance_claim(d: int, k: int) -> int:
    """The value q + r for d = kq + r, 0 <= r < k.

    This evaluates the stated formula only; true distances in G^k come from BFS.
    """
    if d < 0 or k < 1:
        raise GraphError("need d >= 0 and k >= 1")
    q, r = divmod(d, k)
    return q + r
