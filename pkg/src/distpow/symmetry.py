"""Automorphism groups of small graphs and the actions needed to test labelings."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Sequence

import numpy as np

from .errors import CapExceeded, GraphError
from .graph import Graph
from .powers import SubdividedGraph

DEFAULT_ORDER_CAP = 10**6
DEFAULT_VERTEX_CAP = 64

Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    return tuple(q[x] for x in p)


def inverse(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


@dataclass(frozen=True)
class AutomorphismSet:
    """All automorphisms of a graph, sorted lexicographically by image array."""

    n: int
    elements: tuple[Permutation, ...]
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p) -> bool:
        return tuple(p) in self._members

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int32).reshape(len(self.elements), self.n)

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_closed(self) -> bool:
        """Full closure check under composition and inverse (quadratic in the order)."""
        if identity(self.n) not in self:
            return False
        for p in self.elements:
            if inverse(p) not in self:
                return False
            for q in self.elements:
                if compose(p, q) not in self:
                    return False
        return True

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.elements]


def is_automorphism(g: Graph, p: Sequence[int]) -> bool:
    if len(p) != g.n:
        raise GraphError(f"permutation length {len(p)} does not match n={g.n}")
    if sorted(p) != list(range(g.n)):
        return False
    for v in range(g.n):
        image = 0
        row = g.adj[v]
        while row:
            low = row & -row
            image |= 1 << p[low.bit_length() - 1]
            row ^= low
        if image != g.adj[p[v]]:
            return False
    return True


def refined_colors(g: Graph) -> list[int]:
    """Isomorphism-invariant vertex colours: (degree, distance profile), refined to stability."""
    dist = g.distance_matrix
    sig = [(g.degrees[v], tuple(sorted(dist[v]))) for v in range(g.n)]
    colors = _compress(sig)
    while True:
        sig = [
            (colors[v], tuple(sorted((dist[v][u], colors[u]) for u in range(g.n))))
            for v in range(g.n)
        ]
        new = _compress(sig)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _compress(sig: list) -> list[int]:
    table = {s: i for i, s in enumerate(sorted(set(sig)))}
    return [table[s] for s in sig]


def enumerate_automorphisms(
    g: Graph,
    order_cap: int = DEFAULT_ORDER_CAP,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> AutomorphismSet:
    """Every automorphism of ``g`` in lexicographic order of image arrays.

    Backtracks over images of vertices 0, 1, ... with candidates restricted to
    the same refined colour class and to distance-consistency with the images
    already placed.
    """
    n = g.n
    if n > vertex_cap:
        raise CapExceeded("vertex", vertex_cap, f"graph has {n} vertices")
    if g.is_complete():
        if math.factorial(n) > order_cap:
            raise CapExceeded("automorphism order", order_cap, f"|Aut(K_{n})| = {n}!")
        return AutomorphismSet(n, tuple(permutations(range(n))))

    dist = g.distance_matrix
    colors = refined_colors(g)
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)

    found: list[Permutation] = []
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> None:
        if v == n:
            if len(found) >= order_cap:
                raise CapExceeded("automorphism order", order_cap)
            found.append(tuple(image))
            return
        dv = dist[v]
        for u in by_color[colors[v]]:
            if used[u]:
                continue
            du = dist[u]
            if any(dv[w] != du[image[w]] for w in range(v)):
                continue
            image[v] = u
            used[u] = True
            extend(v + 1)
            used[u] = False
        image[v] = -1

    extend(0)
    return AutomorphismSet(n, tuple(found))


def edge_action(g: Graph, p: Sequence[int]) -> Permutation:
    """Induced permutation of canonical edge indices: edge i -> index of {p(u), p(v)}."""
    if not is_automorphism(g, p):
        raise GraphError("edge action requires an automorphism")
    return tuple(g.index_of_edge(p[u], p[v]) for u, v in g.edges)


def edge_action_array(g: Graph, auts: AutomorphismSet) -> np.ndarray:
    """Edge actions of every group element as an (order x |E|) array."""
    m = g.num_edges
    if m == 0:
        return np.zeros((auts.order, 0), dtype=np.int32)
    # lookup table from (u, v) to edge index, -1 elsewhere
    table = np.full((g.n, g.n), -1, dtype=np.int32)
    for i, (u, v) in enumerate(g.edges):
        table[u, v] = table[v, u] = i
    ends = np.array(g.edges, dtype=np.int64)
    P = auts.array
    return table[P[:, ends[:, 0]], P[:, ends[:, 1]]]


def restrict_to_base(sg: SubdividedGraph, p: Sequence[int]) -> Permutation:
    """Restriction of an automorphism of the subdivision to the original vertices."""
    base_n = sg.base_n
    restricted = tuple(p[:base_n])
    bad = [v for v in range(base_n) if restricted[v] >= base_n]
    if bad:
        raise GraphError(
            f"automorphism sends original vertex {bad[0]} to internal vertex {restricted[bad[0]]}; "
            "base graph must be connected, of order >= 3 and not a cycle"
        )
    if not is_automorphism(sg.base, restricted):
        raise GraphError("restriction is not an automorphism of the base graph")
    return restricted


def is_subgroup(a: AutomorphismSet, b: AutomorphismSet) -> bool:
    if a.n != b.n:
        raise GraphError(f"vertex counts differ: {a.n} vs {b.n}")
    return all(p in b for p in a.elements)


def point_action(g: Graph, auts: AutomorphismSet, kind: str) -> np.ndarray:
    """Action of each group element on the labelled points of a labeling kind.

    Points are vertices (``vertex``), canonical edges (``edge``), or vertices
    followed by edges offset by n (``total``).
    """
    if kind == "vertex":
        return auts.array
    if kind == "edge":
        return edge_action_array(g, auts)
    if kind == "total":
        return np.hstack([auts.array, edge_action_array(g, auts) + g.n])
    raise GraphError(f"unknown labeling kind {kind!r}")


def labeling_stabilizer(auts: AutomorphismSet, labeling, g: Graph) -> AutomorphismSet:
    """Group elements that preserve every label of ``labeling``."""
    labels = np.asarray(labeling.point_labels(g))
    P = point_action(g, auts, labeling.kind)
    keep = np.all(labels[P] == labels, axis=1) if P.shape[1] else np.ones(len(P), dtype=bool)
    return AutomorphismSet(auts.n, tuple(p for p, k in zip(auts.elements, keep) if k))
