"""Unpruned reference computations used to cross-check the fast paths.

Nothing here shares code with the pruned searches: automorphisms come from
trying every permutation, and distinguishing numbers from scoring every
labeling at once.
"""

from __future__ import annotations

from itertools import permutations, product

import numpy as np

from .errors import GraphError, UndefinedQuantity
from .graph import Graph

BRUTE_FORCE_MAX_N = 9


def brute_force_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    if g.n > BRUTE_FORCE_MAX_N:
        raise GraphError(f"brute force over {g.n}! permutations refused")
    edges = set(g.edges)
    out = []
    for p in permutations(range(g.n)):
        if all(((p[u], p[v]) if p[u] < p[v] else (p[v], p[u])) in edges for u, v in edges):
            out.append(p)
    return out


def brute_force_floyd_warshall(g: Graph) -> list[list[float]]:
    inf = float("inf")
    d = [[0.0 if i == j else (1.0 if g.has_edge(i, j) else inf) for j in range(g.n)] for i in range(g.n)]
    for k in range(g.n):
        for i in range(g.n):
            for j in range(g.n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def _point_perms(g: Graph, perms, kind: str) -> list[list[int]]:
    rows = []
    for p in perms:
        vertex = list(p)
        edge = []
        for u, v in g.edges:
            a, b = sorted((p[u], p[v]))
            edge.append(g.edges.index((a, b)))
        if kind == "vertex":
            rows.append(vertex)
        elif kind == "edge":
            rows.append(edge)
        else:
            rows.append(vertex + [g.n + e for e in edge])
    return rows


def naive_distinguishing(g: Graph, kind: str, perms=None, max_points: int = 16) -> int:
    """Least d such that some labeling in {1..d}^N is fixed by no non-identity automorphism.

    Every labeling is generated; no symmetry breaking or early termination inside a level.
    """
    if perms is None:
        perms = brute_force_automorphisms(g)
    rows = _point_perms(g, perms, kind)
    N = g.n if kind == "vertex" else g.num_edges if kind == "edge" else g.n + g.num_edges
    if N > max_points:
        raise GraphError(f"{N} points is too many for the naive oracle")
    ident = list(range(N))
    nontrivial = [r for p, r in zip(perms, rows) if list(p) != list(range(g.n))]
    if any(r == ident for r in nontrivial):
        raise UndefinedQuantity("some automorphism fixes every point")
    if not nontrivial:
        return 1
    for d in range(1, N + 1):
        labelings = np.array(list(product(range(1, d + 1), repeat=N)), dtype=np.int8)
        fixed_by_some = np.zeros(len(labelings), dtype=bool)
        for r in nontrivial:
            fixed_by_some |= np.all(labelings[:, r] == labelings, axis=1)
        if not fixed_by_some.all():
            return d
    raise AssertionError("unreachable: distinct labels distinguish")
