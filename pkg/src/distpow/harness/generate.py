"""Small-graph enumeration: exhaustive up to isomorphism for n <= 7, seeded sampling above."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from ..errors import GraphError
from ..graph import Graph, build
from ..symmetry import refined_colors

EXHAUSTIVE_MAX_N = 7
RANDOM_MAX_N = 10


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Lexicographically least upper-triangle bit string over colour-respecting relabellings.

    Vertex colours are isomorphism invariant, so the minimum is taken over a set
    of orderings that is the same for isomorphic graphs.
    """
    n = g.n
    colors = refined_colors(g)
    cells = sorted(set(colors))
    slot_color = [c for c in cells for _ in range(colors.count(c))]
    best: list[int] | None = None
    chosen: list[int] = []
    used = [False] * n
    bits: list[int] = []

    def place(p: int) -> None:
        nonlocal best
        if p == n:
            if best is None or bits < best:
                best = bits.copy()
            return
        for v in range(n):
            if used[v] or colors[v] != slot_color[p]:
                continue
            col = [g.adj[v] >> chosen[q] & 1 for q in range(p)]
            mark = len(bits)
            bits.extend(col)
            if best is None or bits <= best[: len(bits)]:
                used[v] = True
                chosen.append(v)
                place(p + 1)
                chosen.pop()
                used[v] = False
            del bits[mark:]

    place(0)
    return n, tuple(best or ())


def from_canonical(form: tuple[int, tuple[int, ...]]) -> Graph:
    n, bits = form
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build(n, edges)


@lru_cache(maxsize=None)
def _all_forms(n: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    if n == 0:
        return ((0, ()),)
    forms = set()
    for form in _all_forms(n - 1):
        small = from_canonical(form)
        for mask in range(1 << (n - 1)):
            edges = list(small.edges) + [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            forms.add(canonical_form(build(n, edges)))
    return tuple(sorted(forms))


def enumerate_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on n vertices (connected or not)."""
    if not 0 <= n <= EXHAUSTIVE_MAX_N:
        raise GraphError(f"exhaustive generation supports 0 <= n <= {EXHAUSTIVE_MAX_N}, got {n}")
    return [from_canonical(f) for f in _all_forms(n)]


def enumerate_connected_graphs(n: int) -> list[Graph]:
    """Connected graphs on n vertices, one per isomorphism class, in canonical-form order."""
    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        raise GraphError(f"exhaustive generation supports 1 <= n <= {EXHAUSTIVE_MAX_N}, got {n}")
    return [g for g in enumerate_graphs(n) if g.is_connected()]


def random_connected_graphs(n: int, count: int, seed: int, p: float = 0.35) -> Iterator[Graph]:
    """Seeded G(n, p) samples conditioned on connectivity (isomorphic repeats possible)."""
    if not EXHAUSTIVE_MAX_N < n <= RANDOM_MAX_N:
        raise GraphError(f"random sampling supports {EXHAUSTIVE_MAX_N} < n <= {RANDOM_MAX_N}, got {n}")
    rng = random.Random(f"{seed}:{n}")
    pairs = list(combinations(range(n), 2))
    made = 0
    while made < count:
        g = build(n, [e for e in pairs if rng.random() < p])
        if g.is_connected():
            made += 1
            yield g
