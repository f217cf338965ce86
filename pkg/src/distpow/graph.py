"""Immutable simple graphs on vertices 0..n-1 backed by adjacency bitsets."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .errors import CapExceeded, GraphError

UNREACHABLE = -1
DEFAULT_HAMILTONIAN_CAP = 12


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph. ``adj[v]`` is the neighbour bitset of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    @cached_property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Canonical edge list: pairs (u, v) with u < v in lexicographic order."""
        return tuple((u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1)))

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def index_of_edge(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def is_cycle(self) -> bool:
        return self.n >= 3 and all(d == 2 for d in self.degrees) and self.is_connected()

    def is_path(self) -> bool:
        if self.n == 1:
            return True
        if not self.is_connected() or self.num_edges != self.n - 1:
            return False
        return max(self.degrees) <= 2

    def is_star(self) -> bool:
        """True for K_{1,m}, m >= 2."""
        return (
            self.n >= 3
            and self.num_edges == self.n - 1
            and self.max_degree == self.n - 1
        )

    def is_bipartite(self) -> bool:
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for u in _bits(self.adj[v]):
                    if side[u] < 0:
                        side[u] = 1 - side[v]
                        queue.append(u)
                    elif side[u] == side[v]:
                        return False
        return True

    def bfs_distances(self, source: int) -> list[int]:
        dist = [UNREACHABLE] * self.n
        dist[source] = 0
        seen = 1 << source
        frontier = 1 << source
        level = 0
        while frontier:
            level += 1
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            for v in _bits(frontier):
                dist[v] = level
        return dist

    @cached_property
    def distance_matrix(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.bfs_distances(v)) for v in range(self.n))


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on ``n`` vertices with the given edges; duplicates are collapsed."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {tuple(pair)} has an id outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return build(n, combinations(range(n), 2))


def star(m: int) -> Graph:
    """K_{1,m} with centre 0."""
    if m < 1:
        raise GraphError("star needs m >= 1")
    return build(m + 1, [(0, j) for j in range(1, m + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs both sides >= 1")
    return build(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def fan2() -> Graph:
    """K_1 + 2K_2: apex 0 joined to the disjoint edges 1-2 and 3-4."""
    return build(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)])


_FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "complete_bipartite": complete_bipartite,
    "fan2": fan2,
}


def family(kind: str, *params: int) -> Graph:
    try:
        ctor = _FAMILIES[kind]
    except KeyError:
        raise GraphError(f"unknown family {kind!r}; expected one of {sorted(_FAMILIES)}") from None
    return ctor(*params)


@dataclass(frozen=True)
class Metrics:
    dist: tuple[tuple[int, ...], ...]
    connected: bool
    ecc: tuple[int, ...] | None
    radius: int | None
    diameter: int | None
    center: frozenset[int] | None


def metrics(g: Graph) -> Metrics:
    """Distances by BFS; eccentricity data is ``None`` for disconnected graphs."""
    dist = g.distance_matrix
    connected = all(UNREACHABLE not in row for row in dist)
    if not connected or g.n == 0:
        return Metrics(dist, connected, None, None, None, None)
    ecc = tuple(max(row) for row in dist)
    r, d = min(ecc), max(ecc)
    center = frozenset(v for v in range(g.n) if ecc[v] == r)
    return Metrics(dist, True, ecc, r, d, center)


def sphere(g: Graph, x: int, k: int) -> frozenset[int]:
    """Vertices at distance exactly ``k`` from ``x``."""
    if not 0 <= x < g.n:
        raise GraphError(f"vertex {x} out of range")
    if k < 0:
        raise GraphError("sphere radius must be non-negative")
    return frozenset(v for v, d in enumerate(g.distance_matrix[x]) if d == k)


def graph_equal(g1: Graph, g2: Graph) -> bool:
    """Equality under the identity vertex map (not isomorphism)."""
    return g1.n == g2.n and g1.adj == g2.adj


def _check_ham_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise CapExceeded("hamiltonian", cap, f"graph has {g.n} vertices")


def _extend_path(g: Graph, v: int, visited: int, full: int, target: int | None) -> bool:
    if visited == full:
        return target is None or v == target
    free = g.adj[v] & ~visited
    if target is not None:
        # the target may only be entered last
        if visited | (1 << target) != full:
            free &= ~(1 << target)
    # every unvisited vertex other than the path end needs a way in
    rest = full & ~visited
    for u in _bits(rest):
        if not g.adj[u] & (rest | (1 << v)) and rest != 1 << u:
            return False
    for u in _bits(free):
        if _extend_path(g, u, visited | (1 << u), full, target):
            return True
    return False


def hamiltonian_path_exists(g: Graph, cap: int = DEFAULT_HAMILTONIAN_CAP) -> bool:
    """Exact backtracking test for a Hamiltonian path; raises ``CapExceeded`` above ``cap`` vertices."""
    _check_ham_cap(g, cap)
    if g.n <= 1:
        return True
    if not g.is_connected():
        return False
    full = (1 << g.n) - 1
    # start from a degree-1 vertex if one exists: it must be an endpoint
    starts = [v for v in range(g.n) if g.degrees[v] == 1] or list(range(g.n))
    if len(starts) > 2 and g.degrees[starts[0]] == 1:
        return False
    return any(_extend_path(g, s, 1 << s, full, None) for s in starts)


def hamiltonian_path_between(g: Graph, s: int, t: int, cap: int = DEFAULT_HAMILTONIAN_CAP) -> bool:
    _check_ham_cap(g, cap)
    if s == t:
        return g.n == 1
    return _extend_path(g, s, 1 << s, (1 << g.n) - 1, t)


def hamiltonian_cycle_exists(g: Graph, cap: int = DEFAULT_HAMILTONIAN_CAP) -> bool:
    _check_ham_cap(g, cap)
    if g.n < 3 or min(g.degrees) < 2:
        return False
    full = (1 << g.n) - 1
    return any(
        _extend_path(g, 0, 1, full, u) for u in g.neighbors(0)
    ) if g.is_connected() else False
