"""Constructive distinguishing labelings of subdivisions and path powers.

Every constructor certifies its output against the full automorphism group
before returning; a construction that does not certify raises
``ConstructionFailure`` instead of handing back an uncertified labeling.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .distinguishing import (
    EDGE,
    VERTEX,
    Labeling,
    asymmetric_tuple_classes,
    complete_distinguishing,
    is_distinguishing,
    sphere_bound,
    tuple_bound,
)
from .errors import ConstructionFailure, GraphError
from .graph import Graph, path, star
from .powers import SubdividedGraph, power, subdivide
from .symmetry import AutomorphismSet, enumerate_automorphisms

log = logging.getLogger(__name__)


def _certified(g: Graph, labeling: Labeling, auts: AutomorphismSet | None = None) -> bool:
    return is_distinguishing(g, auts or enumerate_automorphisms(g), labeling)


def _require_base(g: Graph, allow_cycle: bool = False) -> None:
    if g.n < 3 or not g.is_connected():
        raise GraphError("base graph must be connected with at least 3 vertices")
    if not allow_cycle and g.is_cycle():
        raise GraphError("base graph must not be a cycle")


def _leg_labels(sg: SubdividedGraph, labels: list[int], center: int, tuples) -> None:
    leaves = sorted(u for u in sg.base.neighbors(center))
    for leaf, t in zip(leaves, tuples):
        for v, lab in zip(sg.superedge_path(center, leaf)[1:], t):
            labels[v] = lab


def star_subdivision_labeling(m: int, k: int, s: int) -> Labeling:
    """Vertex labeling of K_{1,m}^{1/k}: centre 1, each leg a distinct k-tuple over s labels."""
    if s < 2 or m < 2 or k < 1:
        raise GraphError("need m >= 2, k >= 1, s >= 2")
    if s**k < m:
        raise ConstructionFailure(f"only {s**k} distinct {k}-tuples over {s} labels for {m} legs (deficit {m - s**k})")
    sg = subdivide(star(m), k)
    labels = [1] * sg.graph.n
    _leg_labels(sg, labels, 0, product(range(1, s + 1), repeat=k))
    labeling = Labeling(VERTEX, s, vertex_labels=tuple(labels))
    if not _certified(sg.graph, labeling):
        raise ConstructionFailure(f"star labeling m={m} k={k} s={s} is not distinguishing")
    return labeling


@dataclass(frozen=True)
class SphereConstruction:
    """Outcome of the BFS/sphere construction before and after repair."""

    labeling: Labeling
    labels_allowed: int
    certified_unrepaired: bool
    repaired: bool
    note: str = ""


def _cycle_labeling(sg: SubdividedGraph) -> list[int]:
    # walk the subdivided cycle; label positions 0, 1, 3 with 2 (asymmetric for length >= 6)
    g = sg.graph
    walk = [0]
    prev, cur = None, 0
    while len(walk) < g.n:
        nxt = next(u for u in g.neighbors(cur) if u != prev)
        walk.append(nxt)
        prev, cur = cur, nxt
    labels = [1] * g.n
    for p in (0, 1, 3):
        if p < g.n:
            labels[walk[p]] = 2
    return labels


def _bfs_tree(g: Graph, root: int) -> tuple[dict[int, int], dict[int, list[int]], list[int]]:
    parent = {root: -1}
    children: dict[int, list[int]] = {v: [] for v in range(g.n)}
    order = []
    queue = deque([root])
    while queue:
        v = queue.popleft()
        order.append(v)
        for u in g.neighbors(v):
            if u not in parent:
                parent[u] = v
                children[v].append(u)
                queue.append(u)
    return parent, children, order


def _sphere_tuples(g: Graph, k: int, s: int) -> tuple[dict[tuple[int, int], tuple[int, ...]], int, str]:
    """Tuples for the tree superedges (parent, child), following the sphere-by-sphere construction."""
    ones = (1,) * k
    pool = [t for t in product(range(1, s + 1), repeat=k) if t != ones]
    v0 = min(range(g.n), key=lambda v: (-g.degrees[v], v))
    dist = g.distance_matrix[v0]
    parent, children, order = _bfs_tree(g, v0)
    s1 = sorted(g.neighbors(v0))
    has_s2 = [u for u in s1 if any(dist[w] == 2 for w in g.neighbors(u))]
    note = ""
    if has_s2:
        v1 = has_s2[0]
    else:
        v1 = s1[0]
        note = "root is adjacent to every vertex; second sphere is empty"
    v2 = next(u for u in s1 if u != v1)

    def take(count: int, offset: int = 0) -> list[tuple[int, ...]]:
        if offset + count > len(pool):
            raise ConstructionFailure(f"need {offset + count} non-constant {k}-tuples, only {len(pool)} over {s} labels")
        return pool[offset:offset + count]

    tuples: dict[tuple[int, int], tuple[int, ...]] = {}
    rest = [u for u in children[v0] if u not in (v1, v2)]
    tuples[(v0, v1)] = tuples[(v0, v2)] = ones
    for u, t in zip(rest, take(len(rest))):
        tuples[(v0, u)] = t
    a = len(children[v1])
    for u, t in zip(children[v1], take(a)):
        tuples[(v1, u)] = t
    b = len(children[v2])
    for u, t in zip(children[v2], take(b, 1 if a == b and a > 0 else 0)):
        tuples[(v2, u)] = t
    for v in order:
        if v in (v0, v1, v2):
            continue
        for u, t in zip(children[v], take(len(children[v]))):
            tuples[(v, u)] = t
    return tuples, v0, note


def bfs_sphere_construction(g: Graph, k: int, repair: bool = True) -> SphereConstruction:
    """Vertex labeling of G^{1/k} with sphere_bound(k, Delta) labels.

    Root: lowest-id vertex of maximum degree, labelled 2. Tree superedges get
    label tuples sphere by sphere (the two root legs towards v1 and v2 share the
    all-ones tuple); internal vertices of non-tree superedges get 2. If that
    labeling does not certify and ``repair`` is set, the non-tree internal
    vertices (then all internal vertices) are re-searched with the same label
    budget.
    """
    _require_base(g, allow_cycle=True)
    if k < 1:
        raise GraphError("k must be >= 1")
    sg = subdivide(g, k)
    auts = enumerate_automorphisms(sg.graph)
    s = sphere_bound(k, g.max_degree)
    labels = [1] * sg.graph.n
    note = ""
    free: list[int] = []
    try:
        if g.is_cycle():
            labels = _cycle_labeling(sg)
            s = max(s, 2)
        elif g.is_star():
            center = next(v for v in range(g.n) if g.degrees[v] == g.n - 1)
            _leg_labels(sg, labels, center, product(range(1, s + 1), repeat=k))
        else:
            tuples, v0, note = _sphere_tuples(g, k, s)
            labels[v0] = 2
            tree = set()
            for (p, u), t in tuples.items():
                tree.add((min(p, u), max(p, u)))
                for v, lab in zip(sg.superedge_path(p, u)[1:], t):
                    labels[v] = lab
            for e, internal in sg.superedges.items():
                if e not in tree:
                    for w in internal:
                        labels[w] = 2
                    free.extend(internal)
    except ConstructionFailure as exc:
        note = str(exc)
        ok = False
    else:
        ok = is_distinguishing(sg.graph, auts, Labeling(VERTEX, max(labels), vertex_labels=tuple(labels)))
    if ok:
        return SphereConstruction(Labeling(VERTEX, s, vertex_labels=tuple(labels)), s, True, False, note)
    if not repair:
        raise ConstructionFailure(f"sphere construction for k={k} does not certify ({note or 'not distinguishing'})")
    internal = list(range(g.n, sg.graph.n))
    for stage in (free, internal):
        if not stage:
            continue
        movable = set(stage)
        fixed = {v: labels[v] for v in range(sg.graph.n) if v not in movable}
        found = complete_distinguishing(sg.graph, VERTEX, fixed, s, auts)
        if found is not None:
            log.info("sphere construction repaired on %d free vertices", len(stage))
            return SphereConstruction(Labeling(VERTEX, s, vertex_labels=found.vertex_labels), s, False, True, note)
    raise ConstructionFailure(f"no distinguishing labeling of the subdivision with {s} labels extends the construction")


def bfs_sphere_labeling(g: Graph, k: int, repair: bool = True) -> Labeling:
    return bfs_sphere_construction(g, k, repair).labeling


def _require_distinguishing_edges(g: Graph, el: Labeling) -> None:
    if el.kind != EDGE:
        raise GraphError("an edge labeling is required")
    if not _certified(g, el):
        raise GraphError("input edge labeling is not distinguishing")


def edge_to_vertex_transfer(g: Graph, k: int, el: Labeling) -> Labeling:
    """Move the edge labels of each superedge of G^{1/k} onto the internal vertices of G^{1/(k+1)}."""
    _require_base(g)
    small = subdivide(g, k)
    _require_distinguishing_edges(small.graph, el)
    big = subdivide(g, k + 1)
    labels = [1] * big.graph.n
    for (i, j), internal in big.superedges.items():
        for w, e in zip(internal, small.superedge_edges(i, j)):
            labels[w] = el.edge_labels[e]
    labeling = Labeling(VERTEX, el.d, vertex_labels=tuple(labels))
    if not _certified(big.graph, labeling):
        raise ConstructionFailure("transferred labeling is not distinguishing")
    return labeling


def _classes(g: Graph, el: Labeling) -> dict[int, list[tuple[int, int]]]:
    classes: dict[int, list[tuple[int, int]]] = {}
    for e, lab in zip(g.edges, el.edge_labels):
        classes.setdefault(lab, []).append(e)
    return dict(sorted(classes.items()))


def _apply_class_tuples(sg: SubdividedGraph, classes, codes) -> list[int]:
    labels = [0] * sg.graph.num_edges
    for (lab, edges), code in zip(classes.items(), codes):
        for i, j in edges:
            for e, c in zip(sg.superedge_edges(i, j), code):
                labels[e] = c
    return labels


def pair_edge_labeling(g: Graph, el: Labeling) -> Labeling:
    """Edge labeling of G^{1/2}: each class of ``el`` gets its own multiset {a, b}.

    Repeats are allowed; an automorphism of the subdivision that keeps every
    multiset in place induces one of G that keeps the classes of ``el``.
    Starts at the least s with s(s+1)/2 >= number of classes and grows s until certified.
    """
    _require_base(g)
    _require_distinguishing_edges(g, el)
    sg = subdivide(g, 2)
    classes = _classes(g, el)
    s = 1
    while s * (s + 1) // 2 < len(classes):
        s += 1
    auts = enumerate_automorphisms(sg.graph)
    for s in range(s, s + g.num_edges + 1):
        pairs = list(combinations_with_replacement(range(1, s + 1), 2))[: len(classes)]
        labels = _apply_class_tuples(sg, classes, pairs)
        labeling = Labeling(EDGE, s, edge_labels=tuple(labels))
        if is_distinguishing(sg.graph, auts, labeling):
            return labeling
        log.warning("pair labeling with %d labels did not certify; trying %d", s, s + 1)
    raise ConstructionFailure("pair labeling never certified")


def asymmetric_tuples(s: int, k: int, count: int) -> list[tuple[int, ...]]:
    """First ``count`` k-tuples over 1..s in lexicographic order that are not palindromes
    and whose reversal was not already taken."""
    chosen: list[tuple[int, ...]] = []
    seen = set()
    for t in product(range(1, s + 1), repeat=k):
        if len(chosen) == count:
            break
        if t == t[::-1] or t[::-1] in seen:
            continue
        chosen.append(t)
        seen.add(t)
    return chosen


def tuple_edge_labeling(g: Graph, k: int, el: Labeling) -> Labeling:
    """Edge labeling of G^{1/k}: one non-palindromic k-tuple per class, oriented from the lower endpoint."""
    _require_base(g)
    if k < 2:
        raise GraphError("k must be >= 2")
    _require_distinguishing_edges(g, el)
    sg = subdivide(g, k)
    classes = _classes(g, el)
    auts = enumerate_automorphisms(sg.graph)
    s = tuple_bound(len(classes), k)
    for s in range(s, s + g.num_edges + 1):
        if asymmetric_tuple_classes(s, k) < len(classes):
            log.warning("tuple pool over %d labels exhausted", s)
            continue
        labels = _apply_class_tuples(sg, classes, asymmetric_tuples(s, k, len(classes)))
        labeling = Labeling(EDGE, s, edge_labels=tuple(labels))
        if is_distinguishing(sg.graph, auts, labeling):
            return labeling
        log.warning("tuple labeling with %d labels did not certify; trying %d", s, s + 1)
    raise ConstructionFailure("tuple labeling never certified")


def path_power_claimed_value(n: int, k: int) -> int:
    """2 for k <= radius(P_n), else 2k - n, as stated for D(P_n^k)."""
    return 2 if k <= n // 2 else 2 * k - n


def path_power_labeling(n: int, k: int) -> Labeling:
    """Vertex labeling of P_n^k from the degree structure.

    Mirror pairs x_i, x_{n-1-i} of non-maximal degree get labels 1 and 2; when
    k exceeds the radius, the vertices adjacent to everything form a clique of
    twins and get distinct labels.
    """
    if n < 4 or not 1 <= k <= n - 1:
        raise GraphError("need n >= 4 and 1 <= k <= n-1")
    g = power(path(n), k)
    labels = [1] * n
    if k <= n // 2:
        for i in range(k):
            if i < n - 1 - i:
                labels[n - 1 - i] = 2
    else:
        clique = [i for i in range(n) if i <= k and n - 1 - i <= k]
        for lab, v in enumerate(clique, 1):
            labels[v] = lab
        for i in range(n - 1 - k):
            labels[i], labels[n - 1 - i] = 1, 2
    labeling = Labeling(VERTEX, max(labels), vertex_labels=tuple(labels))
    if not _certified(g, labeling):
        raise ConstructionFailure(f"path power labeling n={n} k={k} is not distinguishing")
    return labeling
