"""Exact distinguishing number, index and total distinguishing number, plus closed-form bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded, GraphError, UndefinedQuantity
from .graph import Graph
from .symmetry import AutomorphismSet, enumerate_automorphisms, labeling_stabilizer, point_action

VERTEX, EDGE, TOTAL = "vertex", "edge", "total"
KINDS = (VERTEX, EDGE, TOTAL)
QUANTITY_KIND = {"D": VERTEX, "Dprime": EDGE, "Dtotal": TOTAL}
DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class Labeling:
    """Labels 1..d on vertices, canonical edges, or both (``total``)."""

    kind: str
    d: int
    vertex_labels: tuple[int, ...] | None = None
    edge_labels: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GraphError(f"unknown labeling kind {self.kind!r}")
        wants_v = self.kind in (VERTEX, TOTAL)
        wants_e = self.kind in (EDGE, TOTAL)
        if wants_v != (self.vertex_labels is not None) or wants_e != (self.edge_labels is not None):
            raise GraphError(f"{self.kind} labeling has the wrong label domains")
        for lab in (self.vertex_labels or ()) + (self.edge_labels or ()):
            if not 1 <= lab <= self.d:
                raise GraphError(f"label {lab} outside 1..{self.d}")

    @classmethod
    def from_points(cls, kind: str, g: Graph, labels: Sequence[int]) -> "Labeling":
        labels = tuple(int(x) for x in labels)
        d = max(labels, default=1)
        if kind == VERTEX:
            return cls(kind, d, vertex_labels=labels)
        if kind == EDGE:
            return cls(kind, d, edge_labels=labels)
        return cls(kind, d, vertex_labels=labels[: g.n], edge_labels=labels[g.n:])

    @property
    def labels_used(self) -> int:
        return len(set((self.vertex_labels or ()) + (self.edge_labels or ())))

    def point_labels(self, g: Graph) -> list[int]:
        """Labels in point order (vertices, then edges for total labelings), validated against ``g``."""
        if self.vertex_labels is not None and len(self.vertex_labels) != g.n:
            raise GraphError(f"vertex labeling covers {len(self.vertex_labels)} of {g.n} vertices")
        if self.edge_labels is not None and len(self.edge_labels) != g.num_edges:
            raise GraphError(f"edge labeling covers {len(self.edge_labels)} of {g.num_edges} edges")
        return list(self.vertex_labels or ()) + list(self.edge_labels or ())

    def to_json(self) -> dict:
        out = {"kind": self.kind, "d": self.d}
        if self.vertex_labels is not None:
            out["vertex_labels"] = {str(v): lab for v, lab in enumerate(self.vertex_labels)}
        if self.edge_labels is not None:
            out["edge_labels"] = {str(i): lab for i, lab in enumerate(self.edge_labels)}
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Labeling":
        def ordered(m):
            return None if m is None else tuple(m[str(i)] for i in range(len(m)))

        return cls(data["kind"], data["d"], ordered(data.get("vertex_labels")), ordered(data.get("edge_labels")))


def is_distinguishing(g: Graph, auts: AutomorphismSet, labeling: Labeling) -> bool:
    return labeling_stabilizer(auts, labeling, g).order == 1


def search_order(g: Graph, kind: str) -> list[int]:
    """Point order for the search: BFS over vertices, each edge placed right after its later endpoint.

    Placing points of one neighbourhood together lets automorphism supports close early.
    """
    seen = [False] * g.n
    vorder = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        while queue:
            v = queue.pop(0)
            vorder.append(v)
            for u in g.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    if kind == VERTEX:
        return vorder
    pos = {v: i for i, v in enumerate(vorder)}
    order = []
    for v in vorder:
        if kind == TOTAL:
            order.append(v)
        back = sorted((pos[u], u) for u in g.neighbors(v) if pos[u] < pos[v])
        offset = g.n if kind == TOTAL else 0
        order.extend(offset + g.index_of_edge(u, v) for _, u in back)
    return order


class _Search:
    """Depth-first labeling search with stabilizer filtering.

    Points are relabelled so the search visits them as 0..N-1. ``alive`` holds
    the non-identity group elements not yet contradicted by the labeled prefix;
    an element is contradicted once some x and its image are both labeled with
    different labels.
    """

    def __init__(self, P: np.ndarray, budget: int):
        N = P.shape[1]
        ident = np.arange(N)
        P = P[np.any(P != ident, axis=1)]
        P = np.unique(P, axis=0) if len(P) else P.reshape(0, N)
        inv = np.empty_like(P)
        rows = np.arange(len(P))[:, None]
        inv[rows, P] = ident
        moved = P != ident
        close = np.where(moved, ident, -1).max(axis=1) if len(P) else np.zeros(0, dtype=int)
        by_close = np.argsort(close, kind="stable")
        self.P, self.inv, self.close = P[by_close], inv[by_close], close[by_close]
        self.N = N
        self.budget = budget
        self.nodes = 0

    def run(self, d: int, prefix: Sequence[int] = ()) -> list[int] | None:
        """Search labelings in {1..d}; points 0..len(prefix)-1 are pinned to ``prefix``.

        Without a prefix, labels are interchangeable, so first occurrences are
        forced into increasing order. A pinned prefix disables that pruning.
        """
        self.labels = np.zeros(self.N, dtype=np.int32)
        self.d = d
        alive = np.arange(len(self.P))
        for i, c in enumerate(prefix):
            if alive.size == 0:
                break
            alive = alive[~self._killed(i, alive, c)]
            self.labels[i] = c
            if alive.size and self.close[alive[0]] <= i:
                return None
        start = len(prefix)
        self.labels[:start] = prefix
        if alive.size == 0:
            self.labels[start:] = 1
            return self.labels.tolist()
        maxlab = d if prefix else 0
        return self.labels.tolist() if self._dfs(start, alive, maxlab) else None

    def _killed(self, i: int, alive: np.ndarray, c: int) -> np.ndarray:
        fwd = self.P[alive, i]
        bwd = self.inv[alive, i]
        fwd_lab = np.where(fwd < i, self.labels[fwd], 0)
        bwd_lab = np.where(bwd < i, self.labels[bwd], 0)
        return ((fwd_lab != 0) & (fwd_lab != c)) | ((bwd_lab != 0) & (bwd_lab != c))

    def _dfs(self, i: int, alive: np.ndarray, maxlab: int) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.budget)
        fwd = self.P[alive, i]
        bwd = self.inv[alive, i]
        fwd_lab = np.where(fwd < i, self.labels[fwd], 0)
        bwd_lab = np.where(bwd < i, self.labels[bwd], 0)
        for c in range(1, min(self.d, maxlab + 1) + 1):
            kill = ((fwd_lab != 0) & (fwd_lab != c)) | ((bwd_lab != 0) & (bwd_lab != c))
            rest = alive[~kill]
            self.labels[i] = c
            if rest.size == 0:
                self.labels[i + 1:] = 1
                return True
            if self.close[rest[0]] <= i:
                continue
            if self._dfs(i + 1, rest, max(maxlab, c)):
                return True
        self.labels[i] = 0
        return False


def _check_defined(P: np.ndarray) -> None:
    trivial_action = np.all(P == np.arange(P.shape[1]), axis=1)
    if trivial_action.sum() > 1:
        raise UndefinedQuantity("a non-identity automorphism fixes every labelled point")


def find_distinguishing(
    g: Graph,
    kind: str,
    auts: AutomorphismSet | None = None,
    budget: int = DEFAULT_BUDGET,
) -> tuple[int, Labeling]:
    """Least label count admitting a distinguishing labeling of ``kind``, with a certificate.

    Tries d = 1, 2, ... and returns the first d for which the search succeeds;
    raises ``BudgetExceeded`` rather than returning a non-exact answer.
    """
    if auts is None:
        auts = enumerate_automorphisms(g)
    P = point_action(g, auts, kind)
    _check_defined(P)
    N = P.shape[1]
    order = np.asarray(search_order(g, kind), dtype=np.int64)
    pos = np.empty(N, dtype=np.int64)
    pos[order] = np.arange(N)
    search = _Search(pos[P[:, order]] if N else P, budget)
    for d in range(1, N + 2):
        found = search.run(d)
        if found is None:
            continue
        labels = [0] * N
        for i, lab in enumerate(found):
            labels[order[i]] = lab
        labeling = Labeling.from_points(kind, g, labels)
        if not is_distinguishing(g, auts, labeling):
            raise AssertionError("search produced an uncertified labeling")
        return d, labeling
    raise AssertionError("all-distinct labels must distinguish a faithful action")


def complete_distinguishing(
    g: Graph,
    kind: str,
    fixed: dict[int, int],
    d: int,
    auts: AutomorphismSet | None = None,
    budget: int = DEFAULT_BUDGET,
) -> Labeling | None:
    """Extend the partial labeling ``fixed`` (point -> label) to a distinguishing one over 1..d.

    Returns ``None`` when no extension exists.
    """
    if auts is None:
        auts = enumerate_automorphisms(g)
    P = point_action(g, auts, kind)
    _check_defined(P)
    N = P.shape[1]
    pinned = sorted(fixed)
    rest = [p for p in search_order(g, kind) if p not in fixed]
    order = np.asarray(pinned + rest, dtype=np.int64)
    pos = np.empty(N, dtype=np.int64)
    pos[order] = np.arange(N)
    search = _Search(pos[P[:, order]] if N else P, budget)
    found = search.run(d, [fixed[p] for p in pinned])
    if found is None:
        return None
    labels = [0] * N
    for i, lab in enumerate(found):
        labels[order[i]] = lab
    labeling = Labeling.from_points(kind, g, labels)
    if not is_distinguishing(g, auts, labeling):
        raise AssertionError("completion produced an uncertified labeling")
    return labeling


def distinguishing_number(g: Graph, auts: AutomorphismSet | None = None, budget: int = DEFAULT_BUDGET) -> int:
    return find_distinguishing(g, VERTEX, auts, budget)[0]


def distinguishing_index(g: Graph, auts: AutomorphismSet | None = None, budget: int = DEFAULT_BUDGET) -> int:
    """D'(G); raises ``UndefinedQuantity`` when some automorphism fixes every edge (e.g. K_2)."""
    return find_distinguishing(g, EDGE, auts, budget)[0]


def total_distinguishing_number(
    g: Graph, auts: AutomorphismSet | None = None, budget: int = DEFAULT_BUDGET
) -> int:
    return find_distinguishing(g, TOTAL, auts, budget)[0]


def sqrt_degree_bound(delta: int) -> int:
    """ceil(sqrt(delta))."""
    if delta < 1:
        raise GraphError("maximum degree must be >= 1")
    return math.isqrt(delta - 1) + 1


def sphere_count(s: int, k: int) -> int:
    """2^k + sum_{j=3}^{s} j^(k-1)."""
    return 2**k + sum(j ** (k - 1) for j in range(3, s + 1))


def sphere_bound(k: int, delta: int) -> int:
    """min{s >= 2 : 2^k + sum_{j=3}^{s} j^(k-1) >= delta}."""
    if k < 1 or delta < 1:
        raise GraphError("need k >= 1 and delta >= 1")
    s = 2
    while sphere_count(s, k) < delta:
        s += 1
    return s


def pair_bound(dprime: int) -> int:
    """ceil((-1 + sqrt(1 + 8 D')) / 2), i.e. min{s : s(s+1)/2 >= D'}."""
    if dprime < 1:
        raise GraphError("distinguishing index must be >= 1")
    s = (math.isqrt(8 * dprime + 1) - 1) // 2
    while s * (s + 1) // 2 < dprime:
        s += 1
    return s


def asymmetric_tuple_classes(s: int, k: int) -> int:
    """Reversal classes of non-palindromic k-tuples over s labels."""
    return (s**k - s ** ((k + 1) // 2)) // 2


def tuple_bound(dprime: int, k: int) -> int:
    """min{s : asymmetric_tuple_classes(s, k) >= D'}."""
    if dprime < 1 or k < 2:
        raise GraphError("need D' >= 1 and k >= 2")
    s = 1
    while asymmetric_tuple_classes(s, k) < dprime:
        s += 1
    return s
