"""Claim registry: one checker per statement, each evaluated instance by instance.

A checker yields ``(instance, thunk)`` pairs. The runner calls every thunk
exactly once and turns it into a record; cap, budget and undefined-quantity
signals become SKIP records with the reason attached.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Callable, Iterator

from .. import graph6
from ..distinguishing import (
    DEFAULT_BUDGET,
    EDGE,
    TOTAL,
    VERTEX,
    find_distinguishing,
    sqrt_degree_bound,
    pair_bound,
    sphere_bound,
    tuple_bound,
)
from ..errors import CapExceeded, ConstructionFailure, UndefinedQuantity
from ..graph import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    hamiltonian_cycle_exists,
    hamiltonian_path_between,
    hamiltonian_path_exists,
    metrics,
    path,
    star,
)
from ..labelers import (
    bfs_sphere_construction,
    edge_to_vertex_transfer,
    pair_edge_labeling,
    tuple_edge_labeling,
)
from ..powers import (
    POWER_THEN_SUBDIVIDE,
    SUBDIVIDE_THEN_POWER,
    fractional_power,
    power,
    power_distance_claim,
    subdivide,
)
from ..symmetry import (
    DEFAULT_ORDER_CAP,
    AutomorphismSet,
    enumerate_automorphisms,
    is_automorphism,
    restrict_to_base,
)
from .generate import EXHAUSTIVE_MAX_N, enumerate_connected_graphs, random_connected_graphs

PASS, FAIL = "PASS", "FAIL"


@dataclass(frozen=True)
class Limits:
    max_n: int = 6
    max_k: int = 3
    family_n: int = 8
    frac_max_n: int = 5
    budget: int = DEFAULT_BUDGET
    aut_cap: int = DEFAULT_ORDER_CAP
    ham_cap: int = 12
    samples: int = 20
    seed: int = 0

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class ClaimReport:
    claim: str
    instance: dict
    expected: object
    computed: object
    verdict: str

    def to_json(self) -> dict:
        return asdict(self)


Thunk = Callable[[], tuple[object, object, bool]]


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    checker: Callable[["Context"], Iterator[tuple[dict, Thunk]]]
    report_only: bool = False


REGISTRY: dict[str, Claim] = {}


def claim(cid: str, description: str, report_only: bool = False):
    def register(fn):
        if cid in REGISTRY:
            raise ValueError(f"duplicate claim id {cid}")
        REGISTRY[cid] = Claim(cid, description, fn, report_only)
        return fn

    return register


@dataclass
class Context:
    """Per-run memo tables over immutable graphs."""

    limits: Limits
    _auts: dict = field(default_factory=dict)
    _dist: dict = field(default_factory=dict)
    _subdiv: dict = field(default_factory=dict)

    def aut(self, g: Graph) -> AutomorphismSet:
        if g not in self._auts:
            self._auts[g] = enumerate_automorphisms(g, order_cap=self.limits.aut_cap)
        return self._auts[g]

    def solve(self, g: Graph, kind: str):
        key = (g, kind)
        if key not in self._dist:
            try:
                self._dist[key] = find_distinguishing(g, kind, self.aut(g), self.limits.budget)
            except (CapExceeded, UndefinedQuantity) as exc:
                self._dist[key] = exc
        result = self._dist[key]
        if isinstance(result, Exception):
            raise result
        return result

    def D(self, g: Graph) -> int:
        return self.solve(g, VERTEX)[0]

    def Dp(self, g: Graph) -> int:
        return self.solve(g, EDGE)[0]

    def Dt(self, g: Graph) -> int:
        return self.solve(g, TOTAL)[0]

    def sub(self, g: Graph, k: int):
        if (g, k) not in self._subdiv:
            self._subdiv[(g, k)] = subdivide(g, k)
        return self._subdiv[(g, k)]

    def connected(self, lo: int = 1, hi: int | None = None) -> list[Graph]:
        top = self.limits.max_n if hi is None else min(hi, self.limits.max_n)
        out = []
        for n in range(lo, top + 1):
            if n <= EXHAUSTIVE_MAX_N:
                out.extend(enumerate_connected_graphs(n))
            else:
                out.extend(random_connected_graphs(n, self.limits.samples, self.limits.seed))
        return out

    def base_graphs(self, hi: int | None = None) -> list[Graph]:
        """Connected, order >= 3, not a cycle."""
        return [g for g in self.connected(3, hi) if not g.is_cycle()]


def inst(g: Graph, **params) -> dict:
    return {"graph6": graph6.write(g), **params}


def at_most(computed: int, bound: int) -> tuple[object, object, bool]:
    return f"<= {bound}", computed, computed <= bound


def at_least(computed: int, bound: int) -> tuple[object, object, bool]:
    return f">= {bound}", computed, computed >= bound


def equal(expected, computed) -> tuple[object, object, bool]:
    return expected, computed, expected == computed


def _range_skip(reason: str) -> Iterator[tuple[dict, Thunk]]:
    def thunk():
        raise CapExceeded("instance range", 0, reason)

    yield {"range": reason}, thunk


# ---------------------------------------------------------------- natural powers


@claim("L2.i", "G^t is complete for every t >= diam(G)")
def _l2i(ctx):
    for g in ctx.connected():
        d = metrics(g).diameter
        for t in sorted({max(d, 1), d + 1}):
            yield inst(g, t=t), lambda g=g, t=t: equal(True, power(g, t).is_complete())


@claim("L2.ii", "G^{mn} = (G^m)^n under the identity map")
def _l2ii(ctx):
    ks = range(1, min(3, ctx.limits.max_k) + 1)
    for g in ctx.connected():
        for m, n in product(ks, ks):
            yield inst(g, m=m, n=n), lambda g=g, m=m, n=n: equal(True, power(g, m * n) == power(power(g, m), n))


@claim("L2.iii", "d_{G^k}(x, y) = q + r where d_G(x, y) = kq + r")
def _l2iii(ctx):
    for n in range(2, ctx.limits.family_n + 1):
        g = path(n)
        for k in range(1, ctx.limits.max_k + 1):
            gk = power(g, k)
            for y in range(1, n):
                yield inst(g, k=k, x=0, y=y, d=y), lambda gk=gk, k=k, y=y: equal(
                    power_distance_claim(y, k), gk.distance_matrix[0][y]
                )


@claim("T2.2.i", "Aut(G) is a subgroup of Aut(G^k), k >= 2")
def _t22i(ctx):
    for g in ctx.connected():
        for k in range(2, ctx.limits.max_k + 1):
            def thunk(g=g, k=k):
                gk = power(g, k)
                return equal(True, all(is_automorphism(gk, p) for p in ctx.aut(g)))

            yield inst(g, k=k), thunk


@claim("T2.2.ii", "Aut(G^{2t-1}) is a subgroup of Aut(G^{2t}), 1 <= t <= r")
def _t22ii(ctx):
    for g in ctx.connected(2):
        for t in range(1, metrics(g).radius + 1):
            def thunk(g=g, t=t):
                odd, even = power(g, 2 * t - 1), power(g, 2 * t)
                if even.is_complete():
                    return equal(True, True)
                return equal(True, all(is_automorphism(even, p) for p in ctx.aut(odd)))

            yield inst(g, t=t), thunk


@claim("C2.3.i", "D(G) <= D(G^k), k >= 2")
def _c23i(ctx):
    for g in ctx.connected():
        for k in range(2, ctx.limits.max_k + 1):
            yield inst(g, k=k), lambda g=g, k=k: at_least(ctx.D(power(g, k)), ctx.D(g))


@claim("C2.3.ii", "D(G^{2t-1}) <= D(G^{2t}), 1 <= t <= r")
def _c23ii(ctx):
    for g in ctx.connected(2):
        for t in range(1, metrics(g).radius + 1):
            yield inst(g, t=t), lambda g=g, t=t: at_least(ctx.D(power(g, 2 * t)), ctx.D(power(g, 2 * t - 1)))


@claim("T2.4", "D(G^{r+i}) >= |{x : d(x, Z(G)) <= i}| for 0 <= i <= d - r")
def _t24(ctx):
    for g in ctx.connected(2):
        met = metrics(g)
        for i in range(met.diameter - met.radius + 1):
            ball = sum(1 for x in range(g.n) if any(met.dist[z][x] <= i for z in met.center))
            yield inst(g, i=i), lambda g=g, i=i, ball=ball, r=met.radius: at_least(ctx.D(power(g, r + i)), ball)


@claim("T2.5", "G^3 is Hamiltonian connected for connected G")
def _t25(ctx):
    for g in ctx.connected(1, ctx.limits.ham_cap):
        def thunk(g=g):
            cube = power(g, 3)
            ok = all(
                hamiltonian_path_between(cube, s, t, ctx.limits.ham_cap)
                for s in range(g.n)
                for t in range(s + 1, g.n)
            ) and hamiltonian_path_exists(cube, ctx.limits.ham_cap)
            return equal(True, ok)

        yield inst(g), thunk


@claim("T2.6", "traceable G of order >= 7 has D'(G) <= 2")
def _t26(ctx):
    graphs = ctx.connected(7)
    if not graphs:
        yield from _range_skip(f"needs n >= 7, max_n = {ctx.limits.max_n}")
    for g in graphs:
        def thunk(g=g):
            if not hamiltonian_path_exists(g, ctx.limits.ham_cap):
                return "<= 2 (traceable only)", "not traceable", True
            return at_most(ctx.Dp(g), 2)

        yield inst(g), thunk


@claim("C2.6", "D'(G^i) <= 2 for connected G of order >= 7, i >= 3")
def _c26(ctx):
    graphs = ctx.connected(7)
    if not graphs:
        yield from _range_skip(f"needs n >= 7, max_n = {ctx.limits.max_n}")
    for g in graphs:
        for i in range(3, max(3, ctx.limits.max_k) + 1):
            yield inst(g, i=i), lambda g=g, i=i: at_most(ctx.Dp(power(g, i)), 2)


@claim("R2.6.a", "non-path connected G with n <= 5 has diameter <= 3")
def _r26a(ctx):
    for g in ctx.connected(1, 5):
        if not g.is_path():
            yield inst(g), lambda g=g: at_most(metrics(g).diameter, 3)


@claim("R2.6.b", "non-path connected G with 3 <= n <= 5 has D'(G^i) = D'(K_n) = 3, i >= 3")
def _r26b(ctx):
    for g in ctx.connected(3, 5):
        if not g.is_path():
            for i in range(3, max(3, ctx.limits.max_k) + 1):
                yield inst(g, i=i), lambda g=g, i=i: equal(3, ctx.Dp(power(g, i)))


def _diameter_four_non_paths() -> list[Graph]:
    return [g for g in enumerate_connected_graphs(6) if not g.is_path() and metrics(g).diameter == 4]


@claim("R2.6.c", "exactly eight non-path connected graphs of order 6 have diameter 4")
def _r26c(ctx):
    if ctx.limits.max_n < 6:
        yield from _range_skip(f"needs n = 6, max_n = {ctx.limits.max_n}")
        return
    yield {"n": 6}, lambda: equal(8, len(_diameter_four_non_paths()))


@claim("R2.6.d", "those diameter-4 graphs have D'(G^3) <= 3 and D'(G^i) = 2 for i >= 4")
def _r26d(ctx):
    if ctx.limits.max_n < 6:
        yield from _range_skip(f"needs n = 6, max_n = {ctx.limits.max_n}")
        return
    for g in _diameter_four_non_paths():
        yield inst(g, i=3), lambda g=g: at_most(ctx.Dp(power(g, 3)), 3)
        yield inst(g, i=4), lambda g=g: equal(2, ctx.Dp(power(g, 4)))


@claim("T2.7", "D(P_n^k) = 2 for k <= r and 2k - n for r < k <= d")
def _t27(ctx):
    for n in range(4, ctx.limits.family_n + 1):
        for k in range(2, n):
            expected = 2 if k <= n // 2 else 2 * k - n
            yield inst(path(n), n=n, k=k), lambda n=n, k=k, e=expected: equal(e, ctx.D(power(path(n), k)))


@claim("C2.8", "D'(P_n^k) = D'(P_n) for k <= r and D'(K_{2k-n-2}) for r < k <= d")
def _c28(ctx):
    for n in range(3, ctx.limits.family_n + 1):
        for k in range(2, n):
            def thunk(n=n, k=k):
                computed = ctx.Dp(power(path(n), k))
                if k <= n // 2:
                    return equal(ctx.Dp(path(n)), computed)
                m = 2 * k - n - 2
                if m < 3:
                    return f"D'(K_m) with m = 2k-n-2 = {m} is undefined", computed, False
                return equal(ctx.Dp(complete(m)), computed)

            yield inst(path(n), n=n, k=k), thunk


@claim("C2.9", "D'(G^m) <= 3 for m >= 3")
def _c29(ctx):
    for g in ctx.connected(3):
        for m in range(3, max(3, ctx.limits.max_k) + 1):
            yield inst(g, m=m), lambda g=g, m=m: at_most(ctx.Dp(power(g, m)), 3)


@claim("L2.11", "|E(G)| >= C(n-1, 2) + 2 implies a Hamiltonian cycle")
def _l211(ctx):
    for g in ctx.connected(3, ctx.limits.ham_cap):
        if g.num_edges >= math.comb(g.n - 1, 2) + 2:
            yield inst(g), lambda g=g: equal(True, hamiltonian_cycle_exists(g, ctx.limits.ham_cap))


@claim("T2.12", "if G^2 is not complete, squaring adds at least n - 2 edges")
def _t212(ctx):
    for g in ctx.connected():
        sq = power(g, 2)
        if not sq.is_complete():
            yield inst(g), lambda g=g, sq=sq: at_least(sq.num_edges - g.num_edges, g.n - 2)


@claim("C2.13", "n >= 7, G^2 not complete, |E| >= (n^2 + 10 - 5n)/2 implies D'(G^2) <= 2")
def _c213(ctx):
    graphs = [
        g for g in ctx.connected(7)
        if not power(g, 2).is_complete() and 2 * g.num_edges >= g.n**2 + 10 - 5 * g.n
    ]
    if ctx.limits.max_n < 7:
        yield from _range_skip(f"needs n >= 7, max_n = {ctx.limits.max_n}")
    for g in graphs:
        yield inst(g), lambda g=g: at_most(ctx.Dp(power(g, 2)), 2)


@claim("T2.10", "Aut(C_n^k) = Aut(C_n) for n > 2k and Aut(K_n) for n <= 2k")
def _t210(ctx):
    for n in range(3, ctx.limits.family_n + 1):
        for k in range(2, ctx.limits.max_k + 1):
            expected = 2 * n if n > 2 * k else math.factorial(n)
            yield inst(cycle(n), n=n, k=k), lambda n=n, k=k, e=expected: equal(e, ctx.aut(power(cycle(n), k)).order)


@claim("C2.10.i", "D(C_n^k) = D(C_n) for n > 2k and D(K_n) for n <= 2k")
def _c210i(ctx):
    for n in range(3, ctx.limits.family_n + 1):
        for k in range(2, ctx.limits.max_k + 1):
            def thunk(n=n, k=k):
                expected = ctx.D(cycle(n)) if n > 2 * k else ctx.D(complete(n))
                return equal(expected, ctx.D(power(cycle(n), k)))

            yield inst(cycle(n), n=n, k=k), thunk


@claim("C2.10.ii", "D'(C_n^k) = D'(C_n) for n > 2k and D'(K_n) for n <= 2k")
def _c210ii(ctx):
    for n in range(3, ctx.limits.family_n + 1):
        for k in range(2, ctx.limits.max_k + 1):
            def thunk(n=n, k=k):
                expected = ctx.Dp(cycle(n)) if n > 2 * k else ctx.Dp(complete(n))
                return equal(expected, ctx.Dp(power(cycle(n), k)))

            yield inst(cycle(n), n=n, k=k), thunk


def _same_group(ctx, g: Graph) -> bool:
    sq = power(g, 2)
    return ctx.aut(g).order == ctx.aut(sq).order and all(is_automorphism(sq, p) for p in ctx.aut(g))


@claim("CONJ.i", "r < d <= 2r - 2 implies Aut(G) = Aut(G^2)", report_only=True)
def _conji(ctx):
    for g in ctx.connected():
        met = metrics(g)
        if met.radius < met.diameter <= 2 * met.radius - 2:
            yield inst(g), lambda g=g: equal(True, _same_group(ctx, g))


@claim("CONJ.ii", "bipartite G with radius > 2 has Aut(G) = Aut(G^2)", report_only=True)
def _conjii(ctx):
    for g in ctx.connected():
        if g.is_bipartite() and metrics(g).radius > 2:
            yield inst(g), lambda g=g: equal(True, _same_group(ctx, g))


@claim("R2.K33", "D'(K_{3,3}) = 3")
def _rk33(ctx):
    g = complete_bipartite(3, 3)
    yield inst(g), lambda: equal(3, ctx.Dp(g))


# ---------------------------------------------------------------- subdivisions


@claim("F3.P", "D(P_n^{1/k}) = 2 for n >= 2, k >= 2")
def _f3p(ctx):
    for n in range(2, ctx.limits.max_n + 1):
        for k in range(2, ctx.limits.max_k + 1):
            yield inst(path(n), k=k), lambda n=n, k=k: equal(2, ctx.D(ctx.sub(path(n), k).graph))


@claim("F3.C", "D(C_n^{1/k}) = 2 for n >= 3, k >= 2")
def _f3c(ctx):
    for n in range(3, ctx.limits.max_n + 1):
        for k in range(2, ctx.limits.max_k + 1):
            yield inst(cycle(n), k=k), lambda n=n, k=k: equal(2, ctx.D(ctx.sub(cycle(n), k).graph))


@claim("L3.1", "every automorphism of G^{1/k} restricts to an automorphism of G")
def _l31(ctx):
    for g in ctx.base_graphs():
        for k in range(2, ctx.limits.max_k + 1):
            def thunk(g=g, k=k):
                sg = ctx.sub(g, k)
                for p in ctx.aut(sg.graph):
                    restrict_to_base(sg, p)
                return equal(True, True)

            yield inst(g, k=k), thunk


@claim("O3.2", "superedges map to superedges, reversed exactly when endpoint order flips")
def _o32(ctx):
    for g in ctx.base_graphs():
        for k in range(2, ctx.limits.max_k + 1):
            def thunk(g=g, k=k):
                sg = ctx.sub(g, k)
                for p in ctx.aut(sg.graph):
                    for (i, j), internal in sg.superedges.items():
                        a, b = p[i], p[j]
                        target = sg.superedges[(min(a, b), max(a, b))]
                        want = target if a < b else target[::-1]
                        if tuple(p[w] for w in internal) != tuple(want):
                            return equal(True, False)
                return equal(True, True)

            yield inst(g, k=k), thunk


@claim("C3.4.i", "|Aut(G^{1/k})| = |Aut(G)|")
def _c34i(ctx):
    for g in ctx.base_graphs():
        for k in range(2, ctx.limits.max_k + 1):
            yield inst(g, k=k), lambda g=g, k=k: equal(ctx.aut(g).order, ctx.aut(ctx.sub(g, k).graph).order)


@claim("C3.4.ii", "D(G^{1/k}) <= D(G)")
def _c34ii(ctx):
    for g in ctx.base_graphs():
        for k in range(2, ctx.limits.max_k + 1):
            yield inst(g, k=k), lambda g=g, k=k: at_most(ctx.D(ctx.sub(g, k).graph), ctx.D(g))


@claim("T3.6", "D''(G) <= ceil(sqrt(Delta))")
def _t36(ctx):
    for g in ctx.connected(3):
        yield inst(g), lambda g=g: at_most(ctx.Dt(g), sqrt_degree_bound(g.max_degree))


@claim("R3.6", "D''(K_{1,m}) = ceil(sqrt(m))")
def _r36(ctx):
    for m in range(2, ctx.limits.family_n + 2):
        yield inst(star(m), m=m), lambda m=m: equal(sqrt_degree_bound(m), ctx.Dt(star(m)))


@claim("T3.7", "D(G^{1/2k}) = D''(G^{1/k})")
def _t37(ctx):
    for g in ctx.connected(3):
        for k in range(1, max(1, ctx.limits.max_k // 2) + 1):
            yield inst(g, k=k), lambda g=g, k=k: equal(ctx.Dt(ctx.sub(g, k).graph), ctx.D(ctx.sub(g, 2 * k).graph))


@claim("C3.7", "D(G^{1/2}) <= ceil(sqrt(Delta))")
def _c37(ctx):
    for g in ctx.connected(3):
        yield inst(g), lambda g=g: at_most(ctx.D(ctx.sub(g, 2).graph), sqrt_degree_bound(g.max_degree))


@claim("T3.8", "D(G^{1/k}) <= min{s : 2^k + sum_{j=3}^s j^{k-1} >= Delta}")
def _t38(ctx):
    for g in ctx.connected(3):
        for k in range(2, ctx.limits.max_k + 1):
            yield inst(g, k=k), lambda g=g, k=k: at_most(ctx.D(ctx.sub(g, k).graph), sphere_bound(k, g.max_degree))


@claim("T3.8.construction", "the BFS/sphere labeling certifies with sphere_bound labels, unrepaired")
def _t38c(ctx):
    for g in ctx.connected(3):
        for k in range(2, ctx.limits.max_k + 1):
            def thunk(g=g, k=k):
                try:
                    built = bfs_sphere_construction(g, k, repair=False)
                except ConstructionFailure as exc:
                    return "certified", f"construction failure: {exc}", False
                return equal("certified", "certified" if built.certified_unrepaired else "not certified")

            yield inst(g, k=k), thunk


@claim("T3.9", "D(K_{1,m}^{1/k}) = min{s : 2^k + sum_{j=3}^s j^{k-1} >= m}")
def _t39(ctx):
    for m in range(3, ctx.limits.family_n):
        for k in range(2, ctx.limits.max_k + 1):
            yield inst(star(m), m=m, k=k), lambda m=m, k=k: equal(sphere_bound(k, m), ctx.D(ctx.sub(star(m), k).graph))


# ---------------------------------------------------------------- distinguishing index of subdivisions


@claim("F4.P", "D'(P_n^{1/k}) = 2 for n >= 2, k >= 2")
def _f4p(ctx):
    for n in range(2, ctx.limits.max_n + 1):
        for k in range(2, ctx.limits.max_k + 1):
            yield inst(path(n), k=k), lambda n=n, k=k: equal(2, ctx.Dp(ctx.sub(path(n), k).graph))


@claim("F4.C", "D'(C_n^{1/k}) = 2 for n >= 3, k >= 2")
def _f4c(ctx):
    for n in range(3, ctx.limits.max_n + 1):
        for k in range(2, ctx.limits.max_k + 1):
            yield inst(cycle(n), k=k), lambda n=n, k=k: equal(2, ctx.Dp(ctx.sub(cycle(n), k).graph))


@claim("T4.1", "D(G^{1/(k+1)}) <= D'(G^{1/k}), k >= 2")
def _t41(ctx):
    for g in ctx.base_graphs():
        for k in range(2, ctx.limits.max_k):
            yield inst(g, k=k), lambda g=g, k=k: at_most(ctx.D(ctx.sub(g, k + 1).graph), ctx.Dp(ctx.sub(g, k).graph))


@claim("T4.1.construction", "transferring a D'(G^{1/k}) edge labeling gives a certified vertex labeling of G^{1/(k+1)}")
def _t41c(ctx):
    for g in ctx.base_graphs():
        for k in range(2, ctx.limits.max_k):
            def thunk(g=g, k=k):
                dp, el = ctx.solve(ctx.sub(g, k).graph, EDGE)
                try:
                    labeling = edge_to_vertex_transfer(g, k, el)
                except ConstructionFailure as exc:
                    return f"<= {dp}", f"construction failure: {exc}", False
                return at_most(labeling.labels_used, dp)

            yield inst(g, k=k), thunk


@claim("T4.2", "D'(G^{1/2}) <= ceil((-1 + sqrt(1 + 8 D'(G))) / 2)")
def _t42(ctx):
    for g in ctx.base_graphs():
        yield inst(g), lambda g=g: at_most(ctx.Dp(ctx.sub(g, 2).graph), pair_bound(ctx.Dp(g)))


@claim("T4.2.construction", "the distinct-pair construction certifies within the stated label count")
def _t42c(ctx):
    for g in ctx.base_graphs():
        def thunk(g=g):
            dp, el = ctx.solve(g, EDGE)
            labeling = pair_edge_labeling(g, el)
            return at_most(labeling.labels_used, pair_bound(dp))

        yield inst(g), thunk


@claim("T4.3", "D'(G^{1/k}) <= d'_k (reversal classes of non-palindromic k-tuples)")
def _t43(ctx):
    for g in ctx.base_graphs():
        for k in range(2, ctx.limits.max_k + 1):
            yield inst(g, k=k), lambda g=g, k=k: at_most(ctx.Dp(ctx.sub(g, k).graph), tuple_bound(ctx.Dp(g), k))


@claim("T4.3.construction", "the k-tuple construction certifies within d'_k labels")
def _t43c(ctx):
    for g in ctx.base_graphs():
        for k in range(2, ctx.limits.max_k + 1):
            def thunk(g=g, k=k):
                dp, el = ctx.solve(g, EDGE)
                labeling = tuple_edge_labeling(g, k, el)
                return at_most(labeling.labels_used, tuple_bound(dp, k))

            yield inst(g, k=k), thunk


@claim("C4.4", "D'(G^{m/k}) <= 3 for m >= 3, k >= 1, both construction orders")
def _c44(ctx):
    for g in ctx.connected(3, ctx.limits.frac_max_n):
        for k in range(1, ctx.limits.max_k + 1):
            for order in (SUBDIVIDE_THEN_POWER, POWER_THEN_SUBDIVIDE):
                yield inst(g, m=3, k=k, order=order), lambda g=g, k=k, o=order: at_most(
                    ctx.Dp(fractional_power(g, 3, k, o)), 3
                )


@claim("C4.5.i", "D(G^{1/k}) <= D((G^{1/k})^m), m >= 3")
def _c45i(ctx):
    for g in ctx.connected(3, ctx.limits.frac_max_n):
        for k in range(1, ctx.limits.max_k + 1):
            yield inst(g, m=3, k=k), lambda g=g, k=k: at_least(
                ctx.D(fractional_power(g, 3, k, SUBDIVIDE_THEN_POWER)), ctx.D(ctx.sub(g, k).graph)
            )


@claim("C4.5.ii", "D((G^m)^{1/k}) <= D(G^m), m >= 3")
def _c45ii(ctx):
    for g in ctx.connected(3, ctx.limits.frac_max_n):
        for k in range(1, ctx.limits.max_k + 1):
            yield inst(g, m=3, k=k), lambda g=g, k=k: at_most(
                ctx.D(fractional_power(g, 3, k, POWER_THEN_SUBDIVIDE)), ctx.D(power(g, 3))
            )


# ---------------------------------------------------------------- runner


def _evaluate(cid: str, instance: dict, thunk: Thunk) -> ClaimReport:
    try:
        expected, computed, ok = thunk()
    except (CapExceeded, UndefinedQuantity) as exc:
        return ClaimReport(cid, instance, None, None, f"SKIP({exc})")
    return ClaimReport(cid, instance, expected, computed, PASS if ok else FAIL)


def run_claim(cid: str, limits: Limits, ctx: Context | None = None) -> list[ClaimReport]:
    ctx = ctx or Context(limits)
    return [_evaluate(cid, instance, thunk) for instance, thunk in REGISTRY[cid].checker(ctx)]


def _worker(args) -> list[dict]:
    cid, limits = args
    return [r.to_json() for r in run_claim(cid, limits)]


def resolve(selection) -> list[str]:
    """Claim ids in registry order; ``None`` or ``"all"`` selects everything."""
    if selection is None or selection == "all":
        return list(REGISTRY)
    if isinstance(selection, str):
        selection = [s for s in selection.split(",") if s]
    unknown = [s for s in selection if s not in REGISTRY]
    if unknown:
        raise KeyError(f"unknown claim id(s): {', '.join(unknown)}")
    wanted = set(selection)
    return [cid for cid in REGISTRY if cid in wanted]


def sort_key(record: dict) -> tuple:
    order = list(REGISTRY)
    return order.index(record["claim"]), json.dumps(record["instance"], sort_keys=True)


def run_claims(selection=None, limits: Limits | None = None, jobs: int = 1) -> list[dict]:
    """Evaluate the selected claims and return records in (claim, instance) order.

    Unknown ids are rejected before any work starts.
    """
    ids = resolve(selection)
    limits = limits or Limits()
    records: list[dict] = []
    if jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_worker, [(cid, limits) for cid in ids]):
                records.extend(chunk)
    else:
        ctx = Context(limits)
        for cid in ids:
            records.extend(r.to_json() for r in run_claim(cid, limits, ctx))
    records.sort(key=sort_key)
    return records


def has_failure(records: list[dict]) -> bool:
    """Any FAIL outside the report-only claims."""
    return any(r["verdict"] == FAIL and not REGISTRY[r["claim"]].report_only for r in records)
