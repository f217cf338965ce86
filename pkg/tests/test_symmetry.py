from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from networkx.algorithms.isomorphism import GraphMatcher

from conftest import graphs, to_nx
from distpow.errors import CapExceeded, GraphError
from distpow.graph import complete, complete_bipartite, cycle, path, star
from distpow.harness.generate import enumerate_connected_graphs
from distpow.oracles import brute_force_automorphisms
from distpow.powers import power, subdivide
from distpow.symmetry import (
    compose,
    edge_action,
    edge_action_array,
    enumerate_automorphisms,
    identity,
    inverse,
    is_automorphism,
    is_subgroup,
    point_action,
    restrict_to_base,
)


@pytest.mark.parametrize(
    "g, order",
    [(cycle(4), 8), (cycle(5), 10), (path(5), 2), (complete(4), 24), (star(4), 24), (complete_bipartite(3, 3), 72)],
)
def test_known_orders(g, order):
    assert enumerate_automorphisms(g).order == order


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7))
def test_matches_brute_force(g):
    auts = enumerate_automorphisms(g)
    assert list(auts.elements) == brute_force_automorphisms(g)


def test_matches_networkx_count_on_all_small_graphs():
    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            h = to_nx(g)
            assert enumerate_automorphisms(g).order == sum(1 for _ in GraphMatcher(h, h).isomorphisms_iter())


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_group_closure(g):
    auts = enumerate_automorphisms(g)
    assert auts.is_closed()
    assert auts.elements == tuple(sorted(auts.elements))


def test_permutation_helpers():
    p, q = (1, 2, 0), (0, 2, 1)
    assert compose(p, inverse(p)) == identity(3)
    assert compose(p, q) == (2, 1, 0)  # p first, then q


def test_is_automorphism_length_mismatch():
    with pytest.raises(GraphError):
        is_automorphism(path(3), (0, 1))
    assert not is_automorphism(path(3), (0, 0, 1))


def test_caps():
    with pytest.raises(CapExceeded):
        enumerate_automorphisms(complete(10), order_cap=1000)
    with pytest.raises(CapExceeded):
        enumerate_automorphisms(path(5), vertex_cap=4)
    with pytest.raises(CapExceeded):
        enumerate_automorphisms(star(7), order_cap=100)


def test_edge_action():
    g = path(3)
    assert edge_action(g, (2, 1, 0)) == (1, 0)
    with pytest.raises(GraphError):
        edge_action(g, (1, 0, 2))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_edge_action_array_matches_scalar(g):
    auts = enumerate_automorphisms(g)
    arr = edge_action_array(g, auts)
    for row, p in zip(arr, auts):
        assert tuple(int(x) for x in row) == edge_action(g, p)
    total = point_action(g, auts, "total")
    assert total.shape == (auts.order, g.n + g.num_edges)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=6, connected=True))
def test_aut_is_subgroup_of_powers(g):
    auts = enumerate_automorphisms(g)
    for k in (2, 3):
        assert is_subgroup(auts, enumerate_automorphisms(power(g, k)))


def test_cycle_power_orders():
    # C_n^k is C_n's group for n > 2k + 2; complete at n <= 2k + 1;
    # at n = 2k + 2 it is K_n minus a perfect matching
    for n in range(3, 10):
        for k in (2, 3):
            order = enumerate_automorphisms(power(cycle(n), k)).order
            if n <= 2 * k + 1:
                assert order == math.factorial(n)
            elif n == 2 * k + 2:
                assert order == 2 ** (n // 2) * math.factorial(n // 2)
            else:
                assert order == 2 * n


def test_restriction_to_base():
    g = star(3)
    sg = subdivide(g, 2)
    for p in enumerate_automorphisms(sg.graph):
        assert is_automorphism(g, restrict_to_base(sg, p))
    # on a cycle subdivision a rotation sends original vertices to internal ones
    sc = subdivide(cycle(3), 2)
    auts = enumerate_automorphisms(sc.graph)
    bad = [p for p in auts if any(p[v] >= 3 for v in range(3))]
    assert bad
    with pytest.raises(GraphError):
        restrict_to_base(sc, bad[0])


def test_subgroup_vertex_mismatch():
    with pytest.raises(GraphError):
        is_subgroup(enumerate_automorphisms(path(3)), enumerate_automorphisms(path(4)))
