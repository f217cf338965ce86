from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from distpow.errors import CapExceeded, GraphError
from distpow.graph import (
    UNREACHABLE,
    build,
    complete,
    complete_bipartite,
    cycle,
    fan2,
    family,
    hamiltonian_cycle_exists,
    hamiltonian_path_between,
    hamiltonian_path_exists,
    metrics,
    path,
    sphere,
    star,
)
from distpow.oracles import brute_force_floyd_warshall


def test_build_collapses_duplicates():
    g = build(3, [(0, 1), (1, 0), (1, 2)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.num_edges == 2


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 0)]])
def test_build_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        build(3, edges)


def test_empty_graph():
    g = build(0, [])
    assert g.n == 0 and g.num_edges == 0 and g.edges == ()


def test_families():
    assert path(4).edges == ((0, 1), (1, 2), (2, 3))
    assert cycle(5).num_edges == 5 and cycle(5).is_cycle()
    assert complete(5).num_edges == 10 and complete(5).is_complete()
    assert star(4).degrees == (4, 1, 1, 1, 1) and star(4).is_star()
    assert complete_bipartite(3, 3).is_bipartite() and complete_bipartite(3, 3).num_edges == 9
    f = fan2()
    assert f.n == 5 and f.degree(0) == 4 and f.has_edge(1, 2) and f.has_edge(3, 4)
    assert family("cycle", 6) == cycle(6)


def test_family_rejects_unknown():
    with pytest.raises(GraphError):
        family("petersen")


def test_shape_predicates():
    assert path(5).is_path() and not cycle(5).is_path()
    assert not path(3).is_cycle()
    assert cycle(4).is_bipartite() and not cycle(5).is_bipartite()
    assert not build(4, [(0, 1), (2, 3)]).is_connected()


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_degree_sum(g):
    assert sum(g.degrees) == 2 * g.num_edges
    for u, v in g.edges:
        assert u < v and g.has_edge(v, u)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_distances_match_floyd_warshall(g):
    fw = brute_force_floyd_warshall(g)
    for i in range(g.n):
        for j in range(g.n):
            want = UNREACHABLE if fw[i][j] == float("inf") else int(fw[i][j])
            assert g.distance_matrix[i][j] == want


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, connected=True))
def test_metrics_invariants(g):
    m = metrics(g)
    assert m.radius == min(m.ecc) and m.diameter == max(m.ecc)
    assert m.radius <= m.diameter <= 2 * m.radius
    assert set(m.center) == {v for v in range(g.n) if m.ecc[v] == m.radius}
    h = to_nx(g)
    assert m.diameter == nx.diameter(h) and m.radius == nx.radius(h)


def test_metrics_examples():
    m = metrics(path(5))
    assert (m.radius, m.diameter) == (2, 4) and set(m.center) == {2}
    m = metrics(complete(4))
    assert (m.radius, m.diameter) == (1, 1)


def test_metrics_disconnected():
    m = metrics(build(3, [(0, 1)]))
    assert not m.connected and m.radius is None and m.diameter is None


def test_sphere():
    assert sphere(path(5), 0, 2) == {2}
    assert sphere(cycle(6), 0, 1) == {1, 5}
    assert sphere(cycle(6), 0, 3) == {3}


def test_hamiltonian():
    assert hamiltonian_path_exists(path(6))
    assert not hamiltonian_path_exists(star(3))
    assert hamiltonian_cycle_exists(cycle(5))
    assert not hamiltonian_cycle_exists(path(4))
    assert hamiltonian_path_between(path(4), 0, 3)
    assert not hamiltonian_path_between(path(4), 0, 2)


def test_hamiltonian_cap():
    with pytest.raises(CapExceeded):
        hamiltonian_path_exists(path(13))
