from __future__ import annotations

import pytest

from distpow.distinguishing import (
    EDGE,
    VERTEX,
    find_distinguishing,
    is_distinguishing,
    pair_bound,
    sphere_bound,
    tuple_bound,
)
from distpow.errors import ConstructionFailure, GraphError
from distpow.graph import build, complete, cycle, fan2, path, star
from distpow.harness.generate import enumerate_connected_graphs
from distpow.labelers import (
    asymmetric_tuples,
    bfs_sphere_construction,
    bfs_sphere_labeling,
    edge_to_vertex_transfer,
    pair_edge_labeling,
    path_power_claimed_value,
    path_power_labeling,
    star_subdivision_labeling,
    tuple_edge_labeling,
)
from distpow.oracles import naive_distinguishing
from distpow.powers import power, subdivide
from distpow.symmetry import enumerate_automorphisms


def certified(g, labeling):
    return is_distinguishing(g, enumerate_automorphisms(g), labeling)


def base_graphs(max_n=5):
    return [g for n in range(3, max_n + 1) for g in enumerate_connected_graphs(n) if not g.is_cycle()]


def test_star_labeling_example():
    lab = star_subdivision_labeling(3, 2, 2)
    sg = subdivide(star(3), 2)
    assert lab.vertex_labels[0] == 1
    legs = [tuple(lab.vertex_labels[v] for v in sg.superedge_path(0, leaf)[1:]) for leaf in (1, 2, 3)]
    assert legs == [(1, 1), (1, 2), (2, 1)]
    assert certified(sg.graph, lab)


def test_star_labeling_deficit():
    with pytest.raises(ConstructionFailure, match="deficit 1"):
        star_subdivision_labeling(5, 2, 2)


@pytest.mark.parametrize("k", [2, 3])
def test_sphere_construction_on_grid(k):
    for g in [g for n in range(3, 6) for g in enumerate_connected_graphs(n)]:
        built = bfs_sphere_construction(g, k)
        sg = subdivide(g, k)
        assert built.labeling.labels_used <= sphere_bound(k, g.max_degree)
        assert certified(sg.graph, built.labeling)
        assert built.certified_unrepaired != built.repaired


def test_sphere_construction_needs_repair_only_with_universal_root():
    for g in [g for n in range(3, 6) for g in enumerate_connected_graphs(n)]:
        for k in (2, 3):
            built = bfs_sphere_construction(g, k)
            if built.repaired:
                assert g.max_degree == g.n - 1


def test_sphere_construction_without_repair_raises():
    with pytest.raises(ConstructionFailure):
        bfs_sphere_construction(complete(4), 2, repair=False)


def test_sphere_labeling_on_fan_and_cycle():
    for g in (fan2(), cycle(5), path(4)):
        lab = bfs_sphere_labeling(g, 2)
        assert certified(subdivide(g, 2).graph, lab)


def test_star_formula_can_overshoot():
    # exact value from search versus the sphere count formula
    exact = find_distinguishing(subdivide(star(8), 2).graph, VERTEX)[0]
    assert exact == 3 and sphere_bound(2, 8) == 4


@pytest.mark.parametrize("k", [2, 3])
def test_edge_to_vertex_transfer(k):
    for g in base_graphs(5):
        dp, el = find_distinguishing(subdivide(g, k).graph, EDGE)
        lab = edge_to_vertex_transfer(g, k, el)
        assert lab.labels_used <= dp
        assert certified(subdivide(g, k + 1).graph, lab)


def test_pair_labeling_within_bound():
    for g in base_graphs(5):
        dp, el = find_distinguishing(g, EDGE)
        lab = pair_edge_labeling(g, el)
        assert lab.d <= pair_bound(dp)
        assert certified(subdivide(g, 2).graph, lab)


def test_pair_labeling_rejects_bad_input():
    with pytest.raises(GraphError):
        pair_edge_labeling(cycle(5), find_distinguishing(cycle(5), EDGE)[1])
    g = star(3)
    bad = find_distinguishing(g, VERTEX)[1]
    with pytest.raises(GraphError):
        pair_edge_labeling(g, bad)


@pytest.mark.parametrize("k", [2, 3])
def test_tuple_labeling_within_bound(k):
    for g in base_graphs(5):
        dp, el = find_distinguishing(g, EDGE)
        lab = tuple_edge_labeling(g, k, el)
        assert lab.d <= tuple_bound(dp, k)
        assert certified(subdivide(g, k).graph, lab)


def test_asymmetric_tuples():
    ts = asymmetric_tuples(2, 3, 2)
    assert ts == [(1, 1, 2), (1, 2, 2)]
    for t in asymmetric_tuples(3, 2, 3):
        assert t != t[::-1]


@pytest.mark.parametrize("n, k", [(n, k) for n in range(4, 8) for k in range(1, n)])
def test_path_power_labeling_is_optimal(n, k):
    g = power(path(n), k)
    lab = path_power_labeling(n, k)
    assert certified(g, lab)
    # complete powers need all-distinct labels; otherwise compare with the unpruned oracle
    want = n if g.is_complete() else naive_distinguishing(g, VERTEX)
    assert lab.labels_used == want


def test_path_power_claimed_value():
    assert path_power_claimed_value(6, 3) == 2
    assert path_power_claimed_value(5, 3) == 1
    assert path_power_claimed_value(7, 6) == 5


def test_path_power_rejects_bad_range():
    with pytest.raises(GraphError):
        path_power_labeling(3, 1)
    with pytest.raises(GraphError):
        path_power_labeling(5, 5)


def test_labelers_reject_small_or_disconnected_base():
    with pytest.raises(GraphError):
        bfs_sphere_labeling(path(2), 2)
    with pytest.raises(GraphError):
        bfs_sphere_labeling(build(4, [(0, 1), (2, 3)]), 2)
