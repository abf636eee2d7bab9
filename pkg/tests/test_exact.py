import numpy as np
import pytest
from hypothesis import given, strategies as st

from tzdg.errors import DomainError, ResourceError
from tzdg.exact import (
    are_isomorphic,
    chromatic_index_exact,
    chromatic_number_exact,
    connectivity,
    diameter,
    distance_matrix,
    domination_number_exact,
    exact_invariants,
    find_clique_of_size,
    find_isomorphism,
    girth,
    is_eulerian,
    is_hamiltonian_exact,
    metric_dimension_exact,
    resolves,
    twin_classes,
    verify_hamiltonian_cycle,
)
from tzdg.exact.zmod import class_profile, degree_bounds_refute, is_connected
from tzdg.graphs import (
    Graph,
    build_total_zero_divisor_graph as tzdg,
    complete_graph,
    empty_graph,
    path_graph,
    star_graph,
)

import oracle


def graph_from_oracle(m):
    verts, edges = oracle.tzdg_edges(m)
    return verts, edges


# -- structure ---------------------------------------------------------------


def test_connectivity_examples():
    assert connectivity(tzdg(36)).is_connected
    assert connectivity(tzdg(6)).component_count == 3
    assert connectivity(tzdg(12)).component_count == 3
    empty = connectivity(tzdg(7))
    assert not empty.is_connected and empty.component_count == 0


def test_diameter_and_girth_examples():
    assert diameter(tzdg(8)) == 2
    assert diameter(tzdg(25)) == 1
    assert girth(tzdg(27)) == 3
    assert diameter(tzdg(4)) == "undefined"
    assert girth(tzdg(8)) == "acyclic"
    assert diameter(tzdg(12)) == "infinite"


def test_girth_longer_cycles():
    cycle = Graph.from_edges(range(5), [(i, (i + 1) % 5) for i in range(5)])
    assert girth(cycle) == 5
    square = Graph.from_edges(range(4), [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert girth(square) == 4


@given(st.integers(4, 200))
def test_structure_matches_reference(m):
    verts, edges = oracle.tzdg_edges(m)
    g = tzdg(m)
    inv = exact_invariants(g)
    assert inv.diameter == oracle.diameter(verts, edges)
    assert inv.girth == oracle.girth(verts, edges)
    assert inv.component_count == len(oracle.components(verts, edges))
    if inv.max_degree is not None:
        assert inv.max_degree >= inv.min_degree
    if inv.is_complete:
        assert inv.is_regular
    assert (inv.diameter == 1) == (inv.is_complete and g.order >= 2)


def test_eulerian_rules():
    assert is_eulerian(complete_graph(3))
    assert not is_eulerian(complete_graph(4))
    assert not is_eulerian(complete_graph(1))
    assert not is_eulerian(empty_graph(3))
    assert not is_eulerian(tzdg(36))


def test_twin_classes_examples():
    assert twin_classes(complete_graph(5)) == [[0, 1, 2, 3, 4]]
    p3 = tzdg(8)  # 2 - 4 - 6
    assert sorted(sorted(p3.vertices[i] for i in c) for c in twin_classes(p3)) == [[2, 6], [4]]
    assert len(twin_classes(tzdg(36))) == 5


# -- colouring ---------------------------------------------------------------------


def test_find_clique_examples():
    assert sorted(find_clique_of_size(tzdg(36), 5)) == [6, 12, 18, 24, 30]
    assert len(find_clique_of_size(tzdg(36), 1)) == 1
    assert find_clique_of_size(tzdg(30), 4) is None


def test_clique_search_budget_is_not_a_negative_answer():
    # a 29-clique exists in Z_900 but needs at least 29 search nodes to reach
    assert len(find_clique_of_size(tzdg(900), 29)) == 29
    with pytest.raises(ResourceError):
        find_clique_of_size(tzdg(900), 29, node_limit=5)


def test_chromatic_examples():
    assert chromatic_number_exact(path_graph(3))[0] == 2
    assert chromatic_number_exact(tzdg(36))[0] == 5
    for p in (5, 7, 11):
        assert chromatic_number_exact(complete_graph(p - 1))[0] == p - 1
    with pytest.raises(ResourceError):
        chromatic_number_exact(tzdg(360))


@pytest.mark.parametrize("m", [8, 9, 12, 16, 18, 24, 25, 27, 30, 36, 49])
def test_chromatic_matches_reference_and_witness(m):
    g = tzdg(m)
    k, colouring = chromatic_number_exact(g)
    assert k == oracle.chromatic_number(*oracle.tzdg_edges(m))
    assert len(set(colouring.values())) == k
    for i, j in g.edges.tolist():
        assert colouring[g.vertices[i]] != colouring[g.vertices[j]]


def test_chromatic_index_examples():
    assert chromatic_index_exact(path_graph(3))[0] == 2
    assert chromatic_index_exact(complete_graph(4))[0] == 3
    assert chromatic_index_exact(complete_graph(5))[0] == 5
    assert chromatic_index_exact(tzdg(16))[0] == 6
    with pytest.raises(ResourceError):
        chromatic_index_exact(tzdg(900))


# -- domination, metric dimension, Hamiltonicity --------------------------------------------------


def test_domination_examples():
    assert domination_number_exact(star_graph(4, 2), 5)[0] == 3
    assert domination_number_exact(complete_graph(6), 3)[0] == 1
    gamma, witness = domination_number_exact(tzdg(36), 3)
    assert gamma == 2
    with pytest.raises(DomainError):
        domination_number_exact(tzdg(36), 0)
    with pytest.raises(ResourceError):
        domination_number_exact(tzdg(900), 3, max_subsets=1000)


def test_metric_dimension_examples():
    assert metric_dimension_exact(path_graph(3)).dimension == 1
    assert metric_dimension_exact(complete_graph(4)).dimension == 3
    md = metric_dimension_exact(tzdg(36))
    assert md.dimension == 18
    g = tzdg(36)
    assert resolves(distance_matrix(g), g.indices_of(md.resolving_set))
    with pytest.raises(DomainError):
        metric_dimension_exact(tzdg(12))


def test_hamiltonian_examples():
    res = is_hamiltonian_exact(tzdg(25))
    assert res.hamiltonian and verify_hamiltonian_cycle(tzdg(25), res.cycle)
    assert not is_hamiltonian_exact(tzdg(8))
    assert not is_hamiltonian_exact(tzdg(16))
    assert is_hamiltonian_exact(complete_graph(6))


def test_hamiltonian_budget():
    # K_{50} passes every cheap refutation, so the budget applies
    with pytest.raises(ResourceError):
        is_hamiltonian_exact(complete_graph(50), max_vertices=40)


def test_hamiltonian_search_on_petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    petersen = Graph.from_edges(range(10), outer + inner + spokes)
    assert not is_hamiltonian_exact(petersen)


# -- isomorphism -------------------------------------------------------------------


def test_isomorphism_examples():
    g = tzdg(36)
    assert are_isomorphic(g, g)
    assert not are_isomorphic(tzdg(9), tzdg(8))
    mapping = find_isomorphism(tzdg(25), complete_graph(4))
    assert mapping is not None and sorted(mapping) == [5, 10, 15, 20]


def test_isomorphism_respects_relabelling():
    g = tzdg(72)
    rng = np.random.default_rng(0)
    perm = rng.permutation(g.order)
    h = Graph(list(range(g.order)), g.adj[np.ix_(perm, perm)])
    mapping = find_isomorphism(h, g)
    assert mapping is not None
    for i, j in h.edges.tolist():
        assert g.adjacent(mapping[i], mapping[j])


# -- implicit Z_m oracles --------------------------------------------------------


@given(st.integers(4, 500))
def test_class_profile_matches_dense(m):
    g = tzdg(m)
    cp = class_profile(m)
    assert cp.vertex_count == g.order
    if g.order:
        assert (cp.max_degree, cp.min_degree) == (int(g.degrees.max()), int(g.degrees.min()))
        assert is_connected(m) == connectivity(g).is_connected


def test_degree_bounds_refute():
    assert not degree_bounds_refute(36, 16, 1)
    assert degree_bounds_refute(36, 15, 1)
    assert degree_bounds_refute(37, 5, 1)
