import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from tzdg.errors import DomainError
from tzdg.graphs import (
    TOTAL,
    TZDG,
    ZDG,
    Graph,
    build_graph,
    build_total_graph,
    build_total_zero_divisor_graph,
    build_total_zero_divisor_graph_dense,
    build_zero_divisor_graph,
    export_dot,
    export_json,
    remove_vertices,
    subgraph_induced,
)
from tzdg.ring import Ring

import oracle


def edge_labels(g):
    return {(g.vertices[i], g.vertices[j]) for i, j in g.edges.tolist()}


def test_z9_is_k2():
    g = build_total_zero_divisor_graph(9)
    assert list(g.vertices) == [3, 6] and edge_labels(g) == {(3, 6)}


def test_z8_is_path():
    g = build_total_zero_divisor_graph(8)
    assert edge_labels(g) == {(2, 4), (4, 6)}


def test_z12_star_plus_two_isolated():
    g = build_total_zero_divisor_graph(12)
    assert edge_labels(g) == {(2, 6), (4, 6), (6, 8), (6, 10)}
    assert {g.vertices[i] for i in np.flatnonzero(g.degrees == 0)} == {3, 9}


def test_field_gives_empty_graph():
    g = build_total_zero_divisor_graph(13)
    assert g.order == 0 and g.size == 0


def test_zero_divisor_graph_examples():
    assert edge_labels(build_zero_divisor_graph(6)) == {(2, 3), (3, 4)}
    assert build_zero_divisor_graph(7).order == 0
    assert edge_labels(build_zero_divisor_graph(9)) == {(3, 6)}


def test_total_graph_examples():
    g4 = build_total_graph(4)
    assert list(g4.vertices) == [0, 1, 2, 3]
    assert edge_labels(g4) == {(0, 2), (1, 3)}
    assert edge_labels(build_total_graph(3)) == {(1, 2)}
    # Z(Z_2) = {0} and 0 + 1 is a unit, so Z_2 has no total-graph edge
    assert build_total_graph(2).size == 0


@pytest.mark.parametrize("m", [4, 6, 8, 9, 12, 16, 18, 25, 27, 30, 36, 45, 48, 60, 72, 100])
def test_fast_builder_matches_definition(m):
    verts, edges = oracle.tzdg_edges(m)
    g = build_total_zero_divisor_graph(m)
    assert list(g.vertices) == verts
    assert edge_labels(g) == edges


@given(st.integers(2, 400))
def test_fast_and_dense_builders_agree(m):
    a = build_total_zero_divisor_graph(m)
    b = build_total_zero_divisor_graph_dense(m)
    assert a.vertices == b.vertices
    assert (a.adj == b.adj).all()


@pytest.mark.parametrize("factors", [(4, 9), (2, 2), (2, 4), (3, 9), (2, 3, 4)])
def test_product_builder_matches_definition(factors):
    verts, edges = oracle.product_ring_tzdg(factors)
    g = build_total_zero_divisor_graph(Ring(factors))
    assert list(g.vertices) == verts
    assert edge_labels(g) == edges


@given(st.integers(4, 300))
def test_tzdg_is_subgraph_of_zdg_and_total(m):
    t = build_total_zero_divisor_graph(m)
    z = build_zero_divisor_graph(m)
    tot = build_total_graph(m)
    zi = z.indices_of(t.vertices)
    ti = tot.indices_of(t.vertices)
    assert not (t.adj & ~z.adj[np.ix_(zi, zi)]).any()
    assert not (t.adj & ~tot.adj[np.ix_(ti, ti)]).any()


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph([0, 1], np.array([[False, True], [False, False]]))
    with pytest.raises(ValueError):
        Graph([0], np.array([[True]]))


def test_induced_and_removal():
    g = build_total_zero_divisor_graph(12)
    assert (subgraph_induced(g, g.vertices).adj == g.adj).all()
    assert remove_vertices(g, g.vertices).order == 0
    h = remove_vertices(g, [6])
    assert h.order == 6 and h.size == 0
    with pytest.raises(DomainError):
        remove_vertices(g, [5])


def test_build_graph_kinds():
    assert build_graph("tzdg", 12).kind == TZDG
    assert build_graph("zdg", 12).kind == ZDG
    assert build_graph("total", 12).kind == TOTAL
    assert build_graph("tzdg", "4x9").order == 23
    with pytest.raises(DomainError):
        build_graph("other", 12)


def test_dot_export_z12():
    text = export_dot(build_total_zero_divisor_graph(12))
    lines = text.splitlines()
    assert lines[0] == 'graph "tzdg_Z12" {' and lines[-1] == "}"
    assert sum("--" in line for line in lines) == 4  # K_{1,4}
    assert '  "3";' in lines and '  "9";' in lines


def test_dot_export_tuple_labels_and_determinism():
    g = build_total_zero_divisor_graph(Ring((2, 2)))
    assert export_dot(g) == export_dot(build_total_zero_divisor_graph(Ring((2, 2))))
    assert '"0|1"' in export_dot(g)


def test_json_export_z9():
    doc = json.loads(export_json(build_total_zero_divisor_graph(9)))
    assert doc == {"kind": TZDG, "vertex_labels": [3, 6], "edges": [[0, 1]]}
    assert export_json(build_total_zero_divisor_graph(9)).endswith("\n")


def test_empty_graph_exports():
    g = build_total_zero_divisor_graph(5)
    assert "--" not in export_dot(g)
    assert json.loads(export_json(g))["edges"] == []
