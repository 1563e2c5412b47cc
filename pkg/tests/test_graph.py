from __future__ import annotations

import pytest
from hypothesis import given

from conftest import graphs
from edgelab.errors import CapacityError, DomainError, ParseError
from edgelab.extremal import build_G, build_J
from edgelab.graph import Graph, VertexSet, disjoint_union, g6_decode, g6_encode, read_graph6_lines
from oracles import labeled_graphs, to_nx

import networkx as nx


def test_degree_examples():
    assert Graph.complete(3).degree(1) == 2
    assert Graph.empty(5).degree(0) == 0
    j3 = build_J(3)
    apex = 4
    assert j3.degree(apex) == 3


def test_max_degree_examples():
    assert Graph.complete(5).max_degree() == 4
    assert Graph.star(7).max_degree() == 7
    assert build_J(3).max_degree() == 3
    with pytest.raises(DomainError):
        Graph.empty(0).max_degree()


def test_delete_vertex_examples():
    assert Graph.complete(4).delete_vertex(2) == Graph.complete(3)
    assert Graph.path(3).delete_vertex(1) == Graph.empty(2)
    assert build_J(4).delete_vertex(0) == Graph.complete(4)


def test_components_examples():
    sizes = sorted(len(c) for c in build_G(3, 1).components())
    assert sizes == [1, 1, 3]
    assert len(Graph.complete(5).components()) == 1
    assert [c.to_list() for c in Graph.empty(4).components()] == [[0], [1], [2], [3]]


def test_disjoint_union_examples():
    g = disjoint_union([Graph.complete(3), Graph.complete(3)])
    assert (g.n, g.num_edges) == (6, 6)
    assert disjoint_union([]) == Graph.empty(0)
    g = disjoint_union([build_J(3), Graph.star(3)])
    assert (g.n, g.num_edges) == (9, 10)
    with pytest.raises(CapacityError):
        disjoint_union([Graph.empty(40), Graph.empty(30)])


def test_validation():
    with pytest.raises(DomainError):
        Graph(2, (0b10, 0))
    with pytest.raises(DomainError):
        Graph(1, (1,))
    with pytest.raises(CapacityError):
        Graph.empty(65)
    with pytest.raises(DomainError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(DomainError):
        Graph.from_edges(3, [(1, 1)])


def test_vertex_set_ops():
    a, b = VertexSet.of([0, 2, 5]), VertexSet.of([2, 3])
    assert (a | b).to_list() == [0, 2, 3, 5]
    assert (a & b).to_list() == [2]
    assert (a - b).to_list() == [0, 5]
    assert 5 in a and 4 not in a and len(a) == 3
    assert repr(VertexSet(0)) == "{}"


def test_petersen_and_families():
    p = Graph.petersen()
    assert (p.n, p.num_edges, set(p.degrees())) == (10, 15, {3})
    assert nx.is_isomorphic(to_nx(p), nx.petersen_graph())
    assert Graph.cycle(5).is_odd_cycle() and not Graph.cycle(4).is_odd_cycle()
    assert Graph.complete_bipartite(2, 3).num_edges == 6


@given(graphs(max_n=9))
def test_components_partition_vertices(g):
    comps = g.components()
    union = 0
    for c in comps:
        assert union & c.mask == 0
        union |= c.mask
    assert union == g.vertex_mask
    for u, v in g.edges():
        assert any(u in c and v in c for c in comps)
    assert len(comps) == nx.number_connected_components(to_nx(g))


@given(graphs(max_n=8))
def test_complement_involution(g):
    assert g.complement().complement() == g
    assert g.num_edges + g.complement().num_edges == g.n * (g.n - 1) // 2


# -- graph6 ---------------------------------------------------------------------------


def test_graph6_examples():
    assert g6_encode(Graph.empty(2)) == b"A?"
    assert g6_encode(Graph.complete(2)) == b"A_"
    assert g6_decode("A_") == Graph.complete(2)


def test_graph6_matches_networkx_exhaustively_n_le_5():
    for n in range(1, 6):
        for g in labeled_graphs(n):
            ref = nx.to_graph6_bytes(to_nx(g), header=False).strip()
            assert g6_encode(g) == ref
            assert g6_decode(ref) == g


@given(graphs(min_n=1, max_n=12))
def test_graph6_round_trip(g):
    assert g6_decode(g6_encode(g)) == g


def test_graph6_long_size_form():
    g = Graph.path(63)
    data = g6_encode(g)
    assert data[:1] == b"~"
    assert data == nx.to_graph6_bytes(to_nx(g), header=False).strip()
    assert g6_decode(data) == g
    big = Graph.cycle(64)
    assert g6_decode(g6_encode(big)) == big


@pytest.mark.parametrize(
    "bad",
    ["", "A", "A_?", "Ab", ">>graph6<<A_", "A\x7f", "~??~???", "é"],
)
def test_graph6_rejects_malformed(bad):
    with pytest.raises(ParseError):
        g6_decode(bad)


def test_graph6_rejects_noncanonical_size_field():
    with pytest.raises(ParseError):
        g6_decode(b"~??B" + b"?")


def test_read_graph6_lines_skips_blank_lines():
    gs = list(read_graph6_lines(["A_\n", "\n", "Bw\n"]))
    assert [g.n for g in gs] == [2, 3]
