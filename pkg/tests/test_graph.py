"""Core graph primitives: degrees, induced degrees, boundaries, connectivity,
and the canonical text format."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from hlcut import Graph, UsageError, graph_from_text, graph_to_text, hypercube, mask_of
from hlcut.graph import MAX_ORDER

from conftest import random_simple_graph, reference_connected, small_graphs


def test_degree_hypercube(q3):
    assert q3.graph.degree(0) == 3


def test_degree_single_edge():
    k2 = hypercube(1).graph
    assert k2.degree(1) == 1


def test_degree_fig1(fig1):
    assert fig1.graph.degree(0) == 4
    assert all(fig1.graph.degree(v) == 4 for v in range(16))


def test_degree_out_of_range(q3):
    with pytest.raises(UsageError):
        q3.graph.degree(8)


def test_induced_min_degree_whole_graph(q3):
    assert q3.graph.induced_min_degree(q3.graph.vertex_mask) == 3


def test_induced_min_degree_singleton(q3):
    assert q3.graph.induced_min_degree(1) == 0


def test_induced_min_degree_three_of_cycle(q2):
    # any 3 vertices of a 4-cycle induce a path
    full = q2.graph.vertex_mask
    for v in range(4):
        assert q2.graph.induced_min_degree(full ^ (1 << v)) == 1


def test_induced_min_degree_empty_rejected(q3):
    with pytest.raises(UsageError):
        q3.graph.induced_min_degree(0)


def test_edge_boundary_singleton(q3):
    assert q3.graph.edge_boundary(1) == ((0, 1), (0, 2), (0, 4))


def test_edge_boundary_empty(q3):
    assert q3.graph.edge_boundary(0) == ()


def test_edge_boundary_block(q4):
    boundary = q4.graph.edge_boundary(mask_of([0, 1, 2, 3]))
    assert len(boundary) == 8


def test_is_connected(q3):
    assert q3.graph.is_connected()


def test_single_edge_removal_disconnects_k2():
    k2 = hypercube(1).graph
    assert not k2.is_connected(removed=[(0, 1)])


def test_q3_survives_any_single_edge_removal(q3):
    for e in q3.graph.edges():
        assert q3.graph.is_connected(removed=[e])


def test_removing_non_edge_rejected(q3):
    with pytest.raises(UsageError):
        q3.graph.is_connected(removed=[(0, 3)])


def test_graph_construction_rejects_loops():
    with pytest.raises(UsageError):
        Graph.from_edges(2, [(0, 0)])


def test_graph_rejects_order_above_cap():
    with pytest.raises(UsageError):
        Graph(MAX_ORDER + 1, [0] * (MAX_ORDER + 1))


def test_graph_is_immutable(q3):
    with pytest.raises(AttributeError):
        q3.graph.order = 5


@settings(max_examples=60)
@given(small_graphs())
def test_boundary_symmetric_in_complement(g):
    rng = random.Random(g.num_edges * 31 + g.order)
    x = rng.getrandbits(g.order)
    assert g.edge_boundary(x) == g.edge_boundary(g.vertex_mask ^ x)


@settings(max_examples=60)
@given(small_graphs())
def test_handshake(g):
    assert sum(g.degree(v) for v in range(g.order)) == 2 * g.num_edges


@settings(max_examples=60)
@given(small_graphs())
def test_min_degree_plus_max_boundary_within_max_degree(g):
    rng = random.Random(g.order * 7919 + g.num_edges)
    x = rng.getrandbits(g.order)
    if x == 0:
        x = 1
    worst_boundary = max(
        (g.adj[v] & ~x).bit_count()
        for v in range(g.order) if x >> v & 1)
    assert g.induced_min_degree(x) + worst_boundary <= g.max_degree()


def test_connectivity_agrees_with_reference_bfs():
    rng = random.Random(20240511)
    for _ in range(100):
        order = rng.randint(1, 9)
        g = random_simple_graph(rng, order, rng.choice([0.15, 0.4, 0.7]))
        assert g.is_connected() == reference_connected(order, g.edges())


# -- text format ----------------------------------------------------------------

def test_text_round_trip(q4):
    text = graph_to_text(q4.graph)
    assert text.startswith("16 32\n")
    again = graph_from_text(text)
    assert again == q4.graph
    assert graph_to_text(again) == text


def test_text_round_trip_random_graphs():
    rng = random.Random(7)
    for _ in range(25):
        g = random_simple_graph(rng, rng.randint(1, 9))
        assert graph_from_text(graph_to_text(g)) == g


@pytest.mark.parametrize("bad", [
    "",                                # empty
    "2 1\n0 1",                        # missing final newline
    "2 0\n0 1\n",                      # edge count mismatch
    "2 1\n1 0\n",                      # not (min,max)
    "3 2\n1 2\n0 1\n",                 # out of ascending order
    "2 1\n0  1\n",                     # non-canonical spacing
    "x 1\n0 1\n",                      # bad header
    "2 1\n0 2\n",                      # endpoint out of range
])
def test_text_rejects_malformed(bad):
    with pytest.raises(UsageError):
        graph_from_text(bad)
