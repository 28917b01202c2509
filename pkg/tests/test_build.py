"""Construction: the join operation, traces, canonical and random members,
embedded blocks, edge levels, and the figure fixture."""

from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given, settings

from hlcut import (FIG1_EDGES, TraceError, UsageError, block_vertices,
                   edge_level, fig1_graph, from_trace, hypercube, mask_of,
                   oplus, random_hl, realize, trace_from_text, trace_to_text,
                   validate_trace)
from hlcut.build import (LEAF, Leaf, Node, SplitMix64, fnv1a64,
                         left_descendant, relabel_graph)

from conftest import hl_members


# -- oplus ----------------------------------------------------------------------

def test_oplus_two_singletons_is_an_edge():
    k1 = hypercube(0).graph
    g = oplus(k1, k1, (0,))
    assert g.order == 2 and g.edges() == [(0, 1)]


def test_oplus_identity_on_edges_is_a_square():
    k2 = hypercube(1).graph
    g = oplus(k2, k2, (0, 1))
    assert g.order == 4 and g.num_edges == 4
    assert all(g.degree(v) == 2 for v in range(4))
    assert g.is_connected()


def test_oplus_reversed_matching_on_squares():
    q2 = hypercube(2).graph
    g = oplus(q2, q2, (3, 2, 1, 0))
    assert g.order == 8 and all(g.degree(v) == 3 for v in range(8))
    assert g.is_connected()


def test_oplus_added_edges_form_perfect_matching():
    q2 = hypercube(2).graph
    for sigma in [(0, 1, 2, 3), (2, 0, 3, 1), (3, 2, 1, 0)]:
        g = oplus(q2, q2, sigma)
        cross = [e for e in g.edges() if (e[0] < 4) != (e[1] < 4)]
        covered = [v for e in cross for v in e]
        assert len(cross) == 4 and sorted(covered) == list(range(8))


def test_oplus_rejects_order_mismatch():
    with pytest.raises(UsageError):
        oplus(hypercube(1).graph, hypercube(2).graph, (0, 1))


def test_oplus_rejects_non_bijection():
    k2 = hypercube(1).graph
    with pytest.raises(UsageError):
        oplus(k2, k2, (0, 0))


# -- hypercube -------------------------------------------------------------------

def test_hypercube_tiny():
    assert hypercube(1).graph.edges() == [(0, 1)]
    assert hypercube(0).graph.order == 1


def test_hypercube_q3_shape(q3):
    g = q3.graph
    assert g.order == 8 and g.num_edges == 12
    assert all(g.degree(v) == 3 for v in range(8))


def test_hypercube_adjacency_is_hamming(q4):
    assert q4.graph.has_edge(0, 1)
    assert not q4.graph.has_edge(0, 3)


@pytest.mark.parametrize("n", range(0, 9))
def test_hypercube_equals_binary_code_graph(n):
    g = hypercube(n).graph
    for u in range(g.order):
        expected = mask_of(u ^ (1 << b) for b in range(n))
        assert g.adj[u] == expected


def test_hypercube_dimension_cap():
    with pytest.raises(UsageError):
        hypercube(11)


# -- random members ---------------------------------------------------------------

def test_splitmix64_reference_vector():
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(5)] == [
        6457827717110365317, 3203168211198807973, 9817491932198370423,
        4593380528125082431, 16408922859458223821]
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF


def test_fnv1a64_reference_vector():
    assert fnv1a64("") == 0xCBF29CE484222325
    assert fnv1a64("a") == 0xAF63DC4C8601EC8C
    assert fnv1a64("foobar") == 0x85944171F73967E8


def test_random_hl_deterministic():
    a = random_hl(4, 7)
    b = random_hl(4, 7)
    assert a.graph == b.graph
    assert trace_to_text(a.trace) == trace_to_text(b.trace)


def test_random_hl_shape():
    for seed in (0, 1, 2**63, 12345):
        hl = random_hl(4, seed)
        g = hl.graph
        assert g.order == 16 and g.num_edges == 32
        assert all(g.degree(v) == 4 for v in range(16))
        assert g.is_connected()


def test_random_hl_base_case():
    assert random_hl(0, 99).graph.order == 1


def test_random_hl_seeds_differ():
    assert random_hl(4, 1).graph != random_hl(4, 2).graph


# -- traces ------------------------------------------------------------------------

def test_validate_trace_round_trips_hypercube(q3):
    assert validate_trace(q3.trace) == q3.graph


def test_validate_trace_rejects_non_bijection():
    bad = Node(Node(LEAF, LEAF, (0,)), Node(LEAF, LEAF, (0,)), (0, 0))
    with pytest.raises(TraceError) as err:
        validate_trace(bad)
    assert "bijection" in str(err.value)


def test_validate_trace_rejects_unbalanced():
    lopsided = Node(Node(LEAF, LEAF, (0,)), LEAF, (0, 1))
    with pytest.raises(TraceError):
        validate_trace(lopsided)


def test_trace_error_names_the_path():
    bad = Node(Node(LEAF, LEAF, (0, 1)), Node(LEAF, LEAF, (0,)), (0, 1))
    with pytest.raises(TraceError) as err:
        validate_trace(bad)
    assert err.value.path == "0"


@settings(max_examples=30)
@given(hl_members(max_n=6))
def test_realized_members_are_regular_connected(hl):
    g = hl.graph
    assert g.order == 1 << hl.n
    assert all(g.degree(v) == hl.n for v in range(g.order))
    assert g.is_connected()


def test_fifty_seeded_traces_up_to_dimension_eight():
    for i in range(50):
        n = 2 + i % 7  # dimensions 2..8
        hl = random_hl(n, 1000 + i)
        assert hl.graph.order == 1 << n
        assert all(hl.graph.degree(v) == n for v in range(hl.graph.order))
        assert hl.graph.is_connected()


def test_trace_text_round_trip_is_byte_exact(q4):
    for hl in (q4, random_hl(5, 3), fig1_graph()):
        text = trace_to_text(hl.trace)
        again = trace_from_text(text)
        assert trace_to_text(again) == text
        assert realize(again) == realize(hl.trace)


def test_trace_text_shape():
    assert trace_to_text(LEAF) == '{"leaf":true}\n'
    k2 = Node(LEAF, LEAF, (0,))
    assert trace_to_text(k2) == \
        '{"left":{"leaf":true},"right":{"leaf":true},"sigma":[0]}\n'


@pytest.mark.parametrize("bad", [
    "[]\n",
    '{"leaf":false}\n',
    '{"left":{"leaf":true},"sigma":[0]}\n',
    '{"left":{"leaf":true},"right":{"leaf":true},"sigma":[true]}\n',
    "not json",
])
def test_trace_text_rejects_malformed(bad):
    with pytest.raises(UsageError):
        trace_from_text(bad)


def test_from_trace_entry_point_for_custom_matchings():
    # a twisted member: squares joined by a reversing matching
    pair = Node(LEAF, LEAF, (0,))
    square = Node(pair, pair, (1, 0))
    twisted = Node(square, square, (3, 2, 1, 0))
    hl = from_trace(twisted, label="twisted3")
    assert hl.n == 3 and hl.label == "twisted3"
    assert all(hl.graph.degree(v) == 3 for v in range(8))


# -- blocks and levels ---------------------------------------------------------------

def test_block_vertices_square_block(q4):
    block = block_vertices(q4, 2)
    assert block == mask_of([0, 1, 2, 3])
    assert q4.graph.induced_min_degree(block) == 2  # a 4-cycle


def test_block_vertices_extremes(q4, fig1):
    for hl in (q4, fig1):
        assert block_vertices(hl, hl.n) == hl.graph.vertex_mask
        assert block_vertices(hl, 0) == 1 << hl.relabel[0]


def test_block_out_of_range(q4):
    with pytest.raises(UsageError):
        block_vertices(q4, 5)


@settings(max_examples=25)
@given(hl_members(max_n=5))
def test_block_induces_left_descendant(hl):
    for h in range(hl.n + 1):
        block = block_vertices(hl, h)
        sub = realize(left_descendant(hl.trace, hl.n - h))
        induced = [(u, v) for u, v in hl.graph.edges()
                   if block >> u & 1 and block >> v & 1]
        assert sorted(induced) == sub.edges()


def test_edge_level_top_and_bottom(q3):
    assert edge_level(q3, (0, 4)) == 3
    assert edge_level(q3, (0, 1)) == 1


def test_edge_level_rejects_non_edge(q3):
    with pytest.raises(UsageError):
        edge_level(q3, (0, 3))


@settings(max_examples=25)
@given(hl_members(max_n=6))
def test_edge_levels_partition_into_equal_matchings(hl):
    if hl.n == 0:
        return
    counts = Counter(edge_level(hl, e) for e in hl.graph.edges())
    assert set(counts) == set(range(1, hl.n + 1))
    assert all(c == 1 << (hl.n - 1) for c in counts.values())


# -- figure fixture ---------------------------------------------------------------------

def test_fig1_shape(fig1):
    g = fig1.graph
    assert g.order == 16 and g.num_edges == 32
    assert all(g.degree(v) == 4 for v in range(16))
    assert g.is_connected()


def test_fig1_exact_edge_set(fig1):
    assert sorted(tuple(sorted(e)) for e in FIG1_EDGES) == fig1.graph.edges()


def test_fig1_trace_realizes_the_fixture(fig1):
    canonical = validate_trace(fig1.trace)
    assert relabel_graph(canonical, fig1.relabel) == fig1.graph


def test_fig1_blocks_are_the_figure_halves(fig1):
    assert block_vertices(fig1, 3) == mask_of([0, 1, 2, 3, 8, 9, 10, 11])
    assert block_vertices(fig1, 2) == mask_of([0, 1, 2, 3])
    # each half induces a 3-regular member
    assert fig1.graph.induced_min_degree(block_vertices(fig1, 3)) == 3
