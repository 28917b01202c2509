"""Constructing hypercube-like graphs with verifiable construction traces.

A trace is a full binary tree: a Leaf is a single vertex, and a Node joins
the two equal-order graphs realized by its subtrees with a perfect matching
described by a bijection `sigma` (left-local vertex i is joined to
right-local vertex sigma[i]).

Canonical labeling: realizing a trace gives the left block the labels
0..2^(k-1)-1 and offsets the right block by 2^(k-1), recursively. Under
this scheme the canonical hypercube gets standard binary-code labels, the
leftmost depth-(n-h) block is exactly {0..2^h-1}, and the level of an edge
(u, v) is simply bit_length(u xor v).
"""

from __future__ import annotations

from dataclasses import dataclass

import json

from .errors import TraceError, UsageError
from .graph import Graph, MAX_ORDER, canonical_edge, mask_of

MASK64 = (1 << 64) - 1

MAX_DIMENSION = MAX_ORDER.bit_length() - 1  # order 2^n must stay within MAX_ORDER


@dataclass(frozen=True)
class Leaf:
    """A single vertex, the base of the recursion."""


@dataclass(frozen=True)
class Node:
    left: "Leaf | Node"
    right: "Leaf | Node"
    sigma: tuple[int, ...]


Trace = Leaf | Node

LEAF = Leaf()


def identity_matching(size: int) -> tuple[int, ...]:
    return tuple(range(size))


def _realize(trace: Trace, path: str) -> tuple[int, list[tuple[int, int]]]:
    if isinstance(trace, Leaf):
        return 1, []
    if not isinstance(trace, Node):
        raise TraceError(f"not a trace node: {trace!r}", path)
    lo, left_edges = _realize(trace.left, path + "0")
    ro, right_edges = _realize(trace.right, path + "1")
    if lo != ro:
        raise TraceError(f"unbalanced subtrees: left order {lo}, right order {ro}", path)
    sigma = trace.sigma
    if len(sigma) != lo:
        raise TraceError(f"matching length {len(sigma)} != block order {lo}", path)
    if sorted(sigma) != list(range(lo)):
        raise TraceError("matching is not a bijection", path)
    edges = left_edges
    edges.extend((u + lo, v + lo) for u, v in right_edges)
    edges.extend((i, lo + sigma[i]) for i in range(lo))
    return 2 * lo, edges


def realize(trace: Trace) -> Graph:
    """Realize a trace under canonical labeling. Structural defects
    (unbalanced subtrees, non-bijective matchings) raise TraceError naming
    the offending node path."""
    if trace_depth(trace) > MAX_DIMENSION:
        raise UsageError(
            f"trace depth exceeds the construction cap {MAX_DIMENSION}")
    order, edges = _realize(trace, "")
    return Graph.from_edges(order, edges)


def trace_depth(trace: Trace) -> int:
    d = 0
    t = trace
    while isinstance(t, Node):
        d += 1
        t = t.left
    return d


def validate_trace(trace: Trace) -> Graph:
    """Realize and fully check a trace: balanced depths, bijective matchings,
    and that the result is n-regular, connected, of order 2^n."""
    g = realize(trace)
    n = trace_depth(trace)
    if g.order != 1 << n:
        raise TraceError(f"realized order {g.order} != 2^{n}", "")
    if any(a.bit_count() != n for a in g.adj):
        raise TraceError(f"realized graph is not {n}-regular", "")
    if not g.is_connected():
        raise TraceError("realized graph is not connected", "")
    return g


def oplus(g0: Graph, g1: Graph, sigma: tuple[int, ...] | list[int]) -> Graph:
    """Join two equal-order graphs by the perfect matching induced by the
    bijection sigma; the right block is relabeled with offset |g0|."""
    if g0.order != g1.order:
        raise UsageError(f"order mismatch: {g0.order} vs {g1.order}")
    sigma = tuple(sigma)
    if len(sigma) != g0.order or sorted(sigma) != list(range(g0.order)):
        raise UsageError("sigma is not a bijection on the block")
    k = g0.order
    edges = g0.edges()
    edges += [(u + k, v + k) for u, v in g1.edges()]
    edges += [(i, k + sigma[i]) for i in range(k)]
    return Graph.from_edges(2 * k, edges)


@dataclass(frozen=True)
class HlGraph:
    """A hypercube-like graph together with the trace witnessing membership.

    `relabel` maps canonical trace labels to the graph's public labels; it is
    the identity for everything except the fixed figure fixture, whose
    published vertex numbering does not put the trace blocks on contiguous
    labels.
    """

    graph: Graph
    trace: Trace
    n: int
    relabel: tuple[int, ...]
    label: str


def relabel_graph(g: Graph, perm: tuple[int, ...]) -> Graph:
    """Copy of g with vertex v renamed perm[v]."""
    return Graph.from_edges(g.order, [(perm[u], perm[v]) for u, v in g.edges()])


def _identity_relabel(order: int) -> tuple[int, ...]:
    return tuple(range(order))


def from_trace(trace: Trace, label: str | None = None) -> HlGraph:
    """Build an HlGraph from an explicit trace (the entry point for custom
    matchings, e.g. the twisted cube variants)."""
    g = validate_trace(trace)
    n = trace_depth(trace)
    return HlGraph(g, trace, n, _identity_relabel(g.order),
                   label if label is not None else f"HL{n}")


def _check_dimension(n: int) -> None:
    if n < 0:
        raise UsageError(f"dimension {n} is negative")
    if n > MAX_DIMENSION:
        raise UsageError(f"dimension {n} exceeds the construction cap {MAX_DIMENSION}")


def hypercube(n: int) -> HlGraph:
    """The canonical n-cube: identity matchings at every level, so labels are
    binary codes and u ~ v iff popcount(u xor v) == 1."""
    _check_dimension(n)
    t: Trace = LEAF
    for k in range(1, n + 1):
        t = Node(t, t, identity_matching(1 << (k - 1)))
    return HlGraph(realize(t), t, n, _identity_relabel(1 << n), f"Q{n}")


# -- seeded random members ---------------------------------------------------
#
# Reproducibility contract: the matching at each internal node is produced by
# a Fisher-Yates shuffle driven by splitmix64, seeded with
#     seed XOR fnv1a64(path)
# where `path` is the node's root path ("" for the root, then "0"/"1"
# appended for each left/right descent) and fnv1a64 is the 64-bit FNV-1a hash
# of its ASCII bytes. Fisher-Yates runs i = size-1 .. 1 with
# j = next_u64() % (i + 1). Identical (n, seed) gives an identical edge set
# on any implementation.

_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)


def fnv1a64(text: str) -> int:
    h = 0xCBF29CE484222325
    for byte in text.encode("ascii"):
        h ^= byte
        h = (h * 0x100000001B3) & MASK64
    return h


def _random_sigma(size: int, seed: int, path: str) -> tuple[int, ...]:
    rng = SplitMix64(seed ^ fnv1a64(path))
    sigma = list(range(size))
    for i in range(size - 1, 0, -1):
        j = rng.next_u64() % (i + 1)
        sigma[i], sigma[j] = sigma[j], sigma[i]
    return tuple(sigma)


def _random_trace(k: int, seed: int, path: str) -> Trace:
    if k == 0:
        return LEAF
    return Node(_random_trace(k - 1, seed, path + "0"),
                _random_trace(k - 1, seed, path + "1"),
                _random_sigma(1 << (k - 1), seed, path))


def random_hl(n: int, seed: int) -> HlGraph:
    """A uniformly sampled member of the dimension-n family, deterministic in
    (n, seed); see the reproducibility contract above."""
    _check_dimension(n)
    seed &= MASK64
    t = _random_trace(n, seed, "")
    return HlGraph(realize(t), t, n, _identity_relabel(1 << n), f"HL{n}[seed={seed}]")


# -- embedded blocks and edge levels -----------------------------------------

def block_vertices(hl: HlGraph, h: int) -> int:
    """Vertex mask of the leftmost depth-(n-h) block; its induced subgraph is
    the member realized by the trace's left-descendant at that depth."""
    if not 0 <= h <= hl.n:
        raise UsageError(f"block level {h} outside 0..{hl.n}")
    return mask_of(hl.relabel[i] for i in range(1 << h))


def left_descendant(trace: Trace, depth: int) -> Trace:
    t = trace
    for _ in range(depth):
        if not isinstance(t, Node):
            raise UsageError("trace too shallow for requested block")
        t = t.left
    return t


def edge_level(hl: HlGraph, e: tuple[int, int]) -> int:
    """The unique recursion level whose matching contains the edge: under
    canonical labels that is bit_length(u xor v)."""
    u, v = canonical_edge(*e)
    if not hl.graph.has_edge(u, v):
        raise UsageError(f"({u},{v}) is not an edge of the graph")
    inv = [0] * len(hl.relabel)
    for canon, pub in enumerate(hl.relabel):
        inv[pub] = canon
    return (inv[u] ^ inv[v]).bit_length()


# -- the figure fixture -------------------------------------------------------
#
# Vertex map: a1..a4, b1..b4, c1..c4, d1..d4 -> 0..15 in that order. The four
# squares are 4-cycles; each {a,c} / {b,d} pair of squares is joined by a
# perfect matching (an HL_3 member); the remaining eight edges form the
# top-level matching between those two halves.

FIG1_EDGES: tuple[tuple[int, int], ...] = (
    # squares
    (0, 1), (1, 2), (2, 3), (0, 3),
    (4, 5), (5, 6), (6, 7), (4, 7),
    (8, 9), (9, 10), (10, 11), (8, 11),
    (12, 13), (13, 14), (14, 15), (12, 15),
    # cross edges inside the halves
    (3, 8), (2, 9), (7, 12), (6, 13),
    (0, 11), (1, 10), (4, 15), (5, 14),
    # top-level matching
    (1, 4), (2, 7), (9, 12), (10, 15),
    (3, 5), (6, 8), (11, 13), (0, 14),
)


def _fig1_trace() -> Node:
    pair = Node(LEAF, LEAF, (0,))
    square = Node(pair, pair, (1, 0))
    half = Node(square, square, (3, 2, 1, 0))
    return Node(half, half, (6, 0, 3, 1, 2, 4, 7, 5))


FIG1_TRACE = _fig1_trace()

# canonical trace label -> figure label (the halves {a*,c*} / {b*,d*} are not
# contiguous in the published numbering)
FIG1_RELABEL: tuple[int, ...] = (0, 1, 2, 3, 8, 9, 10, 11, 4, 5, 6, 7, 12, 13, 14, 15)


def fig1_graph() -> HlGraph:
    """The fixed 16-vertex, 32-edge, 4-regular member drawn in the figure."""
    g = Graph.from_edges(16, FIG1_EDGES)
    return HlGraph(g, FIG1_TRACE, 4, FIG1_RELABEL, "fig1")


# -- trace text format --------------------------------------------------------
#
# {"leaf":true} or {"left":...,"right":...,"sigma":[...]}, compact JSON, one
# line, newline-terminated. Writing is canonical so round trips are
# byte-exact.

def _trace_payload(t: Trace):
    if isinstance(t, Leaf):
        return {"leaf": True}
    return {"left": _trace_payload(t.left),
            "right": _trace_payload(t.right),
            "sigma": list(t.sigma)}


def trace_to_text(t: Trace) -> str:
    return json.dumps(_trace_payload(t), separators=(",", ":")) + "\n"


def _trace_from_obj(obj, path: str) -> Trace:
    if not isinstance(obj, dict):
        raise UsageError(f"trace node at '{path or '<root>'}' is not an object")
    if set(obj) == {"leaf"}:
        if obj["leaf"] is not True:
            raise UsageError(f"leaf marker at '{path or '<root>'}' must be true")
        return LEAF
    if set(obj) != {"left", "right", "sigma"}:
        raise UsageError(f"trace node at '{path or '<root>'}' has keys {sorted(obj)}")
    sigma = obj["sigma"]
    if (not isinstance(sigma, list)
            or any(not isinstance(x, int) or isinstance(x, bool) for x in sigma)):
        raise UsageError(f"sigma at '{path or '<root>'}' must be a list of integers")
    return Node(_trace_from_obj(obj["left"], path + "0"),
                _trace_from_obj(obj["right"], path + "1"),
                tuple(sigma))


def trace_from_text(text: str) -> Trace:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"trace text is not valid JSON: {exc}") from exc
    return _trace_from_obj(obj, "")


def write_trace(path, t: Trace) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(trace_to_text(t))


def read_trace(path) -> Trace:
    with open(path, "r", newline="") as fh:
        return trace_from_text(fh.read())
