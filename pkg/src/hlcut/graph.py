"""Immutable simple graphs with bitmask adjacency and the exact primitives
everything else is built on: degrees, induced minimum degree, edge boundaries,
and connectivity under edge deletion.

Vertices are integers 0..order-1. A vertex set is a plain int used as a
bitmask (bit v set <=> vertex v in the set). An edge is a (min, max) pair;
edge sets are iterables of such pairs and are canonicalized on input.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import UsageError

Edge = tuple[int, int]

# Construction is allowed up to order 2^10; exhaustive subset scans are gated
# much lower (see SOLVER_GATE) because they cost 2^order.
MAX_ORDER = 1 << 10
SOLVER_GATE = 32


def canonical_edge(u: int, v: int) -> Edge:
    if u == v:
        raise UsageError(f"loop edge ({u},{v}) is not allowed")
    return (u, v) if u < v else (v, u)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Set bit positions of `mask`, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def check_gate(order: int, override_gate: bool) -> None:
    if order > SOLVER_GATE and not override_gate:
        raise UsageError(
            f"order {order} exceeds the exhaustive-search gate of {SOLVER_GATE} "
            f"(pass the override flag to force a 2^{order} scan)")


def min_degree_at_least(adj: tuple[int, ...] | list[int], mask: int, h: int) -> bool:
    """True iff every vertex of `mask` has at least h neighbors inside `mask`."""
    if h <= 0:
        return True
    t = mask
    while t:
        b = t & -t
        if (adj[b.bit_length() - 1] & mask).bit_count() < h:
            return False
        t ^= b
    return True


def connected_within(adj: tuple[int, ...] | list[int], mask: int) -> bool:
    """True iff the vertices of `mask` form one component under `adj`
    restricted to `mask`. Zero or one vertex counts as connected."""
    if mask == 0 or mask & (mask - 1) == 0:
        return True
    start = mask & -mask
    comp = start
    frontier = start
    while frontier:
        reach = 0
        t = frontier
        while t:
            b = t & -t
            reach |= adj[b.bit_length() - 1]
            t ^= b
        frontier = reach & mask & ~comp
        comp |= frontier
    return comp == mask


class Graph:
    """Undirected simple graph, immutable after construction.

    `adj[v]` is the neighbor bitmask of v. Construction validates symmetry,
    absence of loops, and the order cap.
    """

    __slots__ = ("order", "adj", "num_edges")

    def __init__(self, order: int, adj: Iterable[int]):
        if order < 0 or order > MAX_ORDER:
            raise UsageError(f"order {order} outside supported range 0..{MAX_ORDER}")
        adj = tuple(adj)
        if len(adj) != order:
            raise UsageError(f"adjacency has {len(adj)} entries for order {order}")
        full = (1 << order) - 1
        half_edges = 0
        for v, nbrs in enumerate(adj):
            if nbrs & ~full:
                raise UsageError(f"vertex {v} has neighbors outside 0..{order - 1}")
            if nbrs >> v & 1:
                raise UsageError(f"vertex {v} has a loop")
            half_edges += nbrs.bit_count()
            t = nbrs
            while t:
                b = t & -t
                u = b.bit_length() - 1
                if not adj[u] >> v & 1:
                    raise UsageError(f"adjacency not symmetric on ({v},{u})")
                t ^= b
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "num_edges", half_edges // 2)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * order
        for u, v in edges:
            u, v = canonical_edge(u, v)
            if not (0 <= u < order and 0 <= v < order):
                raise UsageError(f"edge ({u},{v}) outside 0..{order - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(order, adj)

    # -- queries -----------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def edges(self) -> list[Edge]:
        """All edges as (min, max) pairs in ascending lexicographic order."""
        out = []
        for u in range(self.order):
            t = self.adj[u] >> (u + 1) << (u + 1)
            while t:
                b = t & -t
                out.append((u, b.bit_length() - 1))
                t ^= b
        return out

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.order and 0 <= v < self.order):
            return False
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        if not 0 <= v < self.order:
            raise UsageError(f"vertex {v} outside 0..{self.order - 1}")
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    def _check_vertex_set(self, x: int) -> None:
        if x < 0 or x & ~self.vertex_mask:
            raise UsageError("vertex set outside the graph's vertex range")

    def induced_min_degree(self, x: int) -> int:
        """Minimum degree of the subgraph induced by the vertex set `x`."""
        self._check_vertex_set(x)
        if x == 0:
            raise UsageError("induced minimum degree of the empty set is undefined")
        adj = self.adj
        best = self.order
        t = x
        while t:
            b = t & -t
            d = (adj[b.bit_length() - 1] & x).bit_count()
            if d < best:
                best = d
                if best == 0:
                    break
            t ^= b
        return best

    def edge_boundary(self, x: int) -> tuple[Edge, ...]:
        """Edges with exactly one endpoint in `x`, sorted ascending."""
        self._check_vertex_set(x)
        out = []
        t = x
        while t:
            b = t & -t
            v = b.bit_length() - 1
            outside = self.adj[v] & ~x
            while outside:
                ob = outside & -outside
                out.append(canonical_edge(v, ob.bit_length() - 1))
                outside ^= ob
            t ^= b
        out.sort()
        return tuple(out)

    def boundary_size(self, x: int) -> int:
        self._check_vertex_set(x)
        y = self.vertex_mask ^ x
        c = 0
        t = x
        while t:
            b = t & -t
            c += (self.adj[b.bit_length() - 1] & y).bit_count()
            t ^= b
        return c

    def _check_edges(self, edges: Iterable[tuple[int, int]]) -> list[Edge]:
        out = []
        for u, v in edges:
            e = canonical_edge(u, v)
            if not self.has_edge(*e):
                raise UsageError(f"({e[0]},{e[1]}) is not an edge of the graph")
            out.append(e)
        return out

    def adj_without(self, removed: Iterable[tuple[int, int]]) -> list[int]:
        """Adjacency masks of G minus the given edges; validates membership."""
        adj = list(self.adj)
        for u, v in self._check_edges(removed):
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return adj

    def is_connected(self, removed: Iterable[tuple[int, int]] = ()) -> bool:
        """Connectivity of the graph minus `removed`, over all vertices.
        Graphs on 0 or 1 vertices are connected."""
        adj = self.adj_without(removed)
        return connected_within(adj, self.vertex_mask)

    # -- equality ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph)
                and self.order == other.order and self.adj == other.adj)

    def __hash__(self) -> int:
        return hash((self.order, self.adj))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.num_edges})"


# -- text format ------------------------------------------------------------
#
# Line 1: "<order> <edge-count>"; then one "u v" line per edge with u < v,
# ascending lexicographic, ASCII decimal, every line newline-terminated.
# Writing is canonical, so write(read(write(g))) is byte-identical.

def graph_to_text(g: Graph) -> str:
    lines = [f"{g.order} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    lines = text.split("\n")
    if not lines or lines[-1] != "":
        raise UsageError("graph text must end with a newline")
    lines = lines[:-1]
    if not lines:
        raise UsageError("empty graph text")
    head = lines[0].split(" ")
    if len(head) != 2:
        raise UsageError("header must be '<order> <edge-count>'")
    try:
        order, count = int(head[0]), int(head[1])
    except ValueError as exc:
        raise UsageError(f"bad header {lines[0]!r}") from exc
    if len(lines) - 1 != count:
        raise UsageError(f"header promises {count} edges, found {len(lines) - 1}")
    edges: list[Edge] = []
    prev = None
    for ln in lines[1:]:
        parts = ln.split(" ")
        if len(parts) != 2:
            raise UsageError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise UsageError(f"bad edge line {ln!r}") from exc
        if not u < v:
            raise UsageError(f"edge ({u},{v}) not in (min,max) form")
        if prev is not None and not prev < (u, v):
            raise UsageError(f"edges out of ascending order at ({u},{v})")
        prev = (u, v)
        edges.append((u, v))
    g = Graph.from_edges(order, edges)
    if graph_to_text(g) != text:
        raise UsageError("graph text is not in canonical form")
    return g


def write_graph(path, g: Graph) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(graph_to_text(g))


def read_graph(path) -> Graph:
    with open(path, "r", newline="") as fh:
        return graph_from_text(fh.read())
