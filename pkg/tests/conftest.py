"""Shared fixtures, hypothesis strategies, and independent reference
implementations used as oracles."""

from __future__ import annotations

import random
from collections import deque

import pytest
from hypothesis import strategies as st

from hlcut import Graph, HlGraph, fig1_graph, hypercube, random_hl


# -- independent references (kept deliberately separate from package code) ----

def reference_connected(order: int, edges, removed=frozenset()) -> bool:
    """Plain adjacency-dict BFS."""
    removed = {tuple(sorted(e)) for e in removed}
    adj = {v: set() for v in range(order)}
    for u, v in edges:
        if tuple(sorted((u, v))) not in removed:
            adj[u].add(v)
            adj[v].add(u)
    if order <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == order


def random_simple_graph(rng: random.Random, order: int, p: float = 0.45) -> Graph:
    edges = [(u, v) for u in range(order) for v in range(u + 1, order)
             if rng.random() < p]
    return Graph.from_edges(order, edges)


# -- hypothesis strategies -----------------------------------------------------

@st.composite
def small_graphs(draw) -> Graph:
    order = draw(st.integers(min_value=1, max_value=9))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    p = draw(st.sampled_from([0.2, 0.45, 0.7]))
    return random_simple_graph(random.Random(seed), order, p)


@st.composite
def hl_members(draw, max_n: int = 5) -> HlGraph:
    n = draw(st.integers(min_value=0, max_value=max_n))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_hl(n, seed)


# -- common fixtures -----------------------------------------------------------

@pytest.fixture(scope="session")
def q2():
    return hypercube(2)


@pytest.fixture(scope="session")
def q3():
    return hypercube(3)


@pytest.fixture(scope="session")
def q4():
    return hypercube(4)


@pytest.fixture(scope="session")
def fig1():
    return fig1_graph()
