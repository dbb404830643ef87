"""Shared graph pools and brute-force helpers for the test suite."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from pathlib import Path

import networkx as nx
from hypothesis import strategies as st

from graphcert.graphcore import Graph

DATA = Path(__file__).with_name("data")


def to_graph(G: nx.Graph) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return Graph(len(mapping), [(mapping[u], mapping[v]) for u, v in G.edges()])


@lru_cache(maxsize=None)
def atlas(max_n: int = 7, min_n: int = 1) -> tuple[Graph, ...]:
    """One graph per isomorphism class with min_n <= n <= max_n (max_n <= 7)."""
    return tuple(to_graph(G) for G in nx.graph_atlas_g() if min_n <= G.number_of_nodes() <= max_n)


@lru_cache(maxsize=None)
def atlas8() -> tuple[Graph, ...]:
    """All 12346 graphs on 8 vertices up to isomorphism (frozen by data/make_graphs8.py)."""
    lines = (DATA / "graphs8.g6").read_bytes().split()
    return tuple(to_graph(nx.from_graph6_bytes(b)) for b in lines)


def labeled_graphs(n: int):
    """All 2^(n choose 2) labelled graphs on 0..n-1."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


def random_bipartite(rng: random.Random, a: int, b: int, p: float) -> Graph:
    return Graph(a + b, [(u, a + w) for u in range(a) for w in range(b) if rng.random() < p])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, k in zip(pairs, keep) if k])


def components_bf(g: Graph, removed=()) -> int:
    """Component count by union-find; independent of graphcore."""
    gone = set(removed)
    parent = {v: v for v in range(g.n) if v not in gone}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        if u in parent and v in parent:
            parent[find(u)] = find(v)
    return len({find(v) for v in parent})


def edge_components_bf(n: int, edges) -> int:
    g = Graph(n, edges)
    return components_bf(g)


def is_proper_vertex_bf(g: Graph, col) -> bool:
    return all(col[u] != col[v] for u, v in g.edges)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
