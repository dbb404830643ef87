"""Local edits, contraction, complement/union/join, products and derived graphs."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .errors import AlreadyPresent, EmptySet, Missing
from .graphcore import Graph

PRODUCT_KINDS = ("cartesian", "tensor", "strong", "lexicographic")


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise Missing(f"vertex {v} not in graph")


def delete_vertex(g: Graph, v: int) -> Graph:
    """G - v; vertices above v shift down by one."""
    _check_vertex(g, v)
    f = lambda x: x - 1 if x > v else x  # noqa: E731
    return Graph(g.n - 1, [(f(a), f(b)) for a, b in g.edges if v not in (a, b)])


def add_vertex(g: Graph) -> Graph:
    """G + isolated vertex with id n."""
    return Graph(g.n + 1, g.edges)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise Missing(f"edge {u}-{v} not in graph")
    key = (min(u, v), max(u, v))
    return Graph(g.n, [e for e in g.edges if e != key])


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise AlreadyPresent("loops are not allowed in a simple graph")
    if g.has_edge(u, v):
        raise AlreadyPresent(f"edge {u}-{v} already present")
    return Graph(g.n, list(g.edges) + [(u, v)])


def subdivide(g: Graph, u: int, v: int) -> Graph:
    """Replace uv by u-w-v with the new vertex w = n."""
    if not g.has_edge(u, v):
        raise Missing(f"edge {u}-{v} not in graph")
    key = (min(u, v), max(u, v))
    w = g.n
    return Graph(g.n + 1, [e for e in g.edges if e != key] + [(u, w), (v, w)])


def edit(g: Graph, action: str, *args: int) -> Graph:
    ops = {
        "delete_vertex": delete_vertex,
        "add_vertex": add_vertex,
        "delete_edge": delete_edge,
        "add_edge": add_edge,
        "subdivide": subdivide,
    }
    if action not in ops:
        raise ValueError(f"unknown edit {action!r}")
    return ops[action](g, *args)


def contract(g: Graph, h: Iterable[int]) -> Graph:
    """G/H: merge the vertex set H into one new vertex (the last id).

    Remaining vertices keep their relative order.  Loops and parallel edges
    created by the merge are dropped.
    """
    hs = set(h)
    if not hs:
        raise EmptySet("contracted set must be nonempty")
    for v in hs:
        _check_vertex(g, v)
    keep = [v for v in range(g.n) if v not in hs]
    pos = {v: i for i, v in enumerate(keep)}
    w = len(keep)
    for v in hs:
        pos[v] = w
    edges = {tuple(sorted((pos[a], pos[b]))) for a, b in g.edges if pos[a] != pos[b]}
    return Graph(w + 1, edges)


def complement(g: Graph) -> Graph:
    return Graph(g.n, [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)])


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h is shifted by g.n."""
    return Graph(g.n + h.n, list(g.edges) + [(a + g.n, b + g.n) for a, b in h.edges])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    edges = list(union(g, h).edges)
    edges += [(a, g.n + b) for a in range(g.n) for b in range(h.n)]
    return Graph(g.n + h.n, edges)


def product(g: Graph, h: Graph, kind: str) -> Graph:
    """Graph product; vertex (i, j) has id i*|V(h)| + j."""
    if kind not in PRODUCT_KINDS:
        raise ValueError(f"unknown product {kind!r}")
    nh = h.n
    verts = [(i, j) for i in range(g.n) for j in range(nh)]
    edges = []
    for x, y in combinations(range(len(verts)), 2):
        (a, b), (c, d) = verts[x], verts[y]
        ga, hb = g.has_edge(a, c), h.has_edge(b, d)
        if kind == "cartesian":
            ok = (a == c and hb) or (b == d and ga)
        elif kind == "tensor":
            ok = ga and hb
        elif kind == "strong":
            ok = (a == c and hb) or (b == d and ga) or (ga and hb)
        else:
            ok = ga or (a == c and hb)
        if ok:
            edges.append((x, y))
    return Graph(len(verts), edges)


def line_graph(g: Graph) -> Graph:
    """L(G); vertex i is edge ``g.edges[i]``."""
    return Graph(
        g.m,
        [(i, j) for i, j in combinations(range(g.m), 2) if set(g.edges[i]) & set(g.edges[j])],
    )


def total_graph(g: Graph) -> Graph:
    """T(G): vertices of G first, then edge i as vertex n+i."""
    edges = list(g.edges)
    edges += [(g.n + i, g.n + j) for i, j in line_graph(g).edges]
    for i, (u, v) in enumerate(g.edges):
        edges += [(u, g.n + i), (v, g.n + i)]
    return Graph(g.n + g.m, edges)


def mycielski(g: Graph) -> Graph:
    """mu(G): v_i = i, u_i = n+i, w = 2n; u_i copies the neighbourhood of v_i."""
    n = g.n
    edges = list(g.edges)
    for i in range(n):
        for j in g.neighbors(i):
            edges.append((n + i, j))
        edges.append((n + i, 2 * n))
    return Graph(2 * n + 1, edges)
