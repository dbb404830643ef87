"""Isomorphism, homomorphism and automorphism search by backtracking.

Vertices of the source are assigned in id order and candidate images are
tried in ascending order, so the first map found is the lexicographically
least one.  Vertex invariants prune candidates but never reorder them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import CapExceeded
from .graphcore import Graph

DEFAULT_CAP = 10


@dataclass(frozen=True)
class VertexMap:
    mapping: tuple[int, ...]
    kind: str

    def __call__(self, v: int) -> int:
        return self.mapping[v]


def _invariant(g: Graph, v: int) -> tuple:
    nb = g.neighbors(v)
    tri = sum(1 for i, a in enumerate(nb) for b in nb[i + 1 :] if g.has_edge(a, b))
    return (g.degree(v), tuple(sorted(g.degree(w) for w in nb)), tri)


def _cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise CapExceeded("morphism_n", cap, g.n)


def _iso_maps(g: Graph, h: Graph) -> Iterator[tuple[int, ...]]:
    n = g.n
    if n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return
    inv_g = [_invariant(g, v) for v in range(n)]
    inv_h = [_invariant(h, v) for v in range(n)]
    if sorted(inv_g) != sorted(inv_h):
        return
    cands = [[w for w in range(n) if inv_h[w] == inv_g[v]] for v in range(n)]
    f = [-1] * n
    used = [False] * n

    def rec(v: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(f)
            return
        for w in cands[v]:
            if used[w]:
                continue
            ok = True
            for u in range(v):
                if g.has_edge(u, v) != h.has_edge(f[u], w):
                    ok = False
                    break
            if ok:
                f[v] = w
                used[w] = True
                yield from rec(v + 1)
                used[w] = False
        f[v] = -1

    yield from rec(0)


def isomorphic(g: Graph, h: Graph, cap: int = DEFAULT_CAP) -> VertexMap | None:
    _cap(g, cap)
    for f in _iso_maps(g, h):
        return VertexMap(f, "isomorphism")
    return None


def homomorphism(g: Graph, h: Graph, cap: int = DEFAULT_CAP) -> VertexMap | None:
    """Least map with every edge of g sent to an edge of h."""
    _cap(g, cap)
    n = g.n
    if n and h.n == 0:
        return None
    f = [-1] * n

    def rec(v: int) -> bool:
        if v == n:
            return True
        for w in range(h.n):
            if all(h.has_edge(f[u], w) for u in g.neighbors(v) if u < v):
                f[v] = w
                if rec(v + 1):
                    return True
        f[v] = -1
        return False

    if rec(0):
        return VertexMap(tuple(f), "homomorphism")
    return None


def automorphisms(g: Graph, cap: int = DEFAULT_CAP) -> list[VertexMap]:
    """All automorphisms in lexicographic order (identity first)."""
    _cap(g, cap)
    return [VertexMap(f, "automorphism") for f in _iso_maps(g, g)]


def is_isomorphism(g: Graph, h: Graph, f: tuple[int, ...]) -> bool:
    if g.n != h.n or sorted(f) != list(range(g.n)):
        return False
    return g.m == h.m and all(h.has_edge(f[u], f[v]) for u, v in g.edges)


def is_homomorphism(g: Graph, h: Graph, f: tuple[int, ...]) -> bool:
    return len(f) == g.n and all(h.has_edge(f[u], f[v]) for u, v in g.edges)


@dataclass(frozen=True)
class Transitivity:
    vertex_transitive: bool
    edge_transitive: bool
    asymmetric: bool
    group_order: int
    vertex_orbits: tuple[tuple[int, ...], ...]


def transitivity(g: Graph, cap: int = DEFAULT_CAP) -> Transitivity:
    auts = [a.mapping for a in automorphisms(g, cap)]
    vorb: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for v in range(g.n):
        if v not in seen:
            orb = tuple(sorted({f[v] for f in auts}))
            seen.update(orb)
            vorb.append(orb)
    first = g.edges[0] if g.edges else None
    if first is None:
        edge_tr = True
    else:
        eorb = {tuple(sorted((f[first[0]], f[first[1]]))) for f in auts}
        edge_tr = len(eorb) == g.m
    return Transitivity(
        vertex_transitive=len(vorb) <= 1,
        edge_transitive=edge_tr,
        asymmetric=len(auts) == 1,
        group_order=len(auts),
        vertex_orbits=tuple(vorb),
    )
