"""Tree characterizations, Pruefer codes, spanning trees, counting and centres.

Pruefer codes use labels ``1..n``; label ``i`` is internal vertex ``i - 1``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from ._util import bareiss_det
from .errors import BadCode, CapExceeded, Disconnected, NotATree
from .graphcore import Graph, components, is_connected, matrices


@dataclass(frozen=True)
class TreeReport:
    connected_acyclic: bool
    unique_paths: bool
    connected_n_minus_1: bool
    acyclic_n_minus_1: bool
    acyclic_one_new_cycle: bool

    @property
    def all_equal(self) -> bool:
        return len(set(self.as_tuple())) == 1

    def as_tuple(self) -> tuple[bool, ...]:
        return (
            self.connected_acyclic,
            self.unique_paths,
            self.connected_n_minus_1,
            self.acyclic_n_minus_1,
            self.acyclic_one_new_cycle,
        )


def count_paths(g: Graph, s: int, t: int, limit: int = 2) -> int:
    """Number of simple s-t paths, stopping once ``limit`` are found."""
    if s == t:
        return 1
    count = 0
    seen = [False] * g.n
    seen[s] = True

    def rec(v: int) -> None:
        nonlocal count
        for w in g.neighbors(v):
            if count >= limit:
                return
            if w == t:
                count += 1
            elif not seen[w]:
                seen[w] = True
                rec(w)
                seen[w] = False

    rec(s)
    return count


def count_cycles(g: Graph, limit: int | None = None) -> int:
    """Number of simple cycles (each counted once)."""
    total = 0
    for s in range(g.n):
        # cycles whose least vertex is s; each found twice (two directions)
        seen = [False] * g.n
        seen[s] = True
        found = 0

        def rec(v: int, length: int) -> None:
            nonlocal found
            for w in g.neighbors(v):
                if w < s:
                    continue
                if w == s and length >= 2:
                    found += 1
                elif not seen[w] and w != s:
                    seen[w] = True
                    rec(w, length + 1)
                    seen[w] = False

        rec(s, 0)
        total += found // 2
        if limit is not None and total >= limit:
            return total
    return total


def tree_check(g: Graph, cap: int = 10) -> TreeReport:
    """Evaluate five equivalent tree conditions independently."""
    if g.n > cap:
        raise CapExceeded("tree_check_n", cap, g.n)
    n, m = g.n, g.m
    conn = is_connected(g) and n >= 1
    acyclic = count_cycles(g, limit=1) == 0
    unique = n >= 1 and all(count_paths(g, s, t) == 1 for s in range(n) for t in range(s + 1, n))
    one_new = acyclic and n >= 1
    if one_new:
        for u in range(n):
            for v in range(u + 1, n):
                if not g.has_edge(u, v):
                    h = Graph(n, list(g.edges) + [(u, v)])
                    if count_cycles(h, limit=2) != 1:
                        one_new = False
                        break
            if not one_new:
                break
    return TreeReport(
        connected_acyclic=conn and acyclic,
        unique_paths=unique,
        connected_n_minus_1=conn and m == n - 1,
        acyclic_n_minus_1=acyclic and m == n - 1,
        acyclic_one_new_cycle=one_new,
    )


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def prufer_encode(t: Graph) -> tuple[int, ...]:
    """Repeatedly strip the least leaf and record its neighbour (1-based)."""
    if t.n < 2 or not is_tree(t):
        raise NotATree("input is not a tree on at least 2 vertices")
    deg = list(t.degrees())
    adj = [set(t.neighbors(v)) for v in range(t.n)]
    leaves = [v for v in range(t.n) if deg[v] == 1]
    heapq.heapify(leaves)
    code = []
    for _ in range(t.n - 2):
        leaf = heapq.heappop(leaves)
        (nb,) = adj[leaf]
        code.append(nb + 1)
        adj[nb].discard(leaf)
        deg[nb] -= 1
        if deg[nb] == 1:
            heapq.heappush(leaves, nb)
    return tuple(code)


def prufer_decode(code: Sequence[int], n: int | None = None) -> Graph:
    if n is None:
        n = len(code) + 2
    if n < 2 or len(code) != n - 2 or any(not 1 <= c <= n for c in code):
        raise BadCode(f"code must have n-2 = {n - 2} entries in 1..{n}")
    deg = [1] * n
    for c in code:
        deg[c - 1] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for c in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, c - 1))
        deg[c - 1] -= 1
        if deg[c - 1] == 1:
            heapq.heappush(leaves, c - 1)
    a, b = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((a, b))
    return Graph(n, edges)


def laplacian(g: Graph) -> list[list[int]]:
    a, _ = matrices(g)
    return [[(g.degree(i) if i == j else 0) - a[i][j] for j in range(g.n)] for i in range(g.n)]


def cofactor(lap: list[list[int]], i: int) -> int:
    """Determinant of the Laplacian with row and column i removed."""
    k = len(lap)
    return bareiss_det([[lap[r][c] for c in range(k) if c != i] for r in range(k) if r != i])


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees (0 when disconnected)."""
    if g.n == 0:
        return 0
    if not is_connected(g):
        return 0
    return cofactor(laplacian(g), 0)


def spanning_tree(g: Graph) -> Graph:
    """Delete cycle edges (highest id first) until none remains."""
    if not is_connected(g):
        raise Disconnected("graph is disconnected")
    edges = list(g.edges)
    changed = True
    while changed and len(edges) > g.n - 1:
        changed = False
        for i in range(len(edges) - 1, -1, -1):
            rest = edges[:i] + edges[i + 1 :]
            if len(components(Graph(g.n, rest))) == 1:
                edges = rest
                changed = True
                break
    return Graph(g.n, edges)


def tree_center(t: Graph) -> tuple[int, ...]:
    """Strip all leaves round by round until one or two vertices remain."""
    if not is_tree(t):
        raise NotATree("input is not a tree")
    alive = set(range(t.n))
    deg = list(t.degrees())
    while len(alive) > 2:
        leaves = [v for v in alive if deg[v] <= 1]
        for v in leaves:
            alive.discard(v)
            for w in t.neighbors(v):
                if w in alive:
                    deg[w] -= 1
    return tuple(sorted(alive))


def embed_tree(t: Graph, g: Graph, cap: int = 12) -> tuple[int, ...] | None:
    """Injective map of tree t into g sending edges to edges.

    Greedy leaf extension in BFS order always succeeds when delta(g) >= |E(t)|;
    otherwise (or if greedy fails) an exhaustive search runs for g.n <= cap.
    """
    if not is_tree(t):
        raise NotATree("first argument must be a tree")
    order = [0]
    parent = {0: -1}
    for v in order:
        for w in t.neighbors(v):
            if w not in parent:
                parent[w] = v
                order.append(w)
    if t.n > g.n:
        return None
    f = [-1] * t.n
    used = [False] * g.n
    if g.n and min(g.degrees()) >= t.m:
        f[0] = 0
        used[0] = True
        ok = True
        for v in order[1:]:
            w = next((x for x in g.neighbors(f[parent[v]]) if not used[x]), None)
            if w is None:
                ok = False
                break
            f[v] = w
            used[w] = True
        if ok:
            return tuple(f)
        f = [-1] * t.n
        used = [False] * g.n
    if g.n > cap:
        raise CapExceeded("embed_n", cap, g.n)

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        cands = range(g.n) if i == 0 else g.neighbors(f[parent[v]])
        for w in cands:
            if not used[w]:
                f[v] = w
                used[w] = True
                if rec(i + 1):
                    return True
                used[w] = False
        f[v] = -1
        return False

    return tuple(f) if rec(0) else None
