"""Euler trails (Fleury), cycle decompositions, Hamiltonian search with the
classical sufficient conditions, closure, toughness and brute-force TSP."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence

from ._util import component_masks
from .errors import CapExceeded
from .graphcore import INF, AnyGraph, Graph, is_complete


# ------------------------------------------------------------------- Euler


@dataclass(frozen=True)
class EulerResult:
    kind: str  # circuit | open_trail | none
    sequence: tuple[int, ...] = ()
    edge_order: tuple[int, ...] = ()
    odd_vertices: tuple[int, ...] = ()
    reason: str = ""


def _edge_list(g: AnyGraph) -> list[tuple[int, int]]:
    return list(g.edges)


def _reach_mask(n: int, edges: list[tuple[int, int]], alive: list[bool], s: int) -> set[int]:
    adj: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(edges):
        if alive[i]:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
    seen = {s}
    stack = [s]
    while stack:
        x = stack.pop()
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _is_bridge_now(n: int, edges, alive, i: int) -> bool:
    u, v = edges[i]
    if u == v:
        return False
    alive[i] = False
    ok = v in _reach_mask(n, edges, alive, u)
    alive[i] = True
    return not ok


def _odd_and_nonisolated(g: AnyGraph) -> tuple[list[int], list[int]]:
    d = g.degrees()
    return [v for v in range(g.n) if d[v] % 2], [v for v in range(g.n) if d[v] > 0]


def euler(g: AnyGraph) -> EulerResult:
    """Fleury: start at the least odd vertex (else the least non-isolated one)
    and never cross a bridge of the remaining graph unless forced."""
    odd, active = _odd_and_nonisolated(g)
    if not active:
        return EulerResult("circuit", (0,) if g.n else (), (), ())
    edges = _edge_list(g)
    alive = [True] * len(edges)
    if not active or len(_reach_mask(g.n, edges, alive, active[0]) & set(active)) != len(active):
        return EulerResult("none", odd_vertices=tuple(odd), reason="edges lie in more than one component")
    if len(odd) not in (0, 2):
        return EulerResult("none", odd_vertices=tuple(odd), reason=f"{len(odd)} vertices of odd degree")
    start = odd[0] if odd else active[0]
    inc: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        inc[u].append(i)
        if u != v:
            inc[v].append(i)
    seq = [start]
    order: list[int] = []
    cur = start
    for _ in range(len(edges)):
        cand = sorted(
            (i for i in inc[cur] if alive[i]),
            key=lambda i: (edges[i][0] + edges[i][1] - cur, i),
        )
        pick = cand[0]
        if len(cand) > 1:
            for i in cand:
                if not _is_bridge_now(g.n, edges, alive, i):
                    pick = i
                    break
        alive[pick] = False
        u, v = edges[pick]
        cur = v if u == cur else u
        seq.append(cur)
        order.append(pick)
    kind = "circuit" if not odd else "open_trail"
    return EulerResult(kind, tuple(seq), tuple(order), tuple(odd))


def is_fleury_run(g: Graph, seq: Sequence[int]) -> bool:
    """Whether a vertex sequence is a possible output of Fleury's rule:
    it uses every edge once, and each step crosses a bridge of the remaining
    graph only when no other edge is available."""
    edges = _edge_list(g)
    if len(seq) != len(edges) + 1:
        return False
    odd, _ = _odd_and_nonisolated(g)
    if odd and seq[0] not in odd:
        return False
    alive = [True] * len(edges)
    for a, b in zip(seq, seq[1:]):
        if not g.has_edge(a, b):
            return False
        i = g.edge_index(a, b)
        if not alive[i]:
            return False
        others = [j for j in range(len(edges)) if alive[j] and a in edges[j] and j != i]
        if others and _is_bridge_now(g.n, edges, alive, i):
            return False
        alive[i] = False
    return True


def cycle_decomposition(g: Graph) -> list[tuple[int, ...]] | None:
    """Edge-disjoint simple cycles covering E(g) when every degree is even.

    Walk from a vertex along unused edges until a vertex repeats; the closed
    stretch is a simple cycle.  Removing it keeps all degrees even.
    """
    if any(d % 2 for d in g.degrees()):
        return None
    left = {v: set(g.neighbors(v)) for v in range(g.n)}
    out = []
    while True:
        s = next((v for v in range(g.n) if left[v]), None)
        if s is None:
            return out
        walk = [s]
        pos = {s: 0}
        prev = -1
        while True:
            cur = walk[-1]
            nxt = min(w for w in left[cur] if w != prev) if len(left[cur]) > 1 or prev < 0 else min(left[cur])
            if nxt in pos:
                cyc = walk[pos[nxt] :] + [nxt]
                for a, b in zip(cyc, cyc[1:]):
                    left[a].discard(b)
                    left[b].discard(a)
                out.append(tuple(cyc))
                break
            pos[nxt] = len(walk)
            walk.append(nxt)
            prev = cur


# --------------------------------------------------------------- Hamilton


@dataclass(frozen=True)
class HamiltonReport:
    cycle: tuple[int, ...] | None
    path: tuple[int, ...] | None
    flags: dict = field(compare=False)
    closure_complete: bool
    toughness: Fraction | float | None
    searched: bool = True


def hamilton_cycle(g: Graph) -> tuple[int, ...] | None:
    n = g.n
    if n < 3:
        return None
    full = (1 << n) - 1
    path = [0]

    def rec(mask: int) -> bool:
        v = path[-1]
        if len(path) == n:
            return g.has_edge(v, 0)
        # every unvisited vertex still needs two usable neighbours
        free = full & ~mask
        usable = free | 1 << v | 1
        rest = free
        while rest:
            w = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if (g.mask(w) & usable).bit_count() < 2:
                return False
        cand = g.mask(v) & ~mask
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            path.append(w)
            if rec(mask | 1 << w):
                return True
            path.pop()
        return False

    return tuple(path) + (0,) if rec(1) else None


def hamilton_path(g: Graph) -> tuple[int, ...] | None:
    n = g.n
    if n == 0:
        return None
    if n == 1:
        return (0,)

    def rec(path: list[int], mask: int) -> bool:
        if len(path) == n:
            return True
        cand = g.mask(path[-1]) & ~mask
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            path.append(w)
            if rec(path, mask | 1 << w):
                return True
            path.pop()
        return False

    for s in range(n):
        p = [s]
        if rec(p, 1 << s):
            return tuple(p)
    return None


def independence_number(g: Graph) -> int:
    memo: dict[int, int] = {}

    def a(mask: int) -> int:
        if mask == 0:
            return 0
        if mask in memo:
            return memo[mask]
        v = (mask & -mask).bit_length() - 1
        r = max(a(mask & ~(1 << v)), 1 + a(mask & ~(1 << v) & ~g.mask(v)))
        memo[mask] = r
        return r

    return a((1 << g.n) - 1)


def _has_induced(g: Graph, pattern: str) -> bool:
    """Induced K_{1,3} or K_{1,3}+e (a claw with one edge among its leaves)."""
    for c in range(g.n):
        for a, b, d in combinations(g.neighbors(c), 3):
            e = g.has_edge(a, b) + g.has_edge(a, d) + g.has_edge(b, d)
            if pattern == "claw" and e == 0:
                return True
            if pattern == "paw" and e == 1:
                return True
    return False


def hamilton_flags(g: Graph) -> dict[str, bool]:
    from .connectivity import connectivity_numbers

    n = g.n
    d = g.degrees()
    nonadj = [(u, v) for u, v in combinations(range(n), 2) if not g.has_edge(u, v)]
    big = n >= 3
    ds = sorted(d)
    chv = big and all(ds[i - 1] > i or ds[n - i - 1] >= n - i for i in range(1, (n + 1) // 2) if i < n / 2)
    kappa = connectivity_numbers(g, verify=False).kappa if n else 0
    alpha = independence_number(g)
    return {
        "dirac": big and min(d) >= n / 2,
        "ore": big and all(d[u] + d[v] >= n for u, v in nonadj),
        "chvatal_degrees": chv,
        "chvatal_erdos": big and alpha <= kappa,
        "goodman_hedetniemi": big
        and kappa >= 2
        and not _has_induced(g, "claw")
        and not _has_induced(g, "paw"),
        "ore_path": n >= 1 and all(d[u] + d[v] >= n - 1 for u, v in nonadj),
        "chvatal_erdos_path": n >= 1 and alpha <= kappa + 1,
    }


CYCLE_FLAGS = ("dirac", "ore", "chvatal_degrees", "chvatal_erdos", "goodman_hedetniemi")
PATH_FLAGS = ("ore_path", "chvatal_erdos_path")


def hamilton(g: Graph, cap: int = 12) -> HamiltonReport:
    flags = hamilton_flags(g)
    cl = closure(g)
    cl_complete = g.n >= 3 and is_complete(cl)
    tough = toughness(g) if g.n <= 16 else None
    if g.n > cap:
        return HamiltonReport(None, None, flags, cl_complete, tough, searched=False)
    cyc = hamilton_cycle(g)
    pth = hamilton_path(g)
    for k in CYCLE_FLAGS:
        if flags[k] and cyc is None:
            raise AssertionError(f"{k} holds but no Hamiltonian cycle exists")
    if cl_complete and cyc is None:
        raise AssertionError("closure is complete but no Hamiltonian cycle exists")
    for k in PATH_FLAGS:
        if flags[k] and pth is None:
            raise AssertionError(f"{k} holds but no Hamiltonian path exists")
    return HamiltonReport(cyc, pth, flags, cl_complete, tough, searched=True)


def closure(g: Graph, rng: random.Random | None = None) -> Graph:
    """Add uv for non-adjacent u, v with d(u) + d(v) >= n until none is left.

    Pairs are scanned in id order, or in a random order per round when ``rng``
    is given; the result does not depend on the order.
    """
    n = g.n
    adj = [set(g.neighbors(v)) for v in range(n)]
    while True:
        pairs = [(u, v) for u, v in combinations(range(n), 2) if v not in adj[u]]
        if rng is not None:
            rng.shuffle(pairs)
        added = False
        for u, v in pairs:
            if v not in adj[u] and len(adj[u]) + len(adj[v]) >= n:
                adj[u].add(v)
                adj[v].add(u)
                added = True
        if not added:
            break
    return Graph(n, [(u, v) for u in range(n) for v in adj[u] if u < v])


def toughness_certificate(g: Graph, cap: int = 16) -> tuple[Fraction | float, tuple[int, ...]]:
    """Exact toughness and a minimising set S (lexicographically least on ties).

    Complete graphs get +inf; disconnected graphs get 0 with S empty.
    """
    n = g.n
    if is_complete(g):
        return INF, ()
    full = (1 << n) - 1
    if len(component_masks(g.masks, full)) > 1:
        return Fraction(0), ()
    if n > cap:
        raise CapExceeded("toughness_n", cap, n)
    best: Fraction | None = None
    arg: tuple[int, ...] = ()
    for k in range(1, n - 1):
        for s in combinations(range(n), k):
            alive = full
            for v in s:
                alive &= ~(1 << v)
            c = len(component_masks(g.masks, alive))
            if c >= 2:
                val = Fraction(k, c)
                if best is None or val < best:
                    best, arg = val, s
    return best, arg


def toughness(g: Graph, cap: int = 16) -> Fraction | float:
    return toughness_certificate(g, cap)[0]


# -------------------------------------------------------------------- TSP


def tsp_bruteforce(weights: Sequence[Sequence[float]], cap: int = 11) -> tuple[tuple[int, ...], float]:
    """Optimal closed tour from vertex 0 over all (n-1)! orders.

    Ties go to the lexicographically least tour; the tour is returned without
    repeating vertex 0 at the end.
    """
    n = len(weights)
    if n > cap:
        raise CapExceeded("tsp_n", cap, n)
    if n == 0:
        return (), 0
    if n == 1:
        return (0,), 0
    best_len = math.inf
    best: tuple[int, ...] = ()
    for perm in permutations(range(1, n)):
        tour = (0,) + perm
        length = sum(weights[tour[i]][tour[(i + 1) % n]] for i in range(n))
        if length < best_len:
            best_len, best = length, tour
    return best, best_len
