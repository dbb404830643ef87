"""Cut vertices and bridges, kappa/lambda with certificates, Menger systems,
ear decompositions and 3-connected contraction.

Disjoint paths come from unit-capacity augmenting-path flow (vertex splitting
for the vertex version); the matching min cut is read from the residual
graph, so every answer ships both sides of the duality.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from ._util import component_masks
from .errors import AdjacentEndpoints, BadParams, CapExceeded, NotThreeConnected, TooSmall
from .graphcore import Graph, components, is_complete, is_connected
from .transform import contract

BIG = 1 << 30


# ------------------------------------------------------------ cut structure


@dataclass(frozen=True)
class CutStructure:
    cut_vertices: tuple[int, ...]
    bridges: tuple[tuple[int, int], ...]


def _count_components(g: Graph, alive: int, edges: Iterable[tuple[int, int]] | None = None) -> int:
    if edges is None:
        return len(component_masks(g.masks, alive))
    masks = [0] * g.n
    for u, v in edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return len(component_masks(masks, alive))


def cut_structure_recompute(g: Graph) -> CutStructure:
    """Remove each vertex / edge and count components."""
    full = (1 << g.n) - 1
    c = _count_components(g, full)
    cuts = tuple(v for v in range(g.n) if _count_components(g, full & ~(1 << v)) > c)
    bridges = tuple(
        e for e in g.edges if _count_components(g, full, [f for f in g.edges if f != e]) > c
    )
    return CutStructure(cuts, bridges)


def cut_structure_lowpoint(g: Graph) -> CutStructure:
    """Depth-first lowpoint computation (iterative)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cuts: set[int] = set()
    bridges: list[tuple[int, int]] = []
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        children = 0
        stack = [(root, iter(g.neighbors(root)))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    parent[w] = v
                    disc[w] = low[w] = t
                    t += 1
                    if v == root:
                        children += 1
                    stack.append((w, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent[v]:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            p = parent[v]
            if p >= 0:
                low[p] = min(low[p], low[v])
                if low[v] > disc[p]:
                    bridges.append((min(p, v), max(p, v)))
                if p != root and low[v] >= disc[p]:
                    cuts.add(p)
        if children >= 2:
            cuts.add(root)
    return CutStructure(tuple(sorted(cuts)), tuple(sorted(bridges)))


def cut_structure(g: Graph, cap: int = 64) -> CutStructure:
    if g.n <= cap:
        return cut_structure_recompute(g)
    return cut_structure_lowpoint(g)


# -------------------------------------------------------------------- flow


class _Flow:
    def __init__(self) -> None:
        self.cap: dict[int, dict[int, int]] = {}

    def arc(self, a: int, b: int, c: int) -> None:
        self.cap.setdefault(a, {})
        self.cap.setdefault(b, {})
        self.cap[a][b] = self.cap[a].get(b, 0) + c
        self.cap[b].setdefault(a, 0)

    def run(self, s: int, t: int, limit: int = BIG) -> int:
        self.orig = {a: dict(d) for a, d in self.cap.items()}
        total = 0
        while total < limit:
            prev = {s: s}
            q = deque([s])
            while q and t not in prev:
                a = q.popleft()
                for b in sorted(self.cap[a]):
                    if b not in prev and self.cap[a][b] > 0:
                        prev[b] = a
                        q.append(b)
            if t not in prev:
                break
            b = t
            while b != s:
                a = prev[b]
                self.cap[a][b] -= 1
                self.cap[b][a] += 1
                b = a
            total += 1
        return total

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        q = deque([s])
        while q:
            a = q.popleft()
            for b, c in self.cap[a].items():
                if c > 0 and b not in seen:
                    seen.add(b)
                    q.append(b)
        return seen

    def flow_on(self, a: int, b: int) -> int:
        return max(0, self.orig.get(a, {}).get(b, 0) - self.cap.get(a, {}).get(b, 0))


def _vin(v: int) -> int:
    return 2 * v


def _vout(v: int) -> int:
    return 2 * v + 1


def _vertex_network(g: Graph, big: Sequence[int], source: int) -> _Flow:
    f = _Flow()
    for v in range(g.n):
        f.arc(_vin(v), _vout(v), BIG if v in big else 1)
    for u, v in g.edges:
        # nothing flows back into the source, so flow has no cycles through it
        if v != source:
            f.arc(_vout(u), _vin(v), BIG)
        if u != source:
            f.arc(_vout(v), _vin(u), BIG)
    return f


def _trace_vertex_paths(g: Graph, f: _Flow, start: int, stop) -> list[list[int]]:
    """Decompose flow leaving ``start`` into vertex paths (split network)."""
    used: dict[tuple[int, int], int] = {}
    paths = []
    for w in g.neighbors(start):
        a, b = _vout(start), _vin(w)
        if f.flow_on(a, b) - used.get((a, b), 0) <= 0:
            continue
        used[(a, b)] = used.get((a, b), 0) + 1
        path = [start, w]
        cur = w
        while not stop(cur):
            nxt = None
            for x in g.neighbors(cur):
                a, b = _vout(cur), _vin(x)
                if f.flow_on(a, b) - used.get((a, b), 0) > 0:
                    nxt = x
                    used[(a, b)] = used.get((a, b), 0) + 1
                    break
            if nxt is None:
                raise AssertionError("flow decomposition broke")
            path.append(nxt)
            cur = nxt
        paths.append(path)
    return paths


def local_vertex_connectivity(g: Graph, s: int, t: int) -> tuple[int, tuple[int, ...], _Flow]:
    f = _vertex_network(g, (s, t), s)
    k = f.run(_vout(s), _vin(t))
    r = f.reachable(_vout(s))
    cut = tuple(v for v in range(g.n) if _vin(v) in r and _vout(v) not in r)
    return k, cut, f


def local_edge_connectivity(g: Graph, s: int, t: int) -> tuple[int, tuple[tuple[int, int], ...], _Flow]:
    f = _Flow()
    for v in range(g.n):
        f.cap.setdefault(v, {})
    for u, v in g.edges:
        f.arc(u, v, 1)
        f.arc(v, u, 1)
    k = f.run(s, t)
    r = f.reachable(s)
    cut = tuple(e for e in g.edges if (e[0] in r) != (e[1] in r))
    return k, cut, f


# ------------------------------------------------------------ connectivity


@dataclass(frozen=True)
class ConnectivityNumbers:
    kappa: int
    lambda_: int
    delta: int
    vertex_cut: tuple[int, ...]
    edge_cut: tuple[tuple[int, int], ...]
    verified: bool = False


def kappa_bruteforce(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Smallest S with G - S disconnected or trivial, by subset enumeration."""
    n = g.n
    full = (1 << n) - 1
    for k in range(n):
        for s in combinations(range(n), k):
            alive = full
            for v in s:
                alive &= ~(1 << v)
            if n - k <= 1 or len(component_masks(g.masks, alive)) > 1:
                return k, s
    return max(n - 1, 0), tuple(range(n - 1))


def lambda_bruteforce(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Smallest edge set whose removal disconnects g."""
    if g.n <= 1:
        return 0, ()
    full = (1 << g.n) - 1
    for k in range(g.m + 1):
        for fs in combinations(g.edges, k):
            drop = set(fs)
            if _count_components(g, full, [e for e in g.edges if e not in drop]) > 1:
                return k, fs
    raise AssertionError("removing every edge disconnects a graph with n >= 2")


def connectivity_numbers(g: Graph, verify: bool = True, verify_budget: int = 20_000) -> ConnectivityNumbers:
    """kappa and lambda from Menger flows, with minimum cut witnesses.

    With ``verify`` the values are compared against subset enumeration when
    the number of subsets to try stays within ``verify_budget``.
    """
    n = g.n
    delta = min(g.degrees()) if n else 0
    if n <= 1:
        return ConnectivityNumbers(0, 0, delta, (), (), True)
    if not is_connected(g):
        return ConnectivityNumbers(0, 0, delta, (), (), True)
    if is_complete(g):
        kappa, vcut = n - 1, tuple(range(n - 1))
    else:
        kappa, vcut = BIG, ()
        for s, t in combinations(range(n), 2):
            if g.has_edge(s, t):
                continue
            k, cut, _ = local_vertex_connectivity(g, s, t)
            if k < kappa:
                kappa, vcut = k, cut
    lam, ecut = BIG, ()
    for t in range(1, n):
        k, cut, _ = local_edge_connectivity(g, 0, t)
        if k < lam:
            lam, ecut = k, cut
    verified = False
    if verify:
        vcount = sum(math.comb(n, k) for k in range(kappa + 1))
        ecount = sum(math.comb(g.m, k) for k in range(lam + 1))
        if vcount + ecount <= verify_budget:
            bk, _ = kappa_bruteforce(g)
            bl, _ = lambda_bruteforce(g)
            if (bk, bl) != (kappa, lam):
                raise AssertionError(f"flow ({kappa},{lam}) disagrees with enumeration ({bk},{bl})")
            verified = True
    return ConnectivityNumbers(kappa, lam, delta, vcut, ecut, verified)


def chartrand_harary(a: int, b: int, c: int) -> Graph:
    """Two copies of K_{c+1} (U first, then W) joined by u_i w_i for i <= a
    and u_a w_j for a < j <= b; this gives kappa = a, lambda = b, delta = c."""
    if not (0 < a <= b <= c):
        raise BadParams("need 0 < a <= b <= c")
    k = c + 1
    edges = [(i, j) for i, j in combinations(range(k), 2)]
    edges += [(k + i, k + j) for i, j in combinations(range(k), 2)]
    edges += [(i - 1, k + i - 1) for i in range(1, a + 1)]
    edges += [(a - 1, k + j - 1) for j in range(a + 1, b + 1)]
    return Graph(2 * k, edges)


# ------------------------------------------------------------------ Menger


@dataclass(frozen=True)
class MengerResult:
    mode: str
    source: int
    target: int | tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]
    cut: tuple


def menger(g: Graph, u: int, v: int, mode: str = "vertex") -> MengerResult:
    if u == v:
        raise BadParams("endpoints must differ")
    if mode == "vertex":
        if g.has_edge(u, v):
            raise AdjacentEndpoints(f"{u} and {v} are adjacent")
        k, cut, f = local_vertex_connectivity(g, u, v)
        paths = _trace_vertex_paths(g, f, u, lambda x: x == v)
    elif mode == "edge":
        k, cut, f = local_edge_connectivity(g, u, v)
        paths = _trace_edge_paths(g, f, u, v)
    else:
        raise BadParams(f"unknown mode {mode!r}")
    res = MengerResult(mode, u, v, tuple(tuple(p) for p in paths), cut)
    if not verify_menger(g, res) or len(paths) != k:
        raise AssertionError("Menger certificate failed verification")
    return res


def _trace_edge_paths(g: Graph, f: _Flow, s: int, t: int) -> list[list[int]]:
    net: dict[tuple[int, int], int] = {}
    for a, b in g.edges:
        x = f.flow_on(a, b) - f.flow_on(b, a)
        if x > 0:
            net[(a, b)] = x
        elif x < 0:
            net[(b, a)] = -x
    paths = []
    while True:
        outs = [e for e in sorted(net) if e[0] == s and net[e] > 0]
        if not outs:
            break
        path = [s]
        cur = s
        while cur != t:
            e = next(e for e in sorted(net) if e[0] == cur and net[e] > 0)
            net[e] -= 1
            cur = e[1]
            path.append(cur)
        paths.append(_simplify(path))
    return paths


def _simplify(path: list[int]) -> list[int]:
    out: list[int] = []
    pos: dict[int, int] = {}
    for v in path:
        if v in pos:
            cut = pos[v] + 1
            for w in out[cut:]:
                del pos[w]
            del out[cut:]
        else:
            pos[v] = len(out)
            out.append(v)
    return out


def menger_fan(g: Graph, x: int, targets: Iterable[int]) -> MengerResult:
    """Paths from x to distinct vertices of U, sharing only x, and a
    same-size set of vertices (excluding x) separating x from U."""
    us = tuple(sorted(set(targets)))
    if x in us or not us:
        raise BadParams("targets must be nonempty and exclude x")
    f = _vertex_network(g, (x,), x)
    sink = 2 * g.n
    for w in us:
        f.arc(_vout(w), sink, BIG)
    k = f.run(_vout(x), sink)
    r = f.reachable(_vout(x))
    cut = tuple(v for v in range(g.n) if v != x and _vin(v) in r and _vout(v) not in r)
    uset = set(us)
    paths = _trace_vertex_paths(g, f, x, lambda y: y in uset)
    res = MengerResult("fan", x, us, tuple(tuple(p) for p in paths), cut)
    if len(paths) != k or not verify_menger(g, res):
        raise AssertionError("fan certificate failed verification")
    return res


def verify_menger(g: Graph, r: MengerResult) -> bool:
    """Independent check of both certificate sides and their equality."""
    for p in r.paths:
        if len(set(p)) != len(p) or any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
            return False
        if p[0] != r.source:
            return False
    if len(r.paths) != len(r.cut):
        return False
    full = (1 << g.n) - 1
    if r.mode == "vertex":
        inner = [set(p[1:-1]) for p in r.paths]
        if any(inner[i] & inner[j] for i, j in combinations(range(len(inner)), 2)):
            return False
        if any(p[-1] != r.target for p in r.paths):
            return False
        alive = full & ~sum(1 << v for v in r.cut)
        comps = component_masks(g.masks, alive)
        return not any(c >> r.source & 1 and c >> r.target & 1 for c in comps) and r.source not in r.cut
    if r.mode == "edge":
        used = [tuple(sorted(e)) for p in r.paths for e in zip(p, p[1:])]
        if len(used) != len(set(used)) or any(p[-1] != r.target for p in r.paths):
            return False
        return not _connected_pair(g, r.source, r.target, set(r.cut))
    # fan
    uset = set(r.target)
    tails = [set(p[1:]) for p in r.paths]
    if any(tails[i] & tails[j] for i, j in combinations(range(len(tails)), 2)):
        return False
    if any(p[-1] not in uset or set(p[1:-1]) & uset for p in r.paths):
        return False
    alive = full & ~sum(1 << v for v in r.cut)
    for c in component_masks(g.masks, alive):
        if c >> r.source & 1 and any(c >> u & 1 for u in uset):
            return False
    return True


def _connected_pair(g: Graph, s: int, t: int, drop: set) -> bool:
    seen = {s}
    q = deque([s])
    while q:
        a = q.popleft()
        for b in g.neighbors(a):
            if (min(a, b), max(a, b)) in drop or b in seen:
                continue
            seen.add(b)
            q.append(b)
    return t in seen


# ---------------------------------------------------------------------- ears


@dataclass(frozen=True)
class EarDecomposition:
    cycle: tuple[int, ...]
    ears: tuple[tuple[int, ...], ...]
    closed_ears: tuple[bool, ...] = field(default=())

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class EarObstruction:
    kind: str
    witness: tuple = ()

    def __bool__(self) -> bool:
        return False


def _shortest_path(g: Graph, s: int, t: int, skip_edge: tuple[int, int]) -> list[int] | None:
    prev = {s: -1}
    q = deque([s])
    while q:
        a = q.popleft()
        if a == t:
            break
        for b in g.neighbors(a):
            if (min(a, b), max(a, b)) == skip_edge or b in prev:
                continue
            prev[b] = a
            q.append(b)
    if t not in prev:
        return None
    out = [t]
    while out[-1] != s:
        out.append(prev[out[-1]])
    return out[::-1]


def ear_decomposition(g: Graph, closed: bool = False) -> EarDecomposition | EarObstruction:
    """Grow from a cycle; each step routes an uncovered edge at the built part
    back to it through new vertices.  Open ears avoid their start vertex."""
    if closed:
        if g.m == 0:
            return EarObstruction("too_small")
        if not is_connected(g):
            return EarObstruction("disconnected", tuple(components(g)))
        br = cut_structure(g).bridges
        if br:
            return EarObstruction("bridge", br[0])
    else:
        if g.n < 3:
            return EarObstruction("too_small")
        if not is_connected(g):
            return EarObstruction("disconnected", tuple(components(g)))
        cv = cut_structure(g).cut_vertices
        if cv:
            return EarObstruction("cut_vertex", (cv[0],))
    e0 = g.edges[0]
    back = _shortest_path(g, e0[1], e0[0], e0)
    cycle = [e0[0]] + back
    built_v = set(cycle)
    built_e = {tuple(sorted(e)) for e in zip(cycle, cycle[1:])}
    ears: list[tuple[int, ...]] = []
    flags: list[bool] = []
    while len(built_e) < g.m:
        pick = next(
            (u, v)
            for u, v in g.edges
            if (u, v) not in built_e and (u in built_v or v in built_v)
        )
        x, y = pick if pick[0] in built_v else (pick[1], pick[0])
        if y in built_v:
            ear = [x, y]
        else:
            # BFS from y through unbuilt vertices until the built part is hit
            prev = {y: -1}
            q = deque([y])
            hit = None
            while q and hit is None:
                a = q.popleft()
                for b in g.neighbors(a):
                    if a == y and b == x:
                        continue
                    if b in built_v:
                        if closed or b != x:
                            prev.setdefault(b, a)
                            hit = b
                            break
                        continue
                    if b not in prev:
                        prev[b] = a
                        q.append(b)
            if hit is None:
                raise AssertionError("connectivity guarantees a return path")
            back = [hit]
            cur = prev[hit]
            while cur != -1:
                back.append(cur)
                cur = prev[cur]
            ear = [x] + back[::-1]
        ears.append(tuple(ear))
        flags.append(ear[0] == ear[-1])
        built_v.update(ear)
        built_e.update(tuple(sorted(e)) for e in zip(ear, ear[1:]))
    return EarDecomposition(tuple(cycle), tuple(ears), tuple(flags))


def verify_ears(g: Graph, dec: EarDecomposition, closed: bool) -> bool:
    cyc = dec.cycle
    if cyc[0] != cyc[-1] or len(set(cyc[:-1])) != len(cyc) - 1 or len(cyc) < 4:
        return False
    built_v = set(cyc)
    seen_e: list[tuple[int, int]] = [tuple(sorted(e)) for e in zip(cyc, cyc[1:])]
    for ear in dec.ears:
        if ear[0] not in built_v or ear[-1] not in built_v:
            return False
        inner = ear[1:-1]
        if set(inner) & built_v or len(set(inner)) != len(inner):
            return False
        if ear[0] == ear[-1] and (not closed or not inner):
            return False
        seen_e.extend(tuple(sorted(e)) for e in zip(ear, ear[1:]))
        built_v.update(ear)
    return sorted(seen_e) == sorted(g.edges) and all(g.has_edge(*e) for e in seen_e)


# ------------------------------------------------------------ 2-connectivity


@dataclass(frozen=True)
class TwoConnectedReport:
    no_cut_vertex: bool
    two_disjoint_paths: bool
    pairs_on_cycle: bool
    edges_on_cycle: bool

    @property
    def all_equal(self) -> bool:
        return len({self.no_cut_vertex, self.two_disjoint_paths, self.pairs_on_cycle, self.edges_on_cycle}) == 1


def simple_cycles(g: Graph, cap: int = 200_000) -> list[tuple[int, ...]]:
    """All simple cycles as vertex tuples starting at their least vertex."""
    out: list[tuple[int, ...]] = []
    for s in range(g.n):
        path = [s]
        on = {s}

        def rec(v: int) -> None:
            for w in g.neighbors(v):
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                    if len(out) > cap:
                        raise CapExceeded("cycles", cap, len(out))
                elif w > s and w not in on:
                    path.append(w)
                    on.add(w)
                    rec(w)
                    on.discard(w)
                    path.pop()

        rec(s)
    return out


def two_connected_checks(g: Graph, cap: int = 200_000) -> TwoConnectedReport:
    if g.n < 3:
        raise TooSmall("need n >= 3")
    n = g.n
    cond1 = is_connected(g) and not cut_structure(g).cut_vertices
    cond2 = True
    for u, v in combinations(range(n), 2):
        if g.has_edge(u, v):
            # the edge itself is one path; count the others in G - uv
            h = Graph(n, [e for e in g.edges if e != (u, v)])
            k = 1 + local_vertex_connectivity(h, u, v)[0]
        else:
            k = local_vertex_connectivity(g, u, v)[0]
        if k < 2:
            cond2 = False
            break
    cycles = simple_cycles(g, cap)
    vmasks = []
    emasks = []
    for c in cycles:
        vm = 0
        em = 0
        for a in c:
            vm |= 1 << a
        for a, b in zip(c, c[1:] + c[:1]):
            em |= 1 << g.edge_index(a, b)
        vmasks.append(vm)
        emasks.append(em)
    cond3 = all(
        any(vm >> u & 1 and vm >> v & 1 for vm in vmasks) for u, v in combinations(range(n), 2)
    )
    cond4 = min(g.degrees()) >= 1 and g.m >= 2 and all(
        any(em >> i & 1 and em >> j & 1 for em in emasks) for i, j in combinations(range(g.m), 2)
    )
    return TwoConnectedReport(cond1, cond2, cond3, cond4)


def contractible_edge(g: Graph) -> tuple[int, int]:
    """An edge whose contraction keeps the graph 3-connected."""
    if g.n < 5:
        raise TooSmall("need n >= 5")
    if connectivity_numbers(g, verify=False).kappa < 3:
        raise NotThreeConnected("graph is not 3-connected")
    for e in g.edges:
        if connectivity_numbers(contract(g, e), verify=False).kappa >= 3:
            return e
    raise AssertionError("a 3-connected graph on >= 5 vertices has a contractible edge")
