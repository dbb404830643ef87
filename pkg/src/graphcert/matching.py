"""Independence and cover numbers, matchings with certificates, systems of
distinct representatives, Dilworth, Tutte-Berge, factors and arboricity."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from ._util import bits, component_masks, popcount, to_mask
from .errors import BadParams, CapExceeded, InfeasibleDegrees, IsolatedVertex, WrongClass
from .graphcore import Graph, bipartition, components, induced_subgraph, is_complete, is_forest

DEFAULT_CAP = 18


def _cap(name: str, cap: int, actual: int) -> None:
    if actual > cap:
        raise CapExceeded(name, cap, actual)


# ------------------------------------------------------ optimization numbers


def max_independent_set(g: Graph, alive: int | None = None) -> int:
    """Maximum independent set as a bitmask (branching on a max-degree vertex)."""
    masks = g.masks
    if alive is None:
        alive = (1 << g.n) - 1

    def rec(a: int) -> int:
        if not a:
            return 0
        best_v, best_d = -1, -1
        for v in bits(a):
            d = popcount(masks[v] & a)
            if d <= 1:
                # a vertex of degree <= 1 can always be taken
                return 1 << v | rec(a & ~(1 << v) & ~masks[v])
            if d > best_d:
                best_v, best_d = v, d
        v = best_v
        with_v = 1 << v | rec(a & ~(1 << v) & ~masks[v])
        without = rec(a & ~(1 << v))
        return with_v if popcount(with_v) >= popcount(without) else without

    return rec(alive)


def min_vertex_cover(g: Graph) -> int:
    """Minimum vertex cover as a bitmask: branch on the two ends of an uncovered edge."""
    best = [(1 << g.n) - 1]

    def rec(chosen: int, edges: tuple) -> None:
        if popcount(chosen) >= popcount(best[0]):
            return
        for u, v in edges:
            if not (chosen >> u & 1 or chosen >> v & 1):
                rec(chosen | 1 << u, edges)
                rec(chosen | 1 << v, edges)
                return
        best[0] = chosen

    rec(0, g.edges)
    return best[0]


def _matching_dp(g: Graph):
    masks = g.masks

    @lru_cache(maxsize=None)
    def nu(mask: int) -> int:
        if not mask:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        best = nu(rest)
        for w in bits(masks[v] & rest):
            best = max(best, 1 + nu(rest & ~(1 << w)))
        return best

    return nu


def max_matching_exact(g: Graph, cap: int = DEFAULT_CAP) -> tuple[tuple[int, int], ...]:
    """Maximum matching by memoized search; the least vertex takes its least usable partner."""
    _cap("matching_n", cap, g.n)
    nu = _matching_dp(g)
    out = []
    mask = (1 << g.n) - 1
    while mask:
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        target = nu(mask)
        mask = rest
        for w in bits(g.mask(v) & rest):
            if 1 + nu(rest & ~(1 << w)) == target:
                out.append((v, w))
                mask = rest & ~(1 << w)
                break
    return tuple(out)


def min_edge_cover(g: Graph, cap: int = DEFAULT_CAP) -> tuple[tuple[int, int], ...]:
    """Minimum edge cover by memoized search: the least uncovered vertex picks an edge."""
    _cap("edge_cover_n", cap, g.n)
    if g.n and min(g.degrees()) == 0:
        raise IsolatedVertex("a vertex without edges cannot be covered")
    masks = g.masks

    @lru_cache(maxsize=None)
    def cover(mask: int) -> tuple[int, tuple]:
        if not mask:
            return 0, ()
        v = (mask & -mask).bit_length() - 1
        best = None
        for w in bits(masks[v]):
            k, es = cover(mask & ~(1 << v) & ~(1 << w))
            if best is None or k + 1 < best[0]:
                best = (k + 1, ((min(v, w), max(v, w)),) + es)
        return best

    return tuple(sorted(cover((1 << g.n) - 1)[1]))


@dataclass(frozen=True)
class OptimizationNumbers:
    n: int
    alpha: int
    beta: int
    alpha_prime: int
    beta_prime: int | None
    omega: int
    caro_wei: Fraction
    independent_set: tuple[int, ...]
    vertex_cover: tuple[int, ...]
    matching: tuple[tuple[int, int], ...]
    edge_cover: tuple[tuple[int, int], ...] | None
    clique: tuple[int, ...]

    @property
    def deficiency(self) -> int:
        return self.n - 2 * self.alpha_prime


def complement_graph(g: Graph) -> Graph:
    return Graph(g.n, [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)])


def caro_wei(g: Graph) -> Fraction:
    return sum((Fraction(1, 1 + d) for d in g.degrees()), Fraction(0))


def optimization_numbers(g: Graph, cap: int = DEFAULT_CAP) -> OptimizationNumbers:
    """alpha, beta, alpha', beta', omega, each by its own search.

    Both Gallai identities and the Caro-Wei bound are asserted.
    """
    _cap("optimization_n", cap, g.n)
    ind = tuple(bits(max_independent_set(g)))
    cov = tuple(bits(min_vertex_cover(g)))
    mat = max_matching_exact(g, cap)
    ec = None if g.n and min(g.degrees()) == 0 else min_edge_cover(g, cap)
    clq = tuple(bits(max_independent_set(complement_graph(g))))
    cw = caro_wei(g)
    if len(ind) + len(cov) != g.n:
        raise AssertionError("alpha + beta != n")
    if ec is not None and len(mat) + len(ec) != g.n:
        raise AssertionError("alpha' + beta' != n")
    if len(ind) < math.ceil(cw):
        raise AssertionError("Caro-Wei bound violated")
    return OptimizationNumbers(
        g.n, len(ind), len(cov), len(mat), None if ec is None else len(ec), len(clq), cw,
        ind, cov, mat, ec, clq,
    )


def odd_components(g: Graph, s: Iterable[int] = ()) -> int:
    alive = ((1 << g.n) - 1) & ~to_mask(s)
    return sum(popcount(c) % 2 for c in component_masks(g.masks, alive))


# ---------------------------------------------------------------- matchings


@dataclass(frozen=True)
class Matching:
    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def saturated(self) -> tuple[int, ...]:
        return tuple(sorted(v for e in self.edges for v in e))

    @property
    def perfect(self) -> bool:
        return 2 * len(self.edges) == self.n


@dataclass(frozen=True)
class MatchingCertificate:
    kind: str  # konig_cover | no_augmenting_path
    cover: tuple[int, ...] | None = None
    hall_violator: tuple[int, ...] | None = None
    neighbourhood: tuple[int, ...] | None = None


def is_matching(g: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen |= {u, v}
    return True


def augmenting_path(g: Graph, edges: Iterable[tuple[int, int]]) -> tuple[int, ...] | None:
    """An M-augmenting path by exhaustive alternating search, or None."""
    mate = [-1] * g.n
    for u, v in edges:
        mate[u], mate[v] = v, u
    free = [v for v in range(g.n) if mate[v] < 0]
    for s in free:
        path = [s]
        on = {s}

        def rec(v: int) -> bool:
            # v was reached by a non-matching edge (or is the start)
            for w in g.neighbors(v):
                if w in on:
                    continue
                if mate[w] < 0:
                    path.append(w)
                    return True
                x = mate[w]
                if x in on:
                    continue
                path.extend((w, x))
                on.update((w, x))
                if rec(x):
                    return True
                path[-2:] = []
                on.difference_update((w, x))
            return False

        if rec(s):
            return tuple(path)
    return None


def _kuhn(left: Sequence[Hashable], adj) -> dict:
    """Kuhn's augmenting-path matching; left vertices and their lists in order."""
    match_r: dict = {}

    def try_(u, seen: set) -> bool:
        for w in adj[u]:
            if w in seen:
                continue
            seen.add(w)
            if w not in match_r or try_(match_r[w], seen):
                match_r[w] = u
                return True
        return False

    for u in left:
        try_(u, set())
    return {u: w for w, u in match_r.items()}


def _alternating_reach(left: Sequence, adj, match_l: dict, starts) -> tuple[set, set]:
    """Vertices reachable from ``starts`` by alternating paths (left set, right set)."""
    match_r = {w: u for u, w in match_l.items()}
    zl, zr = set(starts), set()
    stack = list(starts)
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in zr:
                zr.add(w)
                x = match_r.get(w)
                if x is not None and x not in zl:
                    zl.add(x)
                    stack.append(x)
    return zl, zr


def _konig(left: Sequence, right: Sequence, adj) -> tuple[dict, list, list, set, set]:
    match_l = _kuhn(left, adj)
    unmatched = [u for u in left if u not in match_l]
    zl, zr = _alternating_reach(left, adj, match_l, unmatched)
    cover_l = [u for u in left if u not in zl]
    cover_r = [w for w in right if w in zr]
    return match_l, cover_l, cover_r, zl, zr


def max_matching(
    g: Graph,
    bipartite_hint: tuple[Sequence[int], Sequence[int]] | None = None,
    cap: int = DEFAULT_CAP,
) -> tuple[Matching, MatchingCertificate]:
    """Maximum matching with a certificate of optimality.

    Bipartite inputs (hinted, or detected) get Kuhn's algorithm and a minimum
    vertex cover of equal size; if the first side is not saturated the
    certificate also names a Hall violator S with |N(S)| < |S|.  Other
    inputs use exact search (n <= cap) and are re-checked for augmenting paths.
    """
    parts = bipartite_hint
    if parts is None:
        bp = bipartition(g)
        parts = bp.parts if bp.bipartite else None
    if parts is not None:
        left, right = list(parts[0]), list(parts[1])
        side = set(left)
        for u, v in g.edges:
            if (u in side) == (v in side):
                raise BadParams(f"edge {u}-{v} lies inside one side of the hint")
        adj = {u: list(g.neighbors(u)) for u in left}
        match_l, cl, cr, zl, zr = _konig(left, right, adj)
        m = Matching(g.n, tuple(sorted((min(u, w), max(u, w)) for u, w in match_l.items())))
        cover = tuple(sorted(cl + cr))
        if len(cover) != m.size:
            raise AssertionError("cover size differs from matching size")
        viol = nb = None
        if len(match_l) < len(left):
            u0 = min(u for u in left if u not in match_l)
            sl, sr = _alternating_reach(left, adj, match_l, [u0])
            viol, nb = tuple(sorted(sl)), tuple(sorted(sr))
        return m, MatchingCertificate("konig_cover", cover, viol, nb)
    edges = max_matching_exact(g, cap)
    if augmenting_path(g, edges) is not None:
        raise AssertionError("exact matching admits an augmenting path")
    return Matching(g.n, tuple(sorted(edges))), MatchingCertificate("no_augmenting_path")


def hall_violator(g: Graph, side: Sequence[int]) -> tuple[int, ...] | None:
    """Least subset S of ``side`` with |N(S)| < |S|, by enumeration."""
    for k in range(1, len(side) + 1):
        for s in combinations(sorted(side), k):
            nb = 0
            for v in s:
                nb |= g.mask(v)
            if popcount(nb) < k:
                return s
    return None


# ------------------------------------------------ transversals and matrices


@dataclass(frozen=True)
class SDRResult:
    representatives: tuple | None
    violator: tuple[int, ...] | None = None


def sdr(sets: Sequence[Iterable]) -> SDRResult:
    """Distinct representatives, one per set, or a subfamily violating Hall.

    Sets are processed in order and their elements tried in sorted order.
    """
    fam = [sorted(set(s)) for s in sets]
    left = list(range(len(fam)))
    adj = {i: [("e", x) for x in fam[i]] for i in left}
    match_l = _kuhn(left, adj)
    if len(match_l) == len(fam):
        return SDRResult(tuple(match_l[i][1] for i in left))
    u0 = min(i for i in left if i not in match_l)
    zl, _ = _alternating_reach(left, adj, match_l, [u0])
    return SDRResult(None, tuple(sorted(zl)))


@dataclass(frozen=True)
class MatrixMinMax:
    ones: tuple[tuple[int, int], ...]
    lines: tuple[tuple[str, int], ...]


def matrix_minmax(a: Sequence[Sequence[int]]) -> MatrixMinMax:
    """Maximum set of independent ones and a minimum set of covering lines.

    Rows and columns are 0-based; lines are ("row", i) or ("col", j).
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    left = list(range(rows))
    adj = {i: [j for j in range(cols) if a[i][j]] for i in left}
    match_l, cl, cr, _, _ = _konig(left, list(range(cols)), adj)
    ones = tuple(sorted(match_l.items()))
    lines = tuple(("row", i) for i in cl) + tuple(("col", j) for j in cr)
    if len(ones) != len(lines):
        raise AssertionError("line cover size differs")
    return MatrixMinMax(ones, lines)


# ----------------------------------------------------------------- posets


class Poset:
    """Finite partial order on ``0..n-1`` stored as a boolean matrix ``leq``."""

    def __init__(self, n: int, leq: Sequence[Sequence[bool]]):
        self.n = n
        self.leq = tuple(tuple(bool(x) for x in row) for row in leq)
        for i in range(n):
            if not self.leq[i][i]:
                raise BadParams(f"relation is not reflexive at {i}")
            for j in range(n):
                if i != j and self.leq[i][j] and self.leq[j][i]:
                    raise BadParams(f"relation is not antisymmetric on {i}, {j}")
                for k in range(n):
                    if self.leq[i][j] and self.leq[j][k] and not self.leq[i][k]:
                        raise BadParams(f"relation is not transitive on {i}, {j}, {k}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Poset":
        """Reflexive-transitive closure of the given x <= y pairs."""
        r = [[i == j for j in range(n)] for i in range(n)]
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise BadParams(f"pair {x},{y} outside 0..{n - 1}")
            r[x][y] = True
        for k in range(n):
            for i in range(n):
                if r[i][k]:
                    for j in range(n):
                        if r[k][j]:
                            r[i][j] = True
        return cls(n, r)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq[x][y] or self.leq[y][x]


@dataclass(frozen=True)
class DilworthResult:
    antichain: tuple[int, ...]
    chains: tuple[tuple[int, ...], ...]
    method: str


def _chain_sort(p: Poset, chain: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(chain, key=lambda x: (sum(p.leq[y][x] for y in range(p.n)), x)))


def _dilworth_brute(p: Poset) -> DilworthResult:
    n = p.n
    full = (1 << n) - 1
    comp = [to_mask(y for y in range(n) if p.comparable(x, y)) for x in range(n)]
    best_anti = 0
    for mask in range(1 << n):
        if all(not (comp[x] & mask & ~(1 << x)) for x in bits(mask)):
            if popcount(mask) > popcount(best_anti):
                best_anti = mask

    @lru_cache(maxsize=None)
    def cover(mask: int) -> tuple[int, ...]:
        """Fewest chains partitioning ``mask``; the chain holding the least element is chosen."""
        if not mask:
            return ()
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        best = None
        sub = rest & comp[v]
        s = sub
        while True:
            c = s | 1 << v
            if all((comp[x] & c) == c for x in bits(c)):
                cand = (c,) + cover(mask & ~c)
                if best is None or len(cand) < len(best):
                    best = cand
            if s == 0:
                break
            s = (s - 1) & sub
        return best

    chains = tuple(_chain_sort(p, bits(c)) for c in cover(full))
    return DilworthResult(tuple(bits(best_anti)), chains, "brute_force")


def _dilworth_matching(p: Poset) -> DilworthResult:
    """Chains from a maximum matching of x -> y (x < y); antichain from the cover."""
    n = p.n
    left = list(range(n))
    adj = {x: [y for y in range(n) if x != y and p.leq[x][y]] for x in left}
    match_l, cl, cr, _, _ = _konig(left, left, adj)
    nxt = dict(match_l)
    has_prev = set(match_l.values())
    chains = []
    for x in range(n):
        if x not in has_prev:
            ch = [x]
            while ch[-1] in nxt:
                ch.append(nxt[ch[-1]])
            chains.append(tuple(ch))
    covered = set(cl) | set(cr)
    anti = tuple(x for x in range(n) if x not in covered)
    return DilworthResult(anti, tuple(chains), "matching")


def dilworth(p: Poset, cap: int = 10, method: str = "auto") -> DilworthResult:
    """Maximum antichain and a chain partition of the same size."""
    if method == "brute_force" or (method == "auto" and p.n <= cap):
        if p.n > cap:
            raise CapExceeded("dilworth_brute_n", cap, p.n)
        r = _dilworth_brute(p)
    else:
        r = _dilworth_matching(p)
    if len(r.antichain) != len(r.chains):
        raise AssertionError("antichain and chain cover sizes differ")
    return r


# ------------------------------------------------------------ Tutte-Berge


@dataclass(frozen=True)
class DeficiencyReport:
    tutte_holds: bool
    deficiency: int
    extremal_set: tuple[int, ...]
    odd_components: int
    perfect_matching: tuple[tuple[int, int], ...] | None


def matching_deficiency(g: Graph, cap: int = 16) -> DeficiencyReport:
    """max over S of o(G - S) - |S|, checked against n - 2 alpha'.

    Ties go to the lexicographically least S.
    """
    _cap("deficiency_n", cap, g.n)
    n = g.n
    full = (1 << n) - 1
    masks = g.masks
    best_val, best_s, best_o = None, (), 0
    for k in range(n + 1):
        if best_val is not None and n - 2 * k < best_val:
            break  # o(G - S) <= n - |S| bounds the value by n - 2|S|
        for s in combinations(range(n), k):
            alive = full & ~to_mask(s)
            o = sum(popcount(c) & 1 for c in component_masks(masks, alive))
            val = o - k
            if best_val is None or val > best_val or (val == best_val and s < best_s):
                best_val, best_s, best_o = val, s, o
    mat = max_matching_exact(g, max(cap, DEFAULT_CAP))
    if n - 2 * len(mat) != best_val:
        raise AssertionError("Tutte-Berge equality fails")
    holds = best_val == 0 and n % 2 == 0
    return DeficiencyReport(holds, best_val, best_s, best_o, mat if holds else None)


# ------------------------------------------------------------------ factors


@dataclass(frozen=True)
class Gadget:
    """Per-vertex complete bipartite gadget; node ids are dense."""

    size: int
    edges: tuple[tuple[int, int], ...]
    port_edges: dict = field(compare=False)  # gadget edge -> edge of g


def f_factor_gadget(g: Graph, f: Sequence[int]) -> Gadget:
    """Replace v by K_{d(v), e(v)} with e(v) = d(v) - f(v).

    The j-th neighbour of v (ascending id) is wired to the j-th A-port of v.
    """
    if len(f) != g.n:
        raise BadParams("f needs one value per vertex")
    for v in range(g.n):
        if not 0 <= f[v] <= g.degree(v):
            raise InfeasibleDegrees(f"f({v}) = {f[v]} not in 0..{g.degree(v)}")
    port: list[dict[int, int]] = []
    nid = 0
    edges: list[tuple[int, int]] = []
    for v in range(g.n):
        a = {w: nid + j for j, w in enumerate(g.neighbors(v))}
        nid += g.degree(v)
        b = range(nid, nid + g.degree(v) - f[v])
        nid += g.degree(v) - f[v]
        edges += [(x, y) for x in a.values() for y in b]
        port.append(a)
    pe = {}
    for u, v in g.edges:
        e = (port[u][v], port[v][u])
        edges.append(e)
        pe[e] = (u, v)
    return Gadget(nid, tuple(edges), pe)


def f_factor(g: Graph, f: Sequence[int]) -> Graph | None:
    """Spanning subgraph with degree f(v) at every v, via a perfect matching
    of the gadget graph (computed with networkx)."""
    import networkx as nx

    gad = f_factor_gadget(g, f)
    h = nx.Graph()
    h.add_nodes_from(range(gad.size))
    h.add_edges_from(gad.edges)
    mate = nx.max_weight_matching(h, maxcardinality=True)
    if 2 * len(mate) != gad.size:
        return None
    chosen = []
    for x, y in mate:
        e = gad.port_edges.get((x, y)) or gad.port_edges.get((y, x))
        if e:
            chosen.append(e)
    out = Graph(g.n, chosen)
    if out.degrees() != tuple(f):
        raise AssertionError("gadget matching does not give the prescribed degrees")
    return out


@dataclass(frozen=True)
class Factorization:
    kind: str
    parts: tuple[tuple[tuple[int, int], ...], ...]
    degree: int


def _regular_degree(g: Graph) -> int | None:
    d = set(g.degrees())
    return d.pop() if len(d) == 1 else None


def _bipartite_one_factors(left, right, arcs: set) -> list[list[tuple]]:
    """Split a regular bipartite arc set into perfect matchings."""
    arcs = set(arcs)
    out = []
    while arcs:
        adj = {u: sorted(w for (x, w) in arcs if x == u) for u in left}
        match_l = _kuhn(left, adj)
        if len(match_l) != len(left):
            raise AssertionError("regular bipartite graph without a perfect matching")
        pm = sorted(match_l.items())
        out.append(pm)
        arcs -= set(pm)
    return out


def _euler_tour_of(g: Graph, comp: Sequence[int]) -> list[int]:
    from .traversal import euler

    sub, ids = induced_subgraph(g, comp)
    seq = euler(sub).sequence
    return [ids[v] for v in seq]


def factorize(g: Graph, kind: str, tour: Sequence[int] | None = None) -> Factorization:
    """One-factorization of a regular bipartite graph or of K_2n, or a
    two-factorization of a 2k-regular graph (Euler tour + bipartite split)."""
    r = _regular_degree(g)
    if kind == "one_regular_bipartite":
        bp = bipartition(g)
        if r is None or r < 1 or not bp.bipartite:
            raise WrongClass("needs an r-regular bipartite graph with r >= 1")
        left, right = bp.parts
        arcs = {(u, w) for u in left for w in g.neighbors(u)}
        pms = _bipartite_one_factors(list(left), list(right), arcs)
        parts = tuple(tuple(sorted((min(u, w), max(u, w)) for u, w in pm)) for pm in pms)
        return _checked(g, Factorization("one_factor", parts, 1))
    if kind == "two_even_regular":
        if r is None or r < 2 or r % 2:
            raise WrongClass("needs a 2k-regular graph with k >= 1")
        arcs: set[tuple[int, int]] = set()
        for comp in components(g):
            seq = list(tour) if tour is not None and len(components(g)) == 1 else _euler_tour_of(g, comp)
            if seq[0] != seq[-1] or len(seq) != sum(g.degree(v) for v in comp) // 2 + 1:
                raise BadParams("tour must be a closed Euler circuit")
            arcs |= set(zip(seq, seq[1:]))
        verts = list(range(g.n))
        pms = _bipartite_one_factors(verts, verts, arcs)
        parts = tuple(tuple(sorted((min(u, w), max(u, w)) for u, w in pm)) for pm in pms)
        return _checked(g, Factorization("two_factor", parts, 2))
    if kind == "one_K2n":
        if not is_complete(g) or g.n % 2 or g.n < 2:
            raise WrongClass("needs a complete graph of even order")
        l2 = g.n - 1  # vertices 1..2l-1 on a circle, vertex 0 fixed
        parts = []
        for k in range(1, g.n):
            pm = [(0, k)]
            for i in range(1, g.n // 2):
                a = (k - i - 1) % l2 + 1
                b = (k + i - 1) % l2 + 1
                pm.append((min(a, b), max(a, b)))
            parts.append(tuple(sorted(pm)))
        return _checked(g, Factorization("one_factor", tuple(parts), 1))
    raise BadParams(f"unknown factorization kind {kind!r}")


def _checked(g: Graph, fz: Factorization) -> Factorization:
    flat = [e for p in fz.parts for e in p]
    if sorted(flat) != list(g.edges):
        raise AssertionError("parts do not partition the edge set")
    for p in fz.parts:
        deg = [0] * g.n
        for u, v in p:
            deg[u] += 1
            deg[v] += 1
        if any(d != fz.degree for d in deg):
            raise AssertionError("factor misses its degree target")
    return fz


# -------------------------------------------------------------- arboricity


def nash_williams(g: Graph, cap: int = 16) -> tuple[int, tuple[int, ...]]:
    """max over vertex sets S, |S| >= 2, of ceil(m(S) / (|S| - 1)) and a maximiser."""
    _cap("arboricity_n", cap, g.n)
    best, arg = 0, ()
    masks = g.masks
    for mask in range(1, 1 << g.n):
        k = popcount(mask)
        if k < 2:
            continue
        m2 = sum(popcount(masks[v] & mask) for v in bits(mask))
        val = -(-(m2 // 2) // (k - 1))
        if val > best:
            best, arg = val, tuple(bits(mask))
    return best, arg


def forest_decomposition(g: Graph, k: int) -> tuple[tuple[tuple[int, int], ...], ...] | None:
    """Split E(g) into k forests by backtracking, or None."""
    if k == 0:
        return () if g.m == 0 else None
    parts: list[list[tuple[int, int]]] = [[] for _ in range(k)]

    def joined(part: list, u: int, v: int) -> bool:
        adj: dict[int, list[int]] = {}
        for a, b in part:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        seen, stack = {u}, [u]
        while stack:
            x = stack.pop()
            if x == v:
                return True
            for y in adj.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def rec(i: int, used: int) -> bool:
        if i == g.m:
            return True
        u, v = g.edges[i]
        for j in range(min(used + 1, k)):
            if not joined(parts[j], u, v):
                parts[j].append((u, v))
                if rec(i + 1, max(used, j + 1)):
                    return True
                parts[j].pop()
        return False

    if not rec(0, 0):
        return None
    return tuple(tuple(p) for p in parts)


def arboricity(g: Graph, cap: int = 16) -> tuple[int, tuple[tuple[tuple[int, int], ...], ...]]:
    """a(G) from the subgraph density formula and a matching forest decomposition."""
    a, _ = nash_williams(g, cap)
    forests = forest_decomposition(g, a)
    if forests is None or not all(is_forest(g.n, f) for f in forests):
        raise AssertionError("no decomposition into a(G) forests")
    return a, forests
