"""Named graph families, extremal-number reports and set-system graphs."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product
from typing import Hashable, Iterable, Sequence

from .errors import BadParams, CapExceeded, EmptyFamily
from .graphcore import Graph

FAMILIES = (
    "complete",
    "complete_bipartite",
    "complete_multipartite",
    "path",
    "cycle",
    "hypercube",
    "star",
    "wheel",
    "petersen",
    "heawood",
    "turan",
    "cycle_power",
    "hamming",
    "grotzsch",
    "sylvester",
    "octahedron",
    "dodecahedron",
    "icosahedron",
)


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: tuple[int, ...] = ()


def complete(n: int) -> Graph:
    if n < 0:
        raise BadParams("complete needs n >= 0")
    return Graph(n, combinations(range(n), 2))


def complete_multipartite(*parts: int) -> Graph:
    if any(p < 0 for p in parts):
        raise BadParams("part sizes must be non-negative")
    label = []
    for i, p in enumerate(parts):
        label.extend([i] * p)
    n = len(label)
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]])


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}; the first m ids form one side."""
    return complete_multipartite(m, n)


def path(n: int) -> Graph:
    if n < 1:
        raise BadParams("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def hypercube(d: int) -> Graph:
    """Q_d on bit strings; vertex id is the integer value of the string."""
    if d < 0:
        raise BadParams("hypercube needs d >= 0")
    n = 1 << d
    return Graph(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    if k < 0:
        raise BadParams("star needs k >= 0")
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def wheel(n: int) -> Graph:
    """W_n = K_1 + C_{n-1}; hub is vertex 0."""
    if n < 4:
        raise BadParams("wheel needs n >= 4")
    rim = n - 1
    edges = [(0, i) for i in range(1, n)]
    edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return Graph(n, edges)


def turan_parts(n: int, r: int) -> tuple[int, ...]:
    if r < 1 or n < 0:
        raise BadParams("turan needs r >= 1 and n >= 0")
    q, extra = divmod(n, r)
    return tuple(q + 1 if i < extra else q for i in range(r))


def turan(n: int, r: int) -> Graph:
    return complete_multipartite(*turan_parts(n, r))


def cycle_power(n: int, k: int) -> Graph:
    """C_n^k: i ~ j when their cyclic distance is at most k (1 <= k < n/2)."""
    if n < 3 or not 1 <= k or 2 * k >= n:
        raise BadParams("cycle_power needs n >= 3 and 1 <= k < n/2")
    return Graph(n, {tuple(sorted((i, (i + s) % n))) for i in range(n) for s in range(1, k + 1)})


def hamming(*sizes: int) -> Graph:
    """Tuples over the given alphabets, adjacent when they differ in one place."""
    if not sizes or any(s < 1 for s in sizes):
        raise BadParams("hamming needs at least one positive alphabet size")
    verts = list(product(*(range(s) for s in sizes)))
    pos = {v: i for i, v in enumerate(verts)}
    edges = []
    for v in verts:
        for c, s in enumerate(sizes):
            for x in range(v[c] + 1, s):
                w = v[:c] + (x,) + v[c + 1 :]
                edges.append((pos[v], pos[w]))
    return Graph(len(verts), edges)


def petersen() -> Graph:
    """Outer 5-cycle 0..4, spokes i-(i+5), inner pentagram on 5..9."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


def heawood() -> Graph:
    """Hamiltonian 14-cycle with chords i-(i+5) from every even i."""
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return Graph(14, edges)


def grotzsch() -> Graph:
    """Mycielski graph of C_5: v_i = i, u_i = 5+i, w = 10."""
    c = cycle(5)
    edges = list(c.edges)
    for i in range(5):
        for j in c.neighbors(i):
            edges.append((5 + i, j))
        edges.append((5 + i, 10))
    return Graph(11, edges)


def sylvester() -> Graph:
    """Cubic graph with three bridges and no perfect matching (16 vertices).

    Centre 0 joins by a bridge to vertex a of each of three blocks; a block is
    K_4 on {b,c,d,e} minus bc, plus ab and ac.
    """
    edges = []
    for t in range(3):
        a, b, c, d, e = (1 + 5 * t + i for i in range(5))
        edges += [(0, a), (a, b), (a, c), (b, d), (b, e), (c, d), (c, e), (d, e)]
    return Graph(16, edges)


def octahedron() -> Graph:
    return complete_multipartite(2, 2, 2)


def dodecahedron() -> Graph:
    """20-cycle with chords from the LCF notation [10,7,4,-4,-7,10,-4,7,-7,4]^2."""
    lcf = [10, 7, 4, -4, -7, 10, -4, 7, -7, 4] * 2
    edges = {(i, (i + 1) % 20) for i in range(20)}
    edges |= {(i, (i + s) % 20) for i, s in enumerate(lcf)}
    return Graph(20, {(min(e), max(e)) for e in edges})


def icosahedron() -> Graph:
    """Apex 0, upper ring 1..5, lower ring 6..10, apex 11."""
    edges = []
    for i in range(5):
        a, b = 1 + i, 1 + (i + 1) % 5
        c, d = 6 + i, 6 + (i + 1) % 5
        edges += [(0, a), (a, b), (c, d), (11, c), (a, c), (a, d)]
    return Graph(12, edges)


_ARITY = {
    "complete": 1,
    "complete_bipartite": 2,
    "path": 1,
    "cycle": 1,
    "hypercube": 1,
    "star": 1,
    "wheel": 1,
    "turan": 2,
    "cycle_power": 2,
    "petersen": 0,
    "heawood": 0,
    "grotzsch": 0,
    "sylvester": 0,
    "octahedron": 0,
    "dodecahedron": 0,
    "icosahedron": 0,
}


def generate(spec: FamilySpec) -> Graph:
    builders = {
        "complete": complete,
        "complete_bipartite": complete_bipartite,
        "complete_multipartite": complete_multipartite,
        "path": path,
        "cycle": cycle,
        "hypercube": hypercube,
        "star": star,
        "wheel": wheel,
        "turan": turan,
        "cycle_power": cycle_power,
        "hamming": hamming,
        "petersen": petersen,
        "heawood": heawood,
        "grotzsch": grotzsch,
        "sylvester": sylvester,
        "octahedron": octahedron,
        "dodecahedron": dodecahedron,
        "icosahedron": icosahedron,
    }
    tag, p = spec.tag, tuple(spec.params)
    if tag not in builders:
        raise BadParams(f"unknown family {tag!r}")
    if tag in _ARITY and len(p) != _ARITY[tag]:
        raise BadParams(f"{tag} takes {_ARITY[tag]} parameter(s)")
    return builders[tag](*p)


# ----------------------------------------------------------- extremal reports


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    pattern: str
    bound: float | int
    within_bound: bool | None = None
    found: tuple[int, ...] | None = None
    witness: Graph | None = None
    ex: int | None = None


def find_clique(g: Graph, k: int) -> tuple[int, ...] | None:
    """Lexicographically least k-clique, or None."""

    def extend(chosen: list[int], cand: int) -> tuple[int, ...] | None:
        if len(chosen) == k:
            return tuple(chosen)
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            got = extend(chosen + [v], cand & g.mask(v))
            if got:
                return got
        return None

    if k == 0:
        return ()
    return extend([], (1 << g.n) - 1)


def mantel_turan_report(g: Graph | None = None, n: int | None = None, r: int = 2) -> ExtremalReport:
    """Compare a graph with the K_{r+1}-free bound, or give the extremal T_{n,r}."""
    pattern = f"K{r + 1}"
    if g is None:
        if n is None:
            raise BadParams("give a graph or n")
        t = turan(n, r)
        return ExtremalReport(n, pattern, t.m, True, None, t, None)
    bound = turan(g.n, r).m
    clique = find_clique(g, r + 1)
    return ExtremalReport(g.n, pattern, bound, g.m <= bound, clique, None, None)


def find_c4(g: Graph) -> tuple[int, ...] | None:
    """Some 4-cycle (a, x, b, y) built from two length-2 paths a-x-b, a-y-b."""
    for a, b in combinations(range(g.n), 2):
        common = g.mask(a) & g.mask(b)
        if common & (common - 1):
            x = (common & -common).bit_length() - 1
            rest = common & (common - 1)
            y = (rest & -rest).bit_length() - 1
            return (a, x, b, y)
    return None


@dataclass(frozen=True)
class ReimanReport:
    n: int
    m: int
    path2_sum: int
    pairs: int
    criterion_fires: bool
    c4: tuple[int, ...] | None
    bound: float
    within_bound: bool


def reiman_within_bound(n: int, m: int) -> bool:
    """Exact test of m <= (n/4)(1 + sqrt(4n - 3)), by squaring."""
    if n == 0:
        return m == 0
    lhs = 4 * m - n
    if lhs <= 0:
        return True
    return lhs * lhs <= n * n * (4 * n - 3)


def reiman_c4_report(g: Graph) -> ReimanReport:
    s = sum(math.comb(d, 2) for d in g.degrees())
    pairs = math.comb(g.n, 2)
    c4 = find_c4(g)
    fires = s > pairs
    if fires and c4 is None:
        raise AssertionError("pigeonhole guarantees a 4-cycle")
    bound = g.n / 4 * (1 + math.sqrt(4 * g.n - 3)) if g.n else 0.0
    return ReimanReport(g.n, g.m, s, pairs, fires, c4, bound, reiman_within_bound(g.n, g.m))


def _closes_pattern(adj: list[int], u: int, v: int, pattern: str) -> bool:
    common = adj[u] & adj[v]
    if pattern == "K3":
        return common != 0
    if pattern == "K4":
        c = common
        while c:
            x = (c & -c).bit_length() - 1
            c &= c - 1
            if adj[x] & c:
                return True
        return False
    if pattern == "C4":
        if common & (common - 1):
            return True
        nu = adj[u] & ~(1 << v)
        while nu:
            x = (nu & -nu).bit_length() - 1
            nu &= nu - 1
            if adj[x] & adj[v] & ~(1 << u) & ~(1 << x):
                return True
        return False
    raise BadParams(f"unknown pattern {pattern}")


def ex_bruteforce(n: int, pattern: str, cap: int = 7) -> ExtremalReport:
    """ex(n, F) by exhaustive branch and bound over edge subsets."""
    if n > cap:
        raise CapExceeded("ex_n", cap, n)
    if pattern not in ("K3", "C4", "K4"):
        raise BadParams(f"unknown pattern {pattern}")
    pairs = list(combinations(range(n), 2))
    adj = [0] * n
    best = [-1, []]
    chosen: list[tuple[int, int]] = []

    def dfs(i: int) -> None:
        if len(chosen) + (len(pairs) - i) <= best[0]:
            return
        if i == len(pairs):
            best[0] = len(chosen)
            best[1] = list(chosen)
            return
        u, v = pairs[i]
        if not _closes_pattern(adj, u, v, pattern):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            chosen.append((u, v))
            dfs(i + 1)
            chosen.pop()
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        dfs(i + 1)

    dfs(0)
    witness = Graph(n, best[1])
    bound: float | int
    if pattern == "K3":
        bound = n * n // 4
    elif pattern == "K4":
        bound = turan(n, 3).m
    else:
        bound = n / 4 * (1 + math.sqrt(4 * n - 3)) if n else 0
    return ExtremalReport(n, pattern, bound, best[0] <= bound, None, witness, best[0])


# --------------------------------------------------------- set-system graphs


def _check_family(family: Sequence) -> None:
    if not family:
        raise EmptyFamily("family must be nonempty")


def incidence_graph(
    ground: Sequence[Hashable], family: Sequence[Iterable[Hashable]]
) -> Graph:
    """Bipartite graph: ground elements 0..|S|-1, then one vertex per set."""
    _check_family(family)
    pos = {x: i for i, x in enumerate(ground)}
    edges = []
    for j, fset in enumerate(family):
        for x in fset:
            edges.append((pos[x], len(ground) + j))
    return Graph(len(ground) + len(family), edges)


def intersection_graph(family: Sequence[Iterable[Hashable]]) -> Graph:
    _check_family(family)
    sets = [frozenset(f) for f in family]
    return Graph(len(sets), [(i, j) for i, j in combinations(range(len(sets)), 2) if sets[i] & sets[j]])


def interval_graph(intervals: Sequence[tuple[float, float]]) -> Graph:
    """Closed intervals; adjacent when they share at least one point."""
    _check_family(intervals)
    for a, b in intervals:
        if a > b:
            raise BadParams(f"interval [{a},{b}] is empty")
    return Graph(
        len(intervals),
        [
            (i, j)
            for i, j in combinations(range(len(intervals)), 2)
            if max(intervals[i][0], intervals[j][0]) <= min(intervals[i][1], intervals[j][1])
        ],
    )


def set_system_graphs(
    family: Sequence, ground: Sequence[Hashable] | None = None, intervals: bool = False
) -> dict[str, Graph]:
    """Intersection graph of a family (interval graph when ``intervals``),
    plus the incidence graph when a ground set is given."""
    out = {"intersection": interval_graph(family) if intervals else intersection_graph(family)}
    if ground is not None and not intervals:
        out["incidence"] = incidence_graph(ground, family)
    return out


def marczewski_family(g: Graph) -> list[frozenset]:
    """F_i = {v_i} together with the edges at v_i; its intersection graph is g."""
    fam = []
    for v in range(g.n):
        s = {("v", v)}
        for w in g.neighbors(v):
            s.add(("e", min(v, w), max(v, w)))
        fam.append(frozenset(s))
    return fam


def closed_form_size(tag: str, *p: int) -> tuple[int, int]:
    """Order and size for a family from its closed formulas."""
    if tag == "complete":
        (n,) = p
        return n, n * (n - 1) // 2
    if tag == "complete_bipartite":
        a, b = p
        return a + b, a * b
    if tag == "cycle":
        (n,) = p
        return n, n
    if tag == "path":
        (n,) = p
        return n, n - 1
    if tag == "hypercube":
        (d,) = p
        return 2**d, d * 2 ** (d - 1) if d else 0
    if tag == "cycle_power":
        n, k = p
        return n, n * k
    if tag == "star":
        (k,) = p
        return k + 1, k
    if tag == "wheel":
        (n,) = p
        return n, 2 * (n - 1)
    if tag == "turan":
        n, r = p
        parts = turan_parts(n, r)
        return n, (n * n - sum(x * x for x in parts)) // 2
    raise BadParams(f"no closed form recorded for {tag}")
