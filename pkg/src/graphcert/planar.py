"""Planarity and outerplanarity with Kuratowski and minor witnesses, face
tracing on rotation systems, genus formulas and crossing-number tools.

Planarity is decided block by block with the Demoucron-Malgrange-Pertuiset
face-splitting procedure, whose faces serve as the certificate for planar
inputs.  A non-planar input is shrunk by edge deletion to a minimal
non-planar subgraph, which is a subdivision of K5 or K3,3.  This is a
desk-scale verifier, not a linear-time planarity tester.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Sequence

from .errors import BadParams, BadRotation, CapExceeded, Disconnected
from .families import complete, complete_bipartite
from .graphcore import Graph, bipartition, is_connected
from .transform import join

DEFAULT_CAP = 12
PATTERNS = ("K5", "K33", "K4", "K23")


# ------------------------------------------------------------ blocks + DMP


def _blocks(n: int, adj: Sequence[Sequence[int]]) -> list[list[tuple[int, int]]]:
    """Edge sets of the biconnected blocks (iterative lowpoint search)."""
    disc = [-1] * n
    low = [0] * n
    t = 0
    out: list[list[tuple[int, int]]] = []
    estack: list[tuple[int, int]] = []
    for s in range(n):
        if disc[s] >= 0 or not adj[s]:
            continue
        disc[s] = low[s] = t
        t += 1
        stack = [(s, -1, iter(adj[s]))]
        while stack:
            v, p, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    estack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                if w != p and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        e = estack.pop()
                        block.append((min(e), max(e)))
                        if e == (u, v):
                            break
                    out.append(sorted(block))
    return out


def _find_cycle(adj: dict[int, list[int]]) -> list[int]:
    start = min(adj)
    parent = {start: None}
    stack = [(start, iter(adj[start]))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if w not in parent:
                parent[w] = v
                stack.append((w, iter(adj[w])))
                break
            if w != parent[v]:
                cyc = [v]
                while cyc[-1] != w:
                    cyc.append(parent[cyc[-1]])
                return cyc[::-1]
        else:
            stack.pop()
    raise AssertionError("a block with two or more edges has a cycle")


def _fragments(adj: dict[int, list[int]], hv: set[int], he: set[tuple[int, int]]):
    """Pieces of the block not yet embedded, each as (contacts, path)."""
    frags = []
    for u in sorted(hv):
        for w in adj[u]:
            if w in hv and u < w and (u, w) not in he:
                frags.append((frozenset((u, w)), [u, w]))
    seen: set[int] = set()
    for s in sorted(adj):
        if s in hv or s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in hv and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        contacts = frozenset(y for x in comp for y in adj[x] if y in hv)
        a = min(contacts)
        prev = {a: None}
        queue = [a]
        end = None
        for x in queue:
            for y in adj[x]:
                if y in prev:
                    continue
                if y in comp:
                    prev[y] = x
                    queue.append(y)
                elif y in hv and y != a and x != a:
                    prev[y] = x
                    end = y
                    break
            if end is not None:
                break
        path = [end]
        while path[-1] != a:
            path.append(prev[path[-1]])
        frags.append((contacts, path[::-1]))
    return frags


def _split(face: list[int], path: list[int]) -> tuple[list[int], list[int]]:
    a, b = path[0], path[-1]
    i, j = face.index(a), face.index(b)
    k = len(face)
    arc1 = [face[(i + t) % k] for t in range((j - i) % k + 1)]
    arc2 = [face[(j + t) % k] for t in range((i - j) % k + 1)]
    inner = path[1:-1]
    return arc1 + inner[::-1], arc2 + inner


def _embed_block(edges: list[tuple[int, int]]) -> list[list[int]] | None:
    """Faces of a planar embedding of a biconnected block, or None."""
    if len(edges) == 1:
        return [list(edges[0])]
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for x in adj:
        adj[x].sort()
    cyc = _find_cycle(adj)
    hv = set(cyc)
    he = {(min(a, b), max(a, b)) for a, b in zip(cyc, cyc[1:] + cyc[:1])}
    faces = [list(cyc), list(cyc)]
    while True:
        frags = _fragments(adj, hv, he)
        if not frags:
            return faces
        options = []
        for contacts, path in frags:
            adm = [i for i, f in enumerate(faces) if contacts <= set(f)]
            if not adm:
                return None
            options.append((len(adm) > 1, adm[0], path))
        _, fi, path = min(options, key=lambda o: o[0])
        f1, f2 = _split(faces[fi], path)
        faces[fi] = f1
        faces.append(f2)
        hv.update(path)
        he.update((min(a, b), max(a, b)) for a, b in zip(path, path[1:]))


def _adj(n: int, edges: Sequence[tuple[int, int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return [sorted(a) for a in adj]


def embedding_faces(n: int, edges: Sequence[tuple[int, int]]) -> list[list[list[int]]] | None:
    """Faces of a plane embedding for every block, or None if some block is non-planar."""
    out = []
    for block in _blocks(n, _adj(n, edges)):
        faces = _embed_block(block)
        if faces is None:
            return None
        out.append(faces)
    return out


def is_planar(g: Graph) -> bool:
    return embedding_faces(g.n, g.edges) is not None


def verify_block_faces(block_faces: list[list[list[int]]]) -> bool:
    """Each block: every edge is on exactly two face sides and V - E + F = 2."""
    for faces in block_faces:
        sides: dict[tuple[int, int], int] = {}
        verts: set[int] = set()
        for f in faces:
            verts.update(f)
            for a, b in zip(f, f[1:] + f[:1]):
                e = (min(a, b), max(a, b))
                sides[e] = sides.get(e, 0) + 1
        if any(c != 2 for c in sides.values()):
            return False
        if len(verts) - len(sides) + len(faces) != 2:
            return False
    return True


# ---------------------------------------------------------- subdivisions


@dataclass(frozen=True)
class Subdivision:
    """Branch vertices and one path per pattern edge.

    K33 lists one side then the other; K23 lists the two degree-3 vertices
    and then one interior vertex of each connecting path.
    """

    pattern: str
    branch: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]


def pattern_edges(pattern: str) -> list[tuple[int, int]]:
    if pattern in ("K5", "K4"):
        return list(combinations(range(5 if pattern == "K5" else 4), 2))
    if pattern == "K33":
        return [(i, j) for i in range(3) for j in range(3, 6)]
    if pattern == "K23":
        return [(i, j) for i in range(2) for j in range(2, 5)]
    raise BadParams(f"unknown pattern {pattern!r}")


def pattern_graph(pattern: str) -> Graph:
    table = {"K5": (complete, 5), "K4": (complete, 4), "K33": (complete_bipartite, 3, 3), "K23": (complete_bipartite, 2, 3)}
    if pattern not in table:
        raise BadParams(f"unknown pattern {pattern!r}")
    make, *args = table[pattern]
    return make(*args)


def verify_subdivision(g: Graph, sub: Subdivision) -> bool:
    br = sub.branch
    pe = pattern_edges(sub.pattern)
    if len(set(br)) != len(br) or len(sub.paths) != len(pe):
        return False
    ends = sorted(tuple(sorted((p[0], p[-1]))) for p in sub.paths)
    if ends != sorted(tuple(sorted((br[i], br[j]))) for i, j in pe):
        return False
    inner: set[int] = set()
    for p in sub.paths:
        if any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
            return False
        mid = set(p[1:-1])
        if len(mid) != len(p) - 2 or mid & inner or mid & set(br):
            return False
        inner |= mid
    return True


def _chains(n: int, edges: Sequence[tuple[int, int]]) -> tuple[list[int], list[tuple[int, ...]]]:
    """Branch vertices (degree >= 3) and the degree-2 chains joining them."""
    adj = _adj(n, edges)
    branch = [v for v in range(n) if len(adj[v]) >= 3]
    bs = set(branch)
    paths = []
    seen: set[tuple[int, int]] = set()
    for b in branch:
        for w in adj[b]:
            if (b, w) in seen:
                continue
            p = [b, w]
            while p[-1] not in bs:
                x = p[-1]
                p.append(adj[x][0] if adj[x][0] != p[-2] else adj[x][1])
            seen.add((p[-1], p[-2]))
            paths.append(tuple(p))
    return branch, paths


def _minimal_subgraph(g: Graph, still_bad) -> list[tuple[int, int]]:
    cur = list(g.edges)
    for e in list(g.edges):
        trial = [x for x in cur if x != e]
        if still_bad(trial):
            cur = trial
    return cur


def kuratowski_subdivision(g: Graph, cap: int = DEFAULT_CAP) -> Subdivision | None:
    """A K5 or K3,3 subdivision inside g, or None when g is planar."""
    if is_planar(g):
        return None
    if g.n > cap:
        raise CapExceeded("planar_witness_n", cap, g.n)
    core = _minimal_subgraph(g, lambda es: embedding_faces(g.n, es) is None)
    branch, paths = _chains(g.n, core)
    if len(branch) == 5:
        sub = Subdivision("K5", tuple(branch), tuple(paths))
    elif len(branch) == 6:
        side = {branch[0]: 0}
        changed = True
        while changed:
            changed = False
            for p in paths:
                a, b = p[0], p[-1]
                if a in side and b not in side:
                    side[b], changed = 1 - side[a], True
                elif b in side and a not in side:
                    side[a], changed = 1 - side[b], True
        left = tuple(v for v in branch if side[v] == 0)
        right = tuple(v for v in branch if side[v] == 1)
        sub = Subdivision("K33", left + right, tuple(paths))
    else:
        raise AssertionError("minimal non-planar subgraph is not a Kuratowski subdivision")
    if not verify_subdivision(g, sub):
        raise AssertionError("Kuratowski witness failed verification")
    return sub


# ------------------------------------------------------------------ minors


def verify_minor(g: Graph, sets: Sequence[Sequence[int]], pattern: str) -> bool:
    """Branch sets are disjoint, connected, and adjacent wherever the pattern is."""
    flat = [v for s in sets for v in s]
    if len(flat) != len(set(flat)) or not all(sets):
        return False
    for s in sets:
        ss = set(s)
        start = next(iter(ss))
        seen, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y in ss and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != ss:
            return False
    for i, j in pattern_edges(pattern):
        if not any(g.has_edge(a, b) for a in sets[i] for b in sets[j]):
            return False
    return True


def _find_subgraph(h: Graph, adj: list[set[int]]) -> list[int] | None:
    """Injective map V(h) -> state vertices sending edges to edges."""
    k = len(adj)
    f = [-1] * h.n
    used = [False] * k

    def rec(i: int) -> bool:
        if i == h.n:
            return True
        for x in range(k):
            if used[x] or len(adj[x]) < h.degree(i):
                continue
            if all(f[j] in adj[x] for j in h.neighbors(i) if j < i):
                f[i] = x
                used[x] = True
                if rec(i + 1):
                    return True
                used[x] = False
        return False

    return f if rec(0) else None


def minor_witness(g: Graph, pattern: str, cap: int = DEFAULT_CAP) -> tuple[tuple[int, ...], ...] | None:
    """Branch sets of a ``pattern`` minor, found by exhaustive contraction search.

    States are partitions of V(g) into connected parts.  Parts of degree at
    most 1 are dropped and, for patterns of minimum degree 3, parts of
    degree 2 are merged into a neighbour; neither step can destroy a model.
    """
    if g.n > cap:
        raise CapExceeded("minor_n", cap, g.n)
    h = pattern_graph(pattern)
    hmin = min(h.degrees())
    seen: set[frozenset] = set()

    def state_adj(parts: list[frozenset]) -> list[set[int]]:
        owner = {v: i for i, p in enumerate(parts) for v in p}
        adj = [set() for _ in parts]
        for u, v in g.edges:
            if u in owner and v in owner and owner[u] != owner[v]:
                adj[owner[u]].add(owner[v])
                adj[owner[v]].add(owner[u])
        return adj

    def reduce(parts: list[frozenset]) -> list[frozenset]:
        while True:
            adj = state_adj(parts)
            low = next((i for i in range(len(parts)) if len(adj[i]) <= 1), None)
            if low is not None:
                parts = parts[:low] + parts[low + 1 :]
                continue
            if hmin >= 3:
                two = next((i for i in range(len(parts)) if len(adj[i]) == 2), None)
                if two is not None:
                    j = min(adj[two], key=lambda x: min(parts[x]))
                    merged = parts[two] | parts[j]
                    parts = [p for t, p in enumerate(parts) if t not in (two, j)] + [merged]
                    parts.sort(key=min)
                    continue
            return parts

    def rec(parts: list[frozenset]) -> tuple[tuple[int, ...], ...] | None:
        parts = reduce(parts)
        key = frozenset(parts)
        if key in seen:
            return None
        seen.add(key)
        adj = state_adj(parts)
        m = sum(len(a) for a in adj) // 2
        if len(parts) < h.n or m < h.m:  # contraction never adds parts or edges
            return None
        f = _find_subgraph(h, adj)
        if f is not None:
            return tuple(tuple(sorted(parts[x])) for x in f)
        for i in range(len(parts)):
            for j in sorted(adj[i]):
                if i < j:
                    merged = parts[i] | parts[j]
                    nxt = [p for t, p in enumerate(parts) if t not in (i, j)] + [merged]
                    nxt.sort(key=min)
                    r = rec(nxt)
                    if r is not None:
                        return r
        return None

    res = rec([frozenset((v,)) for v in range(g.n)])
    if res is not None and not verify_minor(g, res, pattern):
        raise AssertionError("minor witness failed verification")
    return res


# ----------------------------------------------------------------- reports


@dataclass(frozen=True)
class TopologyReport:
    planar: bool
    maximal_planar: bool = False
    prefilter: str = ""
    faces: tuple | None = None
    kuratowski: Subdivision | None = None
    minor: tuple[tuple[int, ...], ...] | None = None
    outerplanar: bool | None = None
    outer_witness: Subdivision | None = None
    crossing_lower_bound: int | None = None


def crossing_lower_bound(g: Graph) -> int:
    return max(0, g.m - 3 * g.n + 6) if g.n >= 3 else 0


def planarity(g: Graph, cap: int = DEFAULT_CAP, with_minor: bool = False) -> TopologyReport:
    n, m = g.n, g.m
    prefilter = ""
    if n >= 3 and m > 3 * n - 6:
        prefilter = "m > 3n - 6"
    elif n >= 3 and m > 2 * n - 4 and bipartition(g).bipartite:
        prefilter = "bipartite and m > 2n - 4"
    faces = embedding_faces(n, g.edges)
    planar = faces is not None
    if prefilter and planar:
        raise AssertionError("edge-count filter contradicts the embedding")
    if planar:
        if not verify_block_faces(faces):
            raise AssertionError("embedding faces failed verification")
        return TopologyReport(
            True,
            maximal_planar=n >= 3 and m == 3 * n - 6,
            faces=tuple(tuple(tuple(f) for f in b) for b in faces),
            crossing_lower_bound=0,
        )
    sub = kuratowski_subdivision(g, cap)
    mnr = minor_witness(g, sub.pattern, cap) if with_minor else None
    return TopologyReport(False, prefilter=prefilter, kuratowski=sub, minor=mnr,
                          crossing_lower_bound=crossing_lower_bound(g))


def outerplanarity(g: Graph, cap: int = DEFAULT_CAP) -> TopologyReport:
    """Outerplanar iff g + K1 is planar, checked against a K4 / K2,3 minor search."""
    if g.n > cap:
        raise CapExceeded("outerplanar_n", cap, g.n)
    apex = join(g, Graph(1))
    route1 = is_planar(apex)
    route2 = minor_witness(g, "K4", cap) is None and minor_witness(g, "K23", cap) is None
    if route1 != route2:
        raise AssertionError("outerplanarity routes disagree")
    planar = is_planar(g)
    if route1:
        if g.n >= 2 and g.m > 2 * g.n - 3:
            raise AssertionError("outerplanar graph exceeds 2n - 3 edges")
        if g.n and min(g.degrees()) > 2:
            raise AssertionError("outerplanar graph without a vertex of degree <= 2")
        return TopologyReport(planar, outerplanar=True)

    def bad(es: list[tuple[int, int]]) -> bool:
        return not is_planar(join(Graph(g.n, es), Graph(1)))

    core = _minimal_subgraph(g, bad)
    branch, paths = _chains(g.n, core)
    if len(branch) == 4:
        sub = Subdivision("K4", tuple(branch), tuple(paths))
    elif len(branch) == 2:
        a, b = branch
        mids = tuple(p[1] for p in paths)
        halves = []
        for p in paths:
            halves.append(p[:2] if p[0] == a else p[::-1][:2])
            rest = p[1:] if p[0] == a else p[::-1][1:]
            halves.append(rest[::-1])
        halves.sort(key=lambda p: (p[0] != a, mids.index(p[-1])))
        sub = Subdivision("K23", (a, b) + mids, tuple(halves))
    else:
        raise AssertionError("minimal non-outerplanar subgraph is not a K4 / K2,3 subdivision")
    if not verify_subdivision(g, sub):
        raise AssertionError("outerplanarity witness failed verification")
    return TopologyReport(planar, outerplanar=False, outer_witness=sub)


# -------------------------------------------------------- rotation systems


def face_count(g: Graph, rot: Sequence[Sequence[int]]) -> int:
    """Number of faces traced by the rotation system (orbits of darts)."""
    if len(rot) != g.n:
        raise BadRotation("one cyclic order per vertex is required")
    pos = []
    for v in range(g.n):
        if sorted(rot[v]) != list(g.neighbors(v)):
            raise BadRotation(f"rotation at {v} is not a permutation of its neighbours")
        pos.append({w: i for i, w in enumerate(rot[v])})
    if g.m == 0:
        return 1
    seen: set[tuple[int, int]] = set()
    faces = 0
    for u, v in g.edges:
        for dart in ((u, v), (v, u)):
            if dart in seen:
                continue
            faces += 1
            a, b = dart
            while (a, b) not in seen:
                seen.add((a, b))
                r = rot[b]
                a, b = b, r[(pos[b][a] + 1) % len(r)]
    return faces


def euler_check(g: Graph, rot: Sequence[Sequence[int]]) -> tuple[int, int]:
    """(faces, genus) from n - m + r = 2 - 2 genus."""
    if not is_connected(g):
        raise Disconnected("face tracing needs a connected graph")
    r = face_count(g, rot)
    twice = 2 - g.n + g.m - r
    if twice % 2 or twice < 0:
        raise AssertionError("Euler characteristic is not even")
    return r, twice // 2


def max_faces_rotation(g: Graph, budget: int = 200_000) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Rotation system with the most faces, by trying every one (the first
    neighbour of each vertex is fixed; the rest are permuted)."""
    total = 1
    for v in range(g.n):
        total *= math.factorial(max(g.degree(v) - 1, 0))
    if total > budget:
        raise CapExceeded("rotation_systems", budget, total)
    choices = []
    for v in range(g.n):
        nb = g.neighbors(v)
        if len(nb) <= 1:
            choices.append([tuple(nb)])
        else:
            choices.append([(nb[0],) + p for p in permutations(nb[1:])])
    best, arg = -1, ()
    for rot in product(*choices):
        r = face_count(g, rot)
        if r > best:
            best, arg = r, rot
    return best, arg


def genus_formula(family: str, *params: int) -> int:
    """Genus of K_n, K_{m,n} or Q_n from the closed forms."""
    if family == "complete" and len(params) == 1 and params[0] >= 3:
        (n,) = params
        return -(-((n - 3) * (n - 4)) // 12)
    if family == "complete_bipartite" and len(params) == 2 and min(params) >= 2:
        m, n = params
        return -(-((m - 2) * (n - 2)) // 4)
    if family == "hypercube" and len(params) == 1 and params[0] >= 2:
        (n,) = params
        val = 1 + Fraction(n - 4) * Fraction(2) ** (n - 3)
        if val.denominator != 1:
            raise AssertionError("hypercube genus is not an integer")
        return int(val)
    raise BadParams(f"no genus formula for {family}{params}")


# -------------------------------------------------------------- crossings


def guy_bound(n: int) -> int:
    """Upper bound for cr(K_n): one quarter of the four floor factors."""
    val = Fraction((n // 2) * ((n - 1) // 2) * ((n - 2) // 2) * ((n - 3) // 2), 4)
    return math.ceil(val) if n >= 4 else 0


def zarankiewicz_number(m: int, n: int) -> int:
    return (m // 2) * ((m - 1) // 2) * (n // 2) * ((n - 1) // 2)


@dataclass(frozen=True)
class Drawing:
    coords: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int], ...]
    crossings: int


def _orient(p, q, r) -> int:
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def _cross(a, b, c, d) -> bool:
    """Proper crossing of segments ab and cd (exact integer orientation tests)."""
    o1, o2 = _orient(a, b, c), _orient(a, b, d)
    o3, o4 = _orient(c, d, a), _orient(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def count_crossings(coords: Sequence[tuple[int, int]], edges: Sequence[tuple[int, int]]) -> int:
    total = 0
    for (a, b), (c, d) in combinations(edges, 2):
        if len({a, b, c, d}) == 4 and _cross(coords[a], coords[b], coords[c], coords[d]):
            total += 1
    return total


def zarankiewicz_drawing(m: int, n: int) -> Drawing:
    """K_{m,n} with side one at (i (-1)^i, 0) and side two at (0, j (-1)^j)."""
    coords = [(i * (-1) ** i, 0) for i in range(1, m + 1)]
    coords += [(0, j * (-1) ** j) for j in range(1, n + 1)]
    g = complete_bipartite(m, n)
    return Drawing(tuple(coords), g.edges, count_crossings(coords, g.edges))
