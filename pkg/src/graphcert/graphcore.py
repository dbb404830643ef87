"""Core graph values, representations, distances, bipartiteness and walks.

Vertices are dense integers ``0..n-1``.  ``Graph`` is simple; ``MultiGraph``
allows parallel edges and, when ``allow_loops`` is set, loops (a pseudograph).
Both are immutable once built.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from ._util import bareiss_det, component_masks
from .errors import (
    CapExceeded,
    LoopInSimple,
    NotAWalk,
    OutOfRange,
    ParallelInSimple,
    ParseError,
)

INF = math.inf

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


class Graph:
    """Simple undirected graph on ``0..n-1``."""

    __slots__ = ("n", "edges", "_adj", "_masks", "_index")
    mode = "simple"

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise OutOfRange(f"negative vertex count {n}")
        seen: dict[Edge, None] = {}
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"edge {u}-{v} outside 0..{n - 1}")
            if u == v:
                raise LoopInSimple(f"loop at {u}")
            key = _norm(u, v)
            if key in seen:
                raise ParallelInSimple(f"repeated edge {key[0]}-{key[1]}")
            seen[key] = None
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        masks = []
        for a in self._adj:
            m = 0
            for w in a:
                m |= 1 << w
            masks.append(m)
        self._masks = tuple(masks)
        self._index = {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def mask(self, v: int) -> int:
        return self._masks[v]

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self._masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    def edge_index(self, u: int, v: int) -> int:
        return self._index[_norm(u, v)]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class MultiGraph:
    """Multigraph, or pseudograph when ``allow_loops`` is true.

    A loop contributes 2 to the degree of its vertex.
    """

    __slots__ = ("n", "edges", "allow_loops", "_incident")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), allow_loops: bool = False):
        if n < 0:
            raise OutOfRange(f"negative vertex count {n}")
        out = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"edge {u}-{v} outside 0..{n - 1}")
            if u == v and not allow_loops:
                raise LoopInSimple(f"loop at {u} in a loopless multigraph")
            out.append(_norm(u, v))
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(out))
        self.allow_loops = allow_loops
        inc: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            if v != u:
                inc[v].append(i)
        self._incident = tuple(tuple(x) for x in inc)

    @property
    def mode(self) -> str:
        return "pseudo" if self.allow_loops else "multi"

    @property
    def m(self) -> int:
        return len(self.edges)

    def incident(self, v: int) -> tuple[int, ...]:
        return self._incident[v]

    def degree(self, v: int) -> int:
        return sum(2 if self.edges[i][0] == self.edges[i][1] else 1 for i in self._incident[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(v) for v in range(self.n))

    def multiplicity(self, u: int, v: int) -> int:
        key = _norm(u, v)
        return sum(1 for e in self.edges if e == key)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Distinct neighbours other than ``v`` itself."""
        out = set()
        for i in self._incident[v]:
            a, b = self.edges[i]
            w = b if a == v else a
            if w != v:
                out.add(w)
        return tuple(sorted(out))

    def underlying(self) -> Graph:
        return Graph(self.n, {e for e in self.edges if e[0] != e[1]})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MultiGraph)
            and self.n == other.n
            and self.edges == other.edges
            and self.allow_loops == other.allow_loops
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.allow_loops))

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m}, mode={self.mode})"


AnyGraph = Graph | MultiGraph


def build(n: int, edge_list: Iterable[Sequence[int]], mode: str = "simple") -> AnyGraph:
    if mode == "simple":
        return Graph(n, edge_list)
    if mode == "multi":
        return MultiGraph(n, edge_list, allow_loops=False)
    if mode == "pseudo":
        return MultiGraph(n, edge_list, allow_loops=True)
    raise ValueError(f"unknown mode {mode!r}")


def from_labeled_edges(
    pairs: Iterable[tuple[Hashable, Hashable]],
    mode: str = "simple",
    isolated: Iterable[Hashable] = (),
) -> tuple[AnyGraph, tuple[Hashable, ...]]:
    """Build from arbitrary labels; ids follow first appearance.

    Returns the graph and the label table (``table[i]`` is the label of ``i``).
    """
    index: dict[Hashable, int] = {}
    pairs = list(pairs)
    for a, b in pairs:
        for x in (a, b):
            if x not in index:
                index[x] = len(index)
    for x in isolated:
        if x not in index:
            index[x] = len(index)
    g = build(len(index), [(index[a], index[b]) for a, b in pairs], mode)
    return g, tuple(index)


# ---------------------------------------------------------------- edge lists

MODES = ("simple", "multi", "pseudo")


def parse_edge_list(text: str) -> AnyGraph:
    """Parse ``n m mode`` followed by ``m`` lines ``u v``; ``#`` lines are comments."""
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    expected = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 3 or parts[2] not in MODES:
                raise ParseError(lineno, "header must be 'n m mode' with mode in simple|multi|pseudo")
            try:
                n, expected = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(lineno, "n and m must be integers") from None
            if n < 0 or expected < 0:
                raise ParseError(lineno, "n and m must be non-negative")
            header = (n, expected, parts[2])
            continue
        if len(parts) != 2:
            raise ParseError(lineno, "edge line must be 'u v'")
        if len(edges) >= expected:
            raise ParseError(lineno, f"more than {expected} edge lines")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, "endpoints must be integers") from None
        if not (0 <= u < header[0] and 0 <= v < header[0]):
            raise ParseError(lineno, f"endpoint outside 0..{header[0] - 1}")
        if u == v and header[2] != "pseudo":
            raise ParseError(lineno, f"loop at {u} in a {header[2]} graph")
        if header[2] == "simple":
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(lineno, f"parallel edge {u} {v} in a simple graph")
            seen.add(key)
        edges.append((u, v))
    if header is None:
        raise ParseError(1, "missing header")
    if len(edges) != expected:
        raise ParseError(len(text.splitlines()) + 1, f"expected {expected} edges, found {len(edges)}")
    return build(header[0], edges, header[2])


def emit_edge_list(g: AnyGraph) -> str:
    lines = [f"{g.n} {g.m} {g.mode}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------ representations


def matrices(g: Graph) -> tuple[list[list[int]], list[list[int]]]:
    """Adjacency matrix and vertex-by-edge incidence matrix (edge order = ``g.edges``)."""
    a = [[1 if g.has_edge(i, j) else 0 for j in range(g.n)] for i in range(g.n)]
    b = [[0] * g.m for _ in range(g.n)]
    for j, (u, v) in enumerate(g.edges):
        b[u][j] = 1
        b[v][j] = 1
    return a, b


@dataclass(frozen=True)
class DegreeView:
    degrees: tuple[int, ...]
    delta: int
    Delta: int
    neighborhoods: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...] = field(repr=False)

    def neighborhood(self, s: Iterable[int]) -> tuple[int, ...]:
        """N(S): vertices outside S adjacent to some vertex of S."""
        s = set(s)
        out = set()
        for v in s:
            out.update(self.neighborhoods[v])
        return tuple(sorted(out - s))

    def boundary(self, s: Iterable[int]) -> tuple[Edge, ...]:
        """Edges with exactly one endpoint in S."""
        s = set(s)
        return tuple(e for e in self.edges if (e[0] in s) != (e[1] in s))


def degree_profile(g: AnyGraph) -> DegreeView:
    d = g.degrees()
    return DegreeView(
        degrees=d,
        delta=min(d) if d else 0,
        Delta=max(d) if d else 0,
        neighborhoods=tuple(g.neighbors(v) for v in range(g.n)),
        edges=g.edges,
    )


# ------------------------------------------------------------------- walks

WALK_KINDS = ("not-a-walk", "walk", "closed-walk", "trail", "path", "cycle", "simple-cycle")


@dataclass(frozen=True)
class WalkClass:
    kind: str
    length: int
    closed: bool = False
    trail: bool = False
    simple: bool = False


def classify_walk(g: Graph, seq: Sequence[int], strict: bool = True) -> WalkClass:
    """Classify a vertex sequence as the most specific walk type it satisfies.

    With ``strict`` a non-edge step raises ``NotAWalk``; otherwise the result
    kind is ``not-a-walk``.
    """
    if not seq:
        raise ValueError("empty sequence")
    for v in seq:
        if not 0 <= v < g.n:
            raise OutOfRange(f"vertex {v}")
    k = len(seq) - 1
    for a, b in zip(seq, seq[1:]):
        if not g.has_edge(a, b):
            if strict:
                raise NotAWalk(f"{a}-{b} is not an edge")
            return WalkClass("not-a-walk", k)
    used = [_norm(a, b) for a, b in zip(seq, seq[1:])]
    trail = len(set(used)) == len(used)
    closed = k >= 1 and seq[0] == seq[-1]
    if not closed:
        simple = len(set(seq)) == len(seq)
        kind = "path" if simple else ("trail" if trail else "walk")
        return WalkClass(kind, k, False, trail, simple)
    simple = len(set(seq[:-1])) == k
    if trail and simple and k >= 3:
        return WalkClass("simple-cycle", k, True, True, True)
    if trail:
        return WalkClass("cycle", k, True, True, False)
    return WalkClass("closed-walk", k, True, False, False)


def reduce_to_simple_path(g: Graph, seq: Sequence[int]) -> list[int]:
    """Erase loops from a walk, keeping a subsequence that is a simple path."""
    classify_walk(g, seq)
    out: list[int] = []
    pos: dict[int, int] = {}
    for v in seq:
        if v in pos:
            cut = pos[v] + 1
            for w in out[cut:]:
                del pos[w]
            del out[cut:]
        else:
            pos[v] = len(out)
            out.append(v)
    return out


def extract_odd_cycle(g: Graph, seq: Sequence[int]) -> list[int]:
    """From an odd closed walk, return an odd simple cycle (closed vertex list).

    Any repeated vertex splits the walk into two closed walks whose lengths
    sum to an odd number, so one of them is odd; recurse on that one.
    """
    info = classify_walk(g, seq)
    if not info.closed or info.length % 2 == 0:
        raise ValueError("need a closed walk of odd length")
    w = list(seq)
    while True:
        k = len(w) - 1
        last: dict[int, int] = {}
        split = None
        for j in range(k + 1):
            v = w[j]
            if v in last and not (last[v] == 0 and j == k):
                split = (last[v], j)
                break
            last[v] = j
        if split is None:
            return w
        i, j = split
        inner = w[i : j + 1]
        outer = w[: i + 1] + w[j + 1 :]
        w = inner if (len(inner) - 1) % 2 == 1 else outer


# ----------------------------------------------------------------- metrics


def bfs_distances(g: AnyGraph, source: int) -> list[float]:
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        for w in g.neighbors(u):
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def components(g: AnyGraph) -> list[tuple[int, ...]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    q.append(w)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: AnyGraph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


@dataclass(frozen=True)
class Metrics:
    dist: tuple[tuple[float, ...], ...]
    ecc: tuple[float, ...]
    radius: float
    diameter: float
    center: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    component_count: int
    cyclomatic: int


def metrics(g: AnyGraph) -> Metrics:
    dist = tuple(tuple(bfs_distances(g, s)) for s in range(g.n))
    ecc = tuple(max(row) for row in dist)
    comps = tuple(components(g))
    c = len(comps)
    if g.n > 0 and c == 1:
        r = min(ecc)
        d = max(ecc)
        center = tuple(v for v in range(g.n) if ecc[v] == r)
    else:
        r = d = INF
        center = ()
    return Metrics(dist, ecc, r, d, center, comps, c, g.m - g.n + c)


# ----------------------------------------------------------- bipartiteness


@dataclass(frozen=True)
class Bipartition:
    """Either ``parts`` (a proper 2-colouring) or ``odd_cycle`` (closed list)."""

    bipartite: bool
    parts: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    odd_cycle: tuple[int, ...] | None = None


def bipartition(g: AnyGraph) -> Bipartition:
    side = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.neighbors(u):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    q.append(w)
                elif side[w] == side[u]:
                    return Bipartition(False, odd_cycle=_tree_cycle(u, w, parent, depth))
    v1 = tuple(v for v in range(g.n) if side[v] == 0)
    v2 = tuple(v for v in range(g.n) if side[v] == 1)
    return Bipartition(True, parts=(v1, v2))


def _tree_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    # u, w share a BFS layer parity and are adjacent; climb to their common ancestor.
    a, b = [u], [w]
    x, y = u, w
    while depth[x] > depth[y]:
        x = parent[x]
        a.append(x)
    while depth[y] > depth[x]:
        y = parent[y]
        b.append(y)
    while x != y:
        x, y = parent[x], parent[y]
        a.append(x)
        b.append(y)
    cyc = a + b[-2::-1] + [u]
    return tuple(cyc)


# ---------------------------------------------------- total unimodularity


@dataclass(frozen=True)
class TUVerdict:
    totally_unimodular: bool
    rows: tuple[int, ...] = ()
    cols: tuple[int, ...] = ()
    det: int = 0
    exhaustive: bool = True
    minors_checked: int = 0


def _minor_count(n: int, m: int, cap: int) -> int:
    return sum(math.comb(n, k) * math.comb(m, k) for k in range(1, cap + 1))


def unimodularity_check(
    g: Graph,
    size_cap: int | None = None,
    budget: int = 200_000,
    seed: int = 0,
) -> TUVerdict:
    """Check that every square minor of the incidence matrix is 0 or +-1.

    Every minor up to ``size_cap`` is enumerated when the count fits ``budget``.
    Above the budget, graphs with more than 10 edges are sampled (seeded) and
    the odd-cycle minor is always included; smaller ones raise ``CapExceeded``.
    """
    _, b = matrices(g)
    top = min(g.n, g.m) if size_cap is None else min(size_cap, g.n, g.m)
    total = _minor_count(g.n, g.m, top)
    if total <= budget:
        checked = 0
        for k in range(1, top + 1):
            for rows in combinations(range(g.n), k):
                for cols in combinations(range(g.m), k):
                    checked += 1
                    det = bareiss_det([[b[r][c] for c in cols] for r in rows])
                    if det not in (-1, 0, 1):
                        return TUVerdict(False, rows, cols, det, True, checked)
        return TUVerdict(True, exhaustive=True, minors_checked=checked)
    if g.m <= 10:
        raise CapExceeded("minors", budget, total)
    bp = bipartition(g)
    if not bp.bipartite:
        cyc = bp.odd_cycle
        rows = tuple(sorted(set(cyc[:-1])))
        cols = tuple(sorted(g.edge_index(a, c) for a, c in zip(cyc, cyc[1:])))
        if len(rows) <= top:
            det = bareiss_det([[b[r][c] for c in cols] for r in rows])
            return TUVerdict(False, rows, cols, det, False, 1)
    rng = random.Random(seed)
    for i in range(budget):
        k = rng.randint(1, top)
        rows = tuple(sorted(rng.sample(range(g.n), k)))
        cols = tuple(sorted(rng.sample(range(g.m), k)))
        det = bareiss_det([[b[r][c] for c in cols] for r in rows])
        if det not in (-1, 0, 1):
            return TUVerdict(False, rows, cols, det, False, i + 1)
    return TUVerdict(True, exhaustive=False, minors_checked=budget)


# ------------------------------------------------ large bipartite subgraph


def large_bipartite_subgraph(g: Graph) -> tuple[Graph, tuple[tuple[int, ...], tuple[int, ...]]]:
    """Spanning bipartite subgraph keeping at least half of every degree.

    Local search: while some vertex has fewer than half of its edges crossing
    the cut, move it to the other side.  Each move strictly increases the
    number of crossing edges, so the loop terminates.
    """
    side = [0] * g.n
    moved = True
    while moved:
        moved = False
        for v in range(g.n):
            crossing = sum(1 for w in g.neighbors(v) if side[w] != side[v])
            if 2 * crossing < g.degree(v):
                side[v] ^= 1
                moved = True
                break
    h = Graph(g.n, [(u, v) for u, v in g.edges if side[u] != side[v]])
    parts = (
        tuple(v for v in range(g.n) if side[v] == 0),
        tuple(v for v in range(g.n) if side[v] == 1),
    )
    return h, parts


# ------------------------------------------------------------- enumeration


def enumeration_counts(n: int) -> tuple[int, int]:
    """Labeled graphs on n vertices and those with every degree even."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return 2 ** math.comb(n, 2), 2 ** math.comb(n - 1, 2)


# ----------------------------------------------------------------- helpers


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph relabelled to ``0..k-1``; also returns the original ids."""
    keep = tuple(sorted(set(vertices)))
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(keep), edges), keep


def remove_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    s = set(s)
    return induced_subgraph(g, [v for v in range(g.n) if v not in s])


def component_count_without(g: Graph, removed: Iterable[int] = ()) -> int:
    alive = (1 << g.n) - 1
    for v in removed:
        alive &= ~(1 << v)
    return len(component_masks(g.masks, alive))


def is_forest(n: int, edges: Iterable[Edge]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        a, b = find(u), find(v)
        if a == b:
            return False
        parent[a] = b
    return True


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2
