"""Vertex, edge and total colorings.

Colors are the integers 1..k.  Edge colors are listed in ``g.edges`` order;
total colorings list the vertices first and then the edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from ._util import popcount
from .errors import BadParams, CapExceeded, NotPlanar, SwapExhausted, WrongClass
from .graphcore import Graph, bipartition, is_complete, is_connected
from .matching import complement_graph, max_independent_set
from .transform import line_graph, total_graph

TARGETS = ("vertices", "edges", "total")


@dataclass(frozen=True)
class ColorAssignment:
    target: str
    colors: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(set(self.colors))

    def vertex_colors(self, g: Graph) -> tuple[int, ...]:
        return self.colors[: g.n] if self.target != "edges" else ()

    def edge_colors(self, g: Graph) -> tuple[int, ...]:
        if self.target == "edges":
            return self.colors
        return self.colors[g.n :] if self.target == "total" else ()


def is_proper(g: Graph, ca: ColorAssignment) -> bool:
    """Standalone check of a coloring against the definition for its target."""
    if any(c < 1 for c in ca.colors):
        return False
    if ca.target == "vertices":
        return len(ca.colors) == g.n and all(ca.colors[u] != ca.colors[v] for u, v in g.edges)
    if ca.target == "edges":
        if len(ca.colors) != g.m:
            return False
        return _edges_proper(g, ca.colors)
    if ca.target == "total":
        if len(ca.colors) != g.n + g.m:
            return False
        vc, ec = ca.colors[: g.n], ca.colors[g.n :]
        if any(vc[u] == vc[v] for u, v in g.edges):
            return False
        if not _edges_proper(g, ec):
            return False
        return all(ec[i] not in (vc[u], vc[v]) for i, (u, v) in enumerate(g.edges))
    return False


def _edges_proper(g: Graph, ec: Sequence[int]) -> bool:
    seen: set[tuple[int, int]] = set()
    for i, (u, v) in enumerate(g.edges):
        for x in (u, v):
            if (x, ec[i]) in seen:
                return False
            seen.add((x, ec[i]))
    return True


def missing_colors(g: Graph, ec: Sequence[int | None], k: int) -> tuple[frozenset[int], ...]:
    """C(v): the colors of 1..k not used on any edge at v."""
    used: list[set[int]] = [set() for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        if ec[i]:
            used[u].add(ec[i])
            used[v].add(ec[i])
    return tuple(frozenset(range(1, k + 1)) - used[v] for v in range(g.n))


# ------------------------------------------------------------------ greedy


def degeneracy_order(g: Graph) -> tuple[list[int], int]:
    """Removal order by repeated least-degree deletion (ties to the least id),
    and the degeneracy max over H of delta(H)."""
    alive = set(range(g.n))
    deg = list(g.degrees())
    order, best = [], 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        best = max(best, deg[v])
        order.append(v)
        alive.discard(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
    return order, best


def greedy_color(g: Graph, order: str | Sequence[int] = "given") -> ColorAssignment:
    """Give each vertex in turn the least color absent from its colored neighbours.

    ``order`` is "given" (ids ascending), "welsh_powell" (degree
    non-increasing), "smallest_last", or an explicit vertex sequence.
    """
    if isinstance(order, str):
        if order == "given":
            seq = list(range(g.n))
        elif order == "welsh_powell":
            seq = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
        elif order == "smallest_last":
            seq = degeneracy_order(g)[0][::-1]
        else:
            raise BadParams(f"unknown order {order!r}")
    else:
        seq = list(order)
        if sorted(seq) != list(range(g.n)):
            raise BadParams("order must list every vertex once")
    col = [0] * g.n
    for v in seq:
        taken = {col[w] for w in g.neighbors(v)}
        c = 1
        while c in taken:
            c += 1
        col[v] = c
    return ColorAssignment("vertices", tuple(col))


def welsh_powell_bound(g: Graph) -> int:
    d = sorted(g.degrees(), reverse=True)
    return 1 + max((min(x, i) for i, x in enumerate(d)), default=-1) if d else 0


# ------------------------------------------------------------------- exact


def _k_color(masks: Sequence[int], k: int, class_cap: int | None = None) -> list[int] | None:
    """Backtracking k-coloring of a conflict graph (DSATUR vertex choice).

    ``class_cap`` bounds the size of every color class and prunes branches
    whose remaining vertices cannot fit.
    """
    n = len(masks)
    col = [0] * n
    cls = [0] * (k + 1)
    size = [0] * (k + 1)

    def rec(done: int, used: int) -> bool:
        if done == n:
            return True
        if class_cap is not None and n - done > sum(class_cap - size[c] for c in range(1, k + 1)):
            return False
        best, key = -1, None
        for v in range(n):
            if col[v]:
                continue
            sat = sum(1 for c in range(1, used + 1) if cls[c] & masks[v])
            kk = (sat, popcount(masks[v]), -v)
            if key is None or kk > key:
                best, key = v, kk
        v = best
        for c in range(1, min(k, used + 1) + 1):
            if cls[c] & masks[v]:
                continue
            if class_cap is not None and size[c] >= class_cap:
                continue
            col[v] = c
            cls[c] |= 1 << v
            size[c] += 1
            if rec(done + 1, max(used, c)):
                return True
            col[v] = 0
            cls[c] &= ~(1 << v)
            size[c] -= 1
        return False

    return col if rec(0, 0) else None


def _clique_lb(g: Graph) -> int:
    return popcount(max_independent_set(complement_graph(g))) if g.n else 0


def is_odd_cycle(g: Graph) -> bool:
    return g.n >= 3 and g.n % 2 == 1 and is_connected(g) and all(d == 2 for d in g.degrees())


def chromatic_number(g: Graph, cap: int = 30) -> tuple[int, ColorAssignment]:
    """Least k admitting a proper coloring, searched upward from the clique number."""
    if g.n > cap:
        raise CapExceeded("chromatic_n", cap, g.n)
    if g.n == 0:
        return 0, ColorAssignment("vertices", ())
    omega = _clique_lb(g)
    k = max(omega, 1)
    while True:
        col = _k_color(g.masks, k)
        if col is not None:
            break
        k += 1
    ca = ColorAssignment("vertices", tuple(col))
    delta = max(g.degrees())
    alpha = popcount(max_independent_set(g))
    if not (omega <= k <= delta + 1):
        raise AssertionError("clique / max-degree bounds violated")
    if not (g.n <= k * alpha and k <= g.n - alpha + 1):
        raise AssertionError("independence bounds violated")
    if is_connected(g) and not is_complete(g) and not is_odd_cycle(g) and k > delta:
        raise AssertionError("Brooks bound violated")
    return k, ca


# ---------------------------------------------------------------- planar 5


def _kempe_component(adj: list[set[int]], col: list[int], start: int, a: int, b: int) -> set[int]:
    comp = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in comp and col[y] in (a, b):
                comp.add(y)
                stack.append(y)
    return comp


def five_color_planar(g: Graph, verify: bool = False) -> ColorAssignment:
    """Remove a vertex of degree <= 5 until nothing is left, then add the
    vertices back in reverse order.  A vertex whose neighbours use all five
    colors frees one by swapping a two-colored Kempe component; every color
    pair is tried."""
    if verify:
        from .planar import is_planar

        if not is_planar(g):
            raise NotPlanar("input is not planar")
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    alive = set(range(g.n))
    deg = list(g.degrees())
    stack = []
    while alive:
        v = min((x for x in alive if deg[x] <= 5), default=None)
        if v is None:
            raise NotPlanar("no vertex of degree at most 5 remains")
        stack.append(v)
        alive.discard(v)
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
    col = [0] * g.n
    placed: set[int] = set()
    live_adj: list[set[int]] = [set() for _ in range(g.n)]
    for v in reversed(stack):
        nb = [w for w in adj[v] if w in placed]
        for w in nb:
            live_adj[w].add(v)
            live_adj[v].add(w)
        free = sorted(set(range(1, 6)) - {col[w] for w in nb})
        if not free:
            free = _kempe_free(live_adj, col, v, nb)
        col[v] = free[0]
        placed.add(v)
    return ColorAssignment("vertices", tuple(col))


def _kempe_free(adj: list[set[int]], col: list[int], v: int, nb: list[int]) -> list[int]:
    for a, b in combinations(range(1, 6), 2):
        xa = [w for w in nb if col[w] == a]
        xb = [w for w in nb if col[w] == b]
        if len(xa) != 1:
            continue
        comp = _kempe_component(adj, col, xa[0], a, b)
        if comp.isdisjoint(xb):
            for x in comp:
                col[x] = b if col[x] == a else a
            return [a]
    raise SwapExhausted(f"no Kempe swap frees a color at vertex {v}")


# ------------------------------------------------------------------- edges


EDGE_SCHEMES = ("konig_bipartite", "complete_rotation", "vizing")


class _EdgeState:
    """Partial edge coloring with per-vertex color -> neighbour maps."""

    def __init__(self, n: int):
        self.at: list[dict[int, int]] = [{} for _ in range(n)]
        self.col: dict[tuple[int, int], int] = {}

    def get(self, u: int, v: int) -> int | None:
        return self.col.get((min(u, v), max(u, v)))

    def set(self, u: int, v: int, c: int | None) -> None:
        key = (min(u, v), max(u, v))
        old = self.col.pop(key, None)
        if old is not None:
            # during a fan rotation the entry may already belong to another edge
            if self.at[u].get(old) == v:
                del self.at[u][old]
            if self.at[v].get(old) == u:
                del self.at[v][old]
        if c is not None:
            self.col[key] = c
            self.at[u][c] = v
            self.at[v][c] = u

    def free(self, v: int, k: int) -> int:
        return next(c for c in range(1, k + 1) if c not in self.at[v])

    def is_free(self, v: int, c: int) -> bool:
        return c not in self.at[v]

    def path(self, start: int, a: int, b: int) -> list[int]:
        """Maximal path from ``start`` alternating colors a, b (starting with a)."""
        p = [start]
        c, other = a, b
        while c in self.at[p[-1]]:
            nxt = self.at[p[-1]][c]
            if nxt == p[0] and len(p) > 1:
                break
            p.append(nxt)
            c, other = other, c
        return p

    def flip(self, p: list[int], a: int, b: int) -> None:
        cols = [self.get(x, y) for x, y in zip(p, p[1:])]
        for x, y in zip(p, p[1:]):
            self.set(x, y, None)
        for (x, y), c in zip(zip(p, p[1:]), cols):
            self.set(x, y, b if c == a else a)


def _konig_edges(g: Graph) -> tuple[int, ...]:
    bp = bipartition(g)
    if not bp.bipartite:
        raise WrongClass("konig_bipartite needs a bipartite graph")
    k = max(g.degrees(), default=0)
    st = _EdgeState(g.n)
    for u, v in g.edges:
        a = st.free(u, k)
        b = st.free(v, k)
        if not st.is_free(v, a):
            # the a/b path from v cannot reach u in a bipartite graph
            st.flip(st.path(v, a, b), a, b)
        st.set(u, v, a)
    return tuple(st.get(u, v) for u, v in g.edges)


def _rotation_edges(g: Graph) -> tuple[int, ...]:
    if not is_complete(g) or g.n < 2:
        raise WrongClass("complete_rotation needs a complete graph on at least 2 vertices")
    n = g.n
    even = n if n % 2 == 0 else n + 1  # odd n: add a dummy vertex, drop its edges
    l2 = even - 1
    color: dict[tuple[int, int], int] = {}
    for k in range(1, even):
        pairs = [(0, k)] + [
            ((k - i - 1) % l2 + 1, (k + i - 1) % l2 + 1) for i in range(1, even // 2)
        ]
        for a, b in pairs:
            color[(min(a, b), max(a, b))] = k
    if n % 2:
        # the dummy is vertex 0 of K_{n+1}; shift real vertices down by one
        return tuple(color[(u + 1, v + 1)] for u, v in g.edges)
    return tuple(color[e] for e in g.edges)


def _vizing_edges(g: Graph) -> tuple[int, ...]:
    """Insert edges one at a time with the fan / Kempe-path recoloring step.

    Least colors are taken wherever a choice exists.
    """
    k = max(g.degrees(), default=0) + 1
    st = _EdgeState(g.n)
    for u, v in g.edges:
        fan = [v]
        in_fan = {v}
        while True:
            last = fan[-1]
            nxt = None
            for c in range(1, k + 1):
                if st.is_free(last, c) and c in st.at[u]:
                    w = st.at[u][c]
                    if w not in in_fan:
                        nxt = w
                        break
            if nxt is None:
                break
            fan.append(nxt)
            in_fan.add(nxt)
        c = st.free(u, k)
        d = st.free(fan[-1], k)
        if not st.is_free(u, d):
            st.flip(st.path(u, d, c), d, c)
        # longest fan prefix still valid after the flip that ends at a d-free vertex
        w_idx = None
        for i, f in enumerate(fan):
            if i > 0:
                prev_ok = st.get(u, f) is not None and st.is_free(fan[i - 1], st.get(u, f))
                if not prev_ok:
                    break
            if st.is_free(f, d):
                w_idx = i
                break
        if w_idx is None:
            raise AssertionError("fan step found no d-free vertex")
        for i in range(w_idx):
            st.set(u, fan[i], st.get(u, fan[i + 1]))
        st.set(u, fan[w_idx], None)
        st.set(u, fan[w_idx], d)
    return tuple(st.get(a, b) for a, b in g.edges)


def edge_color(g: Graph, scheme: str = "vizing") -> ColorAssignment:
    if scheme == "konig_bipartite":
        cols = _konig_edges(g)
    elif scheme == "complete_rotation":
        cols = _rotation_edges(g)
    elif scheme == "vizing":
        cols = _vizing_edges(g)
    else:
        raise BadParams(f"unknown edge-coloring scheme {scheme!r}")
    ca = ColorAssignment("edges", cols)
    if not is_proper(g, ca):
        raise AssertionError(f"{scheme} produced an improper edge coloring")
    return ca


def is_overfull(g: Graph) -> bool:
    return g.m > (g.n // 2) * max(g.degrees(), default=0)


@dataclass(frozen=True)
class ChromaticIndex:
    value: int
    klass: int
    overfull: bool
    coloring: ColorAssignment


def chromatic_index(g: Graph, cap: int = 40) -> ChromaticIndex:
    """Exact chi' by searching Delta-colorings of the line graph.

    Every color class is a matching, so at most n // 2 edges share a color;
    that bound prunes the search.
    """
    if g.m > cap:
        raise CapExceeded("chromatic_index_m", cap, g.m)
    if g.m == 0:
        return ChromaticIndex(0, 1, False, ColorAssignment("edges", ()))
    delta = max(g.degrees())
    lg = line_graph(g)
    col = _k_color(lg.masks, delta, class_cap=g.n // 2)
    if col is None:
        value = delta + 1
        ca = edge_color(g, "vizing")
    else:
        value = delta
        ca = ColorAssignment("edges", tuple(col))
    over = is_overfull(g)
    if over and value == delta:
        raise AssertionError("overfull graph colored with Delta colors")
    degs = set(g.degrees())
    if g.n % 2 and len(degs) == 1 and delta >= 1 and value != delta + 1:
        raise AssertionError("regular graph of odd order must be class 2")
    if not is_proper(g, ca) or ca.k > value:
        raise AssertionError("edge coloring check failed")
    return ChromaticIndex(value, 1 if value == delta else 2, over, ca)


# ------------------------------------------------------------------- total


TOTAL_SCHEMES = ("exact", "bipartite_plus2", "complete", "complete_bipartite")


def total_color(g: Graph, scheme: str = "exact", cap: int = 30) -> ColorAssignment:
    if scheme == "exact":
        ca = _total_exact(g, cap)
    elif scheme == "bipartite_plus2":
        ca = _total_bipartite(g)
    elif scheme == "complete":
        ca = _total_complete(g)
    elif scheme == "complete_bipartite":
        ca = _total_complete_bipartite(g)
    else:
        raise BadParams(f"unknown total-coloring scheme {scheme!r}")
    if not is_proper(g, ca):
        raise AssertionError(f"{scheme} produced an improper total coloring")
    return ca


def total_chromatic_number(g: Graph, cap: int = 30) -> int:
    return _total_exact(g, cap).k


def _total_exact(g: Graph, cap: int) -> ColorAssignment:
    t = total_graph(g)
    k, ca = chromatic_number(t, cap)
    if g.n == 0:
        return ColorAssignment("total", ())
    delta = max(g.degrees())
    chi, _ = chromatic_number(g, cap)
    chi_e = chromatic_index(g).value if g.m else 0
    if not (delta + 1 <= k <= chi + chi_e):
        raise AssertionError("total coloring bounds violated")
    if k == chi + chi_e and g.n >= 2 and not bipartition(g).bipartite:
        raise AssertionError("chi'' = chi + chi' on a non-bipartite graph")
    return ColorAssignment("total", ca.colors)


def _total_bipartite(g: Graph) -> ColorAssignment:
    bp = bipartition(g)
    if not bp.bipartite:
        raise WrongClass("bipartite_plus2 needs a bipartite graph")
    delta = max(g.degrees(), default=0)
    ec = _konig_edges(g)
    side = set(bp.parts[0])
    vc = tuple(delta + 1 if v in side else delta + 2 for v in range(g.n))
    return ColorAssignment("total", vc + ec)


def _total_complete(g: Graph) -> ColorAssignment:
    """K_n, n odd: edge ij gets (i + j) mod n and vertex i the color 2i mod n
    missing there.  n even: color K_{n+1} that way and drop one vertex."""
    if not is_complete(g) or g.n < 1:
        raise WrongClass("complete scheme needs a complete graph")
    n = g.n
    odd = n if n % 2 else n + 1
    vc = tuple((2 * i) % odd + 1 for i in range(n))
    ec = tuple((u + v) % odd + 1 for u, v in g.edges)
    return ColorAssignment("total", vc + ec)


def _total_complete_bipartite(g: Graph) -> ColorAssignment:
    """K_{m,n} with m < n: edge u_i v_j gets (i + j - 1) mod n (n when
    i + j = n + 1), vertices u_i get n + 1 and each v_j a color missing at it.
    Equal sides fall back to the bipartite Delta + 2 construction."""
    bp = bipartition(g)
    if not bp.bipartite or g.n < 2:
        raise WrongClass("complete_bipartite scheme needs K_{m,n}")
    a, b = bp.parts
    if g.m != len(a) * len(b):
        raise WrongClass("complete_bipartite scheme needs K_{m,n}")
    if len(a) == len(b):
        return _total_bipartite(g)
    us, vs = (a, b) if len(a) < len(b) else (b, a)
    n = len(vs)
    vc = [0] * g.n
    ec_map: dict[tuple[int, int], int] = {}
    for i, u in enumerate(us, start=1):
        vc[u] = n + 1
        for j, v in enumerate(vs, start=1):
            ec_map[(min(u, v), max(u, v))] = n if i + j == n + 1 else (i + j - 1) % n
    for v in vs:
        used = {ec_map[(min(u, v), max(u, v))] for u in us}
        vc[v] = min(set(range(1, n + 1)) - used)
    return ColorAssignment("total", tuple(vc) + tuple(ec_map[e] for e in g.edges))


# -------------------------------------------------------- Nordhaus-Gaddum


@dataclass(frozen=True)
class NordhausGaddum:
    n: int
    chi: int
    chi_complement: int
    sum_lower: bool
    sum_upper: bool
    product_lower: bool
    product_upper: bool

    @property
    def all_hold(self) -> bool:
        return self.sum_lower and self.sum_upper and self.product_lower and self.product_upper


def nordhaus_gaddum_check(g: Graph, cap: int = 30) -> NordhausGaddum:
    """2 sqrt(n) <= chi + chi_bar <= n + 1 and n <= chi chi_bar <= ((n + 1) / 2)^2,
    compared in integers."""
    n = g.n
    a, _ = chromatic_number(g, cap)
    b, _ = chromatic_number(complement_graph(g), cap)
    s, p = a + b, a * b
    r = NordhausGaddum(n, a, b, s * s >= 4 * n, s <= n + 1, p >= n, 4 * p <= (n + 1) ** 2)
    if not r.all_hold:
        raise AssertionError("Nordhaus-Gaddum bound violated")
    return r
