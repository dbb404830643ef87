"""Vertex, edge and total colorings."""

from __future__ import annotations

import itertools
import math
import random

import networkx as nx
import pytest

from conftest import atlas, random_bipartite, random_graph
from graphcert.coloring import (
    ColorAssignment,
    chromatic_index,
    chromatic_number,
    degeneracy_order,
    edge_color,
    five_color_planar,
    greedy_color,
    is_overfull,
    is_proper,
    missing_colors,
    nordhaus_gaddum_check,
    total_chromatic_number,
    total_color,
    welsh_powell_bound,
)
from graphcert.errors import CapExceeded, NotPlanar, WrongClass
from graphcert.families import (
    complete,
    complete_bipartite,
    cycle,
    dodecahedron,
    grotzsch,
    hypercube,
    icosahedron,
    octahedron,
    path,
    petersen,
    wheel,
)
from graphcert.graphcore import Graph, bipartition, is_complete, is_connected
from graphcert.transform import line_graph, mycielski, total_graph

# Stand-in for the greedy-order figure: 8 vertices, omega = 3.  The printed
# order v1 v4 v5 v6 v8 v7 v3 v2 yields 3 colors; the identity order yields 4.
GREEDY_FIG = Graph(8, [(0, 1), (0, 4), (1, 3), (1, 4), (2, 3), (2, 6), (3, 5), (3, 6), (4, 7), (5, 7), (6, 7)])
GREEDY_ORDER = [0, 3, 4, 5, 7, 6, 2, 1]
# Stand-in for the bipartite figure: a_i = 2i, b_i = 2i + 1, a_i ~ b_j for i != j.
# Greedy in id order gives the i-th pair color i + 1.
CROWN10 = Graph(10, [(2 * i, 2 * j + 1) for i in range(5) for j in range(5) if i != j])


def conflict_color(n: int, pairs, k: int) -> list[int] | None:
    """Plain backtracking k-coloring of an abstract conflict graph."""
    adj = [set() for _ in range(n)]
    for a, b in pairs:
        adj[a].add(b)
        adj[b].add(a)
    col = [0] * n

    def rec(i: int, used: int) -> bool:
        if i == n:
            return True
        for c in range(1, min(k, used + 1) + 1):
            if all(col[w] != c for w in adj[i]):
                col[i] = c
                if rec(i + 1, max(used, c)):
                    return True
        col[i] = 0
        return False

    return list(col) if rec(0, 0) else None


def chi_bf(n: int, pairs) -> int:
    pairs = list(pairs)
    return next(k for k in range(0 if n == 0 else 1, n + 1) if conflict_color(n, pairs, k) is not None) if n else 0


def edge_conflicts(g: Graph):
    return [(i, j) for i, j in itertools.combinations(range(g.m), 2) if set(g.edges[i]) & set(g.edges[j])]


def total_conflicts(g: Graph):
    out = list(g.edges)
    out += [(g.n + i, g.n + j) for i, j in edge_conflicts(g)]
    out += [(v, g.n + i) for i, e in enumerate(g.edges) for v in e]
    return out


def proper_bf(g: Graph, ca: ColorAssignment) -> bool:
    if ca.target == "vertices":
        n, pairs = g.n, g.edges
    elif ca.target == "edges":
        n, pairs = g.m, edge_conflicts(g)
    else:
        n, pairs = g.n + g.m, total_conflicts(g)
    return len(ca.colors) == n and all(c >= 1 for c in ca.colors) and all(ca.colors[a] != ca.colors[b] for a, b in pairs)


def degeneracy_bf(g: Graph) -> int:
    best = 0
    for k in range(1, g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            ss = set(s)
            best = max(best, min(sum(w in ss for w in g.neighbors(v)) for v in s))
    return best


def delta(g: Graph) -> int:
    return max(g.degrees(), default=0)


def is_triangle_free(g: Graph) -> bool:
    return not any(g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c) for a, b, c in itertools.combinations(range(g.n), 3))


def test_checker_agrees_with_reference():
    rng = random.Random(1)
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 6), 0.5)
        for target, size in (("vertices", g.n), ("edges", g.m), ("total", g.n + g.m)):
            ca = ColorAssignment(target, tuple(rng.randint(1, 3) for _ in range(size)))
            assert is_proper(g, ca) == proper_bf(g, ca)


def test_greedy_examples():
    assert greedy_color(GREEDY_FIG, GREEDY_ORDER).k == 3
    assert greedy_color(GREEDY_FIG).k == 4
    assert chromatic_number(GREEDY_FIG)[0] == 3
    ca = greedy_color(CROWN10)
    assert ca.k == 5 and ca.colors == (1, 1, 2, 2, 3, 3, 4, 4, 5, 5)
    assert bipartition(CROWN10).bipartite and chromatic_number(CROWN10)[0] == 2
    assert greedy_color(Graph(1)).colors == (1,)


def test_greedy_bounds_exhaustive():
    for g in atlas(7):
        d = degeneracy_bf(g) if g.n <= 6 else degeneracy_order(g)[1]
        if g.n <= 6:
            assert degeneracy_order(g)[1] == d
        for order in ("given", "welsh_powell", "smallest_last"):
            ca = greedy_color(g, order)
            assert proper_bf(g, ca) and ca.k <= delta(g) + 1
        assert greedy_color(g, "welsh_powell").k <= welsh_powell_bound(g)
        assert greedy_color(g, "smallest_last").k <= 1 + d


def test_welsh_powell_bound_formula():
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)])
    # sorted degrees 4,2,2,1,1 -> max(min(4,0), min(2,1), min(2,2), min(1,3), min(1,4)) = 2
    assert welsh_powell_bound(g) == 3


def test_chromatic_examples():
    assert chromatic_number(cycle(5))[0] == 3
    assert chromatic_number(cycle(4))[0] == 2
    m = mycielski(cycle(5))
    assert chromatic_number(m)[0] == 4 and is_triangle_free(m)
    assert chromatic_number(grotzsch())[0] == 4
    assert chromatic_number(petersen())[0] == 3
    assert chromatic_number(Graph(0))[0] == 0
    with pytest.raises(CapExceeded):
        chromatic_number(cycle(40))


def test_chromatic_exhaustive():
    for g in atlas(7):
        k, ca = chromatic_number(g)
        assert proper_bf(g, ca) and ca.k == k
        if g.n <= 6:
            assert k == chi_bf(g.n, g.edges)
        else:
            assert conflict_color(g.n, g.edges, k - 1) is None
        if is_connected(g) and not is_complete(g) and not (g.n % 2 and g.m == g.n and set(g.degrees()) == {2}):
            assert k <= delta(g)


def test_mycielski_raises_chi():
    for g in atlas(6):
        if g.m == 0 or not is_triangle_free(g):
            continue
        k = chromatic_number(g)[0]
        if k > 3:
            continue
        m = mycielski(g)
        assert is_triangle_free(m) and chromatic_number(m)[0] == k + 1


def test_interval_graph_chi_equals_omega():
    from graphcert.families import interval_graph

    iv = [(1, 5), (1, 3), (2, 4), (2, 6), (3, 5), (4, 6)]
    g = interval_graph(iv)
    order = sorted(range(len(iv)), key=lambda i: iv[i])
    omega = max(len(c) for c in nx.find_cliques(nx.Graph(list(g.edges))))
    assert greedy_color(g, order).k == chromatic_number(g)[0] == omega


def test_five_color_solids():
    for g in (complete(4), icosahedron(), dodecahedron(), octahedron(), wheel(8)):
        ca = five_color_planar(g, verify=True)
        assert proper_bf(g, ca) and ca.k <= 5
    assert five_color_planar(complete(4)).k == 4
    assert chromatic_number(dodecahedron())[0] == 3
    assert chromatic_number(icosahedron())[0] == 4


def _random_planar(rng: random.Random, n: int) -> Graph:
    G = nx.empty_graph(n)
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    for u, v in pairs:
        G.add_edge(u, v)
        if not nx.check_planarity(G)[0]:
            G.remove_edge(u, v)
    return Graph(n, G.edges())


def test_five_color_random_maximal_planar():
    rng = random.Random(2)
    for _ in range(60):
        g = _random_planar(rng, rng.randint(5, 40))
        assert g.m == 3 * g.n - 6
        ca = five_color_planar(g)
        assert proper_bf(g, ca) and ca.k <= 5


def test_five_color_rejects_nonplanar():
    with pytest.raises(NotPlanar):
        five_color_planar(complete(5), verify=True)


def test_edge_schemes_examples():
    assert edge_color(complete(4), "complete_rotation").k == 3
    assert edge_color(complete(5), "complete_rotation").k == 5
    assert edge_color(complete_bipartite(3, 3), "konig_bipartite").k == 3
    ca = edge_color(petersen(), "vizing")
    assert ca.k == 4 and proper_bf(petersen(), ca)
    assert chromatic_index(petersen()).value == 4
    with pytest.raises(WrongClass):
        edge_color(cycle(5), "konig_bipartite")
    with pytest.raises(WrongClass):
        edge_color(cycle(5), "complete_rotation")


@pytest.mark.parametrize("n", range(2, 12))
def test_rotation_complete(n):
    ca = edge_color(complete(n), "complete_rotation")
    assert proper_bf(complete(n), ca) and ca.k == (n - 1 if n % 2 == 0 else n)


def test_konig_uses_delta():
    rng = random.Random(3)
    graphs = [hypercube(4), complete_bipartite(4, 7), path(6)]
    graphs += [random_bipartite(rng, rng.randint(1, 12), rng.randint(1, 12), 0.4) for _ in range(200)]
    for g in graphs:
        if g.m == 0:
            continue
        ca = edge_color(g, "konig_bipartite")
        assert proper_bf(g, ca) and ca.k == delta(g)


def test_vizing_random():
    rng = random.Random(4)
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 60), rng.choice([0.05, 0.1, 0.3, 0.6]))
        ca = edge_color(g, "vizing")
        assert proper_bf(g, ca) and ca.k <= delta(g) + 1


def test_missing_colors_bound():
    g = petersen()
    ca = edge_color(g, "vizing")
    for k in (4, 5):
        for v, c in enumerate(missing_colors(g, ca.colors, k)):
            assert len(c) >= k - g.degree(v)


def test_chromatic_index_examples():
    ci = chromatic_index(cycle(5))
    assert (ci.value, ci.klass, ci.overfull) == (3, 2, True)
    assert chromatic_index(complete(5)).value == 5
    ci = chromatic_index(complete_bipartite(3, 3))
    assert ci.klass == 1 and not ci.overfull
    assert is_overfull(complete(5)) and not is_overfull(complete(4))


def test_chromatic_index_exhaustive():
    for g in atlas(6):
        if g.m == 0:
            continue
        ci = chromatic_index(g)
        assert ci.value in (delta(g), delta(g) + 1)
        assert ci.value == chi_bf(g.m, edge_conflicts(g))
        assert proper_bf(g, ci.coloring) and ci.coloring.k <= ci.value
        assert (ci.klass == 1) == (ci.value == delta(g))


def test_line_and_total_graph_identities():
    for g in atlas(5):
        if g.m:
            assert chromatic_index(g).value == chromatic_number(line_graph(g))[0]
        assert total_chromatic_number(g) == chromatic_number(total_graph(g))[0]
        assert total_chromatic_number(g) == chi_bf(g.n + g.m, total_conflicts(g))


def test_total_examples():
    ca = total_color(complete_bipartite(3, 4), "complete_bipartite")
    assert proper_bf(complete_bipartite(3, 4), ca) and ca.k == 5
    assert total_chromatic_number(complete(4)) == 5
    assert total_chromatic_number(complete(5)) == 5
    for n in (1, 2, 3):
        assert total_chromatic_number(complete_bipartite(n, n)) == n + 2


@pytest.mark.parametrize("n", range(1, 10))
def test_total_complete_scheme(n):
    ca = total_color(complete(n), "complete")
    assert proper_bf(complete(n), ca) and ca.k == (n if n % 2 else n + 1)


@pytest.mark.parametrize("m,n", [(1, 2), (2, 3), (2, 5), (3, 4), (3, 3), (4, 4), (3, 7)])
def test_total_complete_bipartite_scheme(m, n):
    g = complete_bipartite(m, n)
    ca = total_color(g, "complete_bipartite")
    assert proper_bf(g, ca) and ca.k == (n + 2 if m == n else max(m, n) + 1)


def test_total_bipartite_plus2():
    rng = random.Random(5)
    for _ in range(100):
        g = random_bipartite(rng, rng.randint(1, 8), rng.randint(1, 8), 0.5)
        ca = total_color(g, "bipartite_plus2")
        assert proper_bf(g, ca) and ca.k <= delta(g) + 2
    with pytest.raises(WrongClass):
        total_color(cycle(3), "bipartite_plus2")
    with pytest.raises(WrongClass):
        total_color(cycle(4), "complete")


def test_nordhaus_gaddum_examples():
    r = nordhaus_gaddum_check(cycle(5))
    assert r.chi * r.chi_complement == 9 == ((5 + 1) // 2) ** 2
    r = nordhaus_gaddum_check(cycle(4))
    assert r.chi + r.chi_complement == 4
    for n in range(1, 8):
        r = nordhaus_gaddum_check(complete(n))
        assert r.chi + r.chi_complement == n + 1


def test_nordhaus_gaddum_exhaustive():
    for g in atlas(7):
        r = nordhaus_gaddum_check(g)
        s, p = r.chi + r.chi_complement, r.chi * r.chi_complement
        assert 2 * math.sqrt(g.n) <= s + 1e-9 and s <= g.n + 1
        assert g.n <= p <= ((g.n + 1) / 2) ** 2
