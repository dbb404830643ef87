"""Independence and cover numbers, matchings with certificates, factors, arboricity."""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import networkx as nx
import pytest

from conftest import atlas, atlas8, components_bf, random_bipartite, random_graph
from graphcert.errors import BadParams, CapExceeded, InfeasibleDegrees, WrongClass
from graphcert.families import complete, complete_bipartite, cycle, hypercube, petersen, sylvester
from graphcert.graphcore import Graph, bipartition
from graphcert.matching import (
    Poset,
    arboricity,
    augmenting_path,
    caro_wei,
    dilworth,
    f_factor,
    f_factor_gadget,
    factorize,
    forest_decomposition,
    hall_violator,
    is_matching,
    matching_deficiency,
    matrix_minmax,
    max_matching,
    max_matching_exact,
    nash_williams,
    odd_components,
    optimization_numbers,
    sdr,
)

# stand-in for the optimization-number figure: path v1..v4 plus triangle v5 v6 v7,
# which contains the printed edge cover {v1v2, v3v4, v5v6, v5v7}
OPT_FIG = Graph(7, [(0, 1), (1, 2), (2, 3), (4, 5), (4, 6), (5, 6)])
MATRIX = [[1, 0, 1, 0, 0], [0, 0, 0, 1, 1], [0, 0, 1, 0, 1], [0, 1, 0, 1, 0]]


def nxg(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def nu(g: Graph) -> int:
    return len(nx.max_weight_matching(nxg(g), maxcardinality=True))


def alpha_bf(g: Graph) -> int:
    for k in range(g.n, -1, -1):
        for s in itertools.combinations(range(g.n), k):
            if not any(g.has_edge(a, b) for a, b in itertools.combinations(s, 2)):
                return k
    return 0


def has_augmenting_bf(g: Graph, m) -> bool:
    """Exhaustive search over alternating simple paths between free vertices."""
    mate = {}
    for u, v in m:
        mate[u], mate[v] = v, u
    free = [v for v in range(g.n) if v not in mate]

    def rec(path, need_matched: bool) -> bool:
        v = path[-1]
        for w in g.neighbors(v):
            if w in path or (mate.get(v) == w) != need_matched:
                continue
            if not need_matched and w not in mate:
                return True
            if rec(path + [w], not need_matched):
                return True
        return False

    return any(rec([s], False) for s in free)


def tutte_berge_bf(g: Graph) -> int:
    best = 0
    for k in range(g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            rest = [v for v in range(g.n) if v not in s]
            seen, odd = set(), 0
            for r in rest:
                if r in seen:
                    continue
                comp, stack = {r}, [r]
                while stack:
                    a = stack.pop()
                    for b in g.neighbors(a):
                        if b not in s and b not in comp:
                            comp.add(b)
                            stack.append(b)
                seen |= comp
                odd += len(comp) % 2
            best = max(best, odd - k)
    return best


def k_factor_bf(g: Graph, k: int) -> bool:
    deg = [0] * g.n

    def rec(i: int) -> bool:
        if i == g.m:
            return all(d == k for d in deg)
        u, v = g.edges[i]
        # every later edge at u has index > i; prune when u can no longer reach k
        if deg[u] < k and deg[v] < k:
            deg[u] += 1
            deg[v] += 1
            if rec(i + 1):
                return True
            deg[u] -= 1
            deg[v] -= 1
        return rec(i + 1)

    return rec(0)


def min_forest_cover_bf(g: Graph) -> int:
    for k in range(1, g.m + 1):
        for colors in itertools.product(range(k), repeat=g.m):
            if colors and colors[0] != 0:
                break
            ok = True
            for c in range(k):
                part = [e for e, x in zip(g.edges, colors) if x == c]
                if components_bf(Graph(g.n, part)) != g.n - len(part):
                    ok = False
                    break
            if ok:
                return k
    return 0


def test_optimization_examples():
    o = optimization_numbers(OPT_FIG)
    assert (o.alpha, o.beta, o.beta_prime) == (3, 4, 4)
    cover = [(0, 1), (2, 3), (4, 5), (4, 6)]
    assert sorted({v for e in cover for v in e}) == list(range(7))
    o = optimization_numbers(cycle(5))
    assert o.alpha == 2 and o.caro_wei == Fraction(5, 3)
    assert optimization_numbers(Graph(3, [(0, 1)])).beta_prime is None


def test_gallai_identities_exhaustive():
    for g in atlas(7):
        o = optimization_numbers(g)
        assert o.alpha + o.beta == g.n
        assert o.alpha == alpha_bf(g)
        assert o.alpha_prime == nu(g)
        assert o.alpha >= math.ceil(caro_wei(g))
        assert o.beta >= o.alpha_prime
        if min(g.degrees()) >= 1:
            assert o.alpha_prime + o.beta_prime == g.n
            covered = {v for e in o.edge_cover for v in e}
            assert covered == set(range(g.n)) and all(g.has_edge(*e) for e in o.edge_cover)


def test_konig_bipartite_n8():
    for g in atlas(7) + atlas8():
        if not bipartition(g).bipartite:
            continue
        m, cert = max_matching(g)
        assert cert.kind == "konig_cover" and len(cert.cover) == m.size == nu(g)
        assert all(u in cert.cover or v in cert.cover for u, v in g.edges)
    o = optimization_numbers(complete(3))
    assert o.beta == 2 > o.alpha_prime == 1


def test_berge_optimality_n8():
    for g in atlas(7) + atlas8():
        m, _ = max_matching(g)
        assert is_matching(g, m.edges) and m.size == nu(g)
        assert augmenting_path(g, m.edges) is None
        if g.n <= 7:
            assert not has_augmenting_bf(g, m.edges)


def test_augmenting_path_found():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    p = augmenting_path(g, [(1, 2)])
    assert p is not None and p[0] in (0, 3) and p[-1] in (0, 3)
    assert has_augmenting_bf(g, [(1, 2)])


def test_exact_matching_examples():
    assert max_matching_exact(complete(3)) == ((0, 1),)
    assert max_matching_exact(petersen()) == ((0, 1), (2, 3), (4, 9), (5, 7), (6, 8))
    with pytest.raises(CapExceeded):
        max_matching_exact(cycle(20))


def test_matrix_example():
    r = matrix_minmax(MATRIX)
    assert len(r.ones) == len(r.lines) == 4
    assert r.ones == ((0, 0), (1, 3), (2, 2), (3, 1))
    rows = {i for i, _ in r.ones}
    cols = {j for _, j in r.ones}
    assert len(rows) == len(cols) == 4 and all(MATRIX[i][j] for i, j in r.ones)
    assert matrix_minmax([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).lines.__len__() == 3
    z = matrix_minmax([[0, 0], [0, 0]])
    assert z.ones == () and z.lines == ()


def test_matrix_random():
    rng = random.Random(4)
    for _ in range(200):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        a = [[int(rng.random() < 0.4) for _ in range(c)] for _ in range(r)]
        res = matrix_minmax(a)
        assert len({i for i, _ in res.ones}) == len({j for _, j in res.ones}) == len(res.ones)
        lines = set(res.lines)
        assert all(("row", i) in lines or ("col", j) in lines for i in range(r) for j in range(c) if a[i][j])
        best = max(
            (k for k in range(min(r, c), -1, -1) for rs in itertools.combinations(range(r), k)
             for p in itertools.permutations(range(c), k) if all(a[x][y] for x, y in zip(rs, p))),
            default=0,
        )
        assert len(res.ones) == best


def test_bipartite_matrix_graph():
    left, right = range(4), range(4, 9)
    g = Graph(9, [(i, 4 + j) for i in left for j in range(5) if MATRIX[i][j]])
    m, cert = max_matching(g, (list(left), list(right)))
    assert m.size == 4 and len(cert.cover) == 4


def test_hall_violator():
    g = Graph(5, [(0, 3), (1, 3), (2, 3), (2, 4)])
    m, cert = max_matching(g, ([0, 1, 2], [3, 4]))
    assert m.size == 2 and cert.hall_violator is not None
    s = cert.hall_violator
    assert len(cert.neighbourhood) < len(s)
    assert hall_violator(g, [0, 1, 2]) == (0, 1)
    with pytest.raises(BadParams):
        max_matching(g, ([0, 3], [1, 2, 4]))


def test_frobenius_regular_bipartite():
    rng = random.Random(5)
    for _ in range(100):
        n, r = rng.randint(1, 8), 0
        r = rng.randint(1, n)
        perm = list(range(n))
        rng.shuffle(perm)
        g = Graph(2 * n, [(i, n + (perm[i] + s) % n) for i in range(n) for s in range(r)])
        m, _ = max_matching(g)
        assert m.perfect


def test_sdr_examples():
    s1, s2, s3, s4 = "s1", "s2", "s3", "s4"
    r = sdr([{s2, s3}, {s1, s3, s4}, {s3, s4}])
    assert r.representatives == (s2, s1, s3)
    r = sdr([{"x"}, {"x"}])
    assert r.representatives is None and r.violator == (0, 1)
    r = sdr([{1}, {2, 3}, {4}])
    assert r.representatives[0] == 1 and r.representatives[2] == 4


def test_sdr_random():
    rng = random.Random(6)
    for _ in range(300):
        fam = [set(rng.sample(range(6), rng.randint(0, 3))) for _ in range(rng.randint(1, 5))]
        r = sdr(fam)
        exists = any(
            len(set(c)) == len(c) for c in itertools.product(*[sorted(f) for f in fam])
        )
        assert (r.representatives is not None) == exists
        if exists:
            assert all(x in f for x, f in zip(r.representatives, fam)) and len(set(r.representatives)) == len(fam)
        else:
            union = set().union(*(fam[i] for i in r.violator))
            assert len(union) < len(r.violator)


def random_poset(rng: random.Random, n: int) -> Poset:
    pairs = [(i, j) for i, j in itertools.combinations(range(n), 2) if rng.random() < 0.3]
    return Poset.from_pairs(n, pairs)


def check_dilworth(p: Poset, r) -> None:
    assert all(not p.comparable(a, b) for a, b in itertools.combinations(r.antichain, 2))
    assert sorted(x for c in r.chains for x in c) == list(range(p.n))
    for c in r.chains:
        assert all(p.leq[a][b] for a, b in zip(c, c[1:]))
    assert len(r.antichain) == len(r.chains)


def test_dilworth_examples():
    p = Poset.from_pairs(4, [(0, 1), (2, 3)])
    r = dilworth(p)
    assert len(r.antichain) == 2 and len(r.chains) == 2
    p = Poset.from_pairs(5, [(i, i + 1) for i in range(4)])
    assert len(dilworth(p).chains) == 1
    p = Poset.from_pairs(4, [])
    assert len(dilworth(p).antichain) == 4
    with pytest.raises(BadParams):
        Poset(2, [[1, 1], [1, 1]])
    with pytest.raises(BadParams):
        Poset(2, [[0, 0], [0, 1]])


def test_dilworth_methods_agree():
    rng = random.Random(7)
    for _ in range(150):
        p = random_poset(rng, rng.randint(1, 10))
        a = dilworth(p, method="brute_force")
        b = dilworth(p, method="matching")
        check_dilworth(p, a)
        check_dilworth(p, b)
        assert len(a.chains) == len(b.chains)
    big = random_poset(rng, 14)
    check_dilworth(big, dilworth(big))
    with pytest.raises(CapExceeded):
        dilworth(big, method="brute_force")


def test_deficiency_examples():
    r = matching_deficiency(complete(3))
    assert not r.tutte_holds and r.extremal_set == () and r.odd_components == 1 and r.deficiency == 1
    r = matching_deficiency(sylvester())
    assert not r.tutte_holds and r.odd_components - len(r.extremal_set) == r.deficiency > 0
    assert odd_components(sylvester(), r.extremal_set) == r.odd_components
    r = matching_deficiency(petersen())
    assert r.tutte_holds and len(r.perfect_matching) == 5


def test_tutte_berge_n7_independent():
    for g in atlas(7):
        r = matching_deficiency(g)
        assert r.deficiency == tutte_berge_bf(g) == g.n - 2 * nu(g)


def test_tutte_berge_n8():
    for g in atlas8():
        r = matching_deficiency(g)
        assert r.deficiency == g.n - 2 * nu(g)
        assert odd_components(g, r.extremal_set) - len(r.extremal_set) == r.deficiency


def _cubic_pool():
    pool = [g for g in atlas(7) + atlas8() if g.n and set(g.degrees()) == {3}]
    for seed in range(200):
        G = nx.random_regular_graph(3, 10, seed=seed)
        pool.append(Graph(10, G.edges()))
    return pool


def test_petersen_theorem():
    from graphcert.connectivity import cut_structure

    count = 0
    for g in _cubic_pool():
        if len(cut_structure(g).bridges) <= 2:
            assert max_matching(g)[0].perfect
            count += 1
    assert count > 200


def test_f_factor_examples():
    h = f_factor(complete(6), [2, 3, 3, 2, 2, 2])
    assert h is not None and h.degrees() == (2, 3, 3, 2, 2, 2)
    assert set(h.edges) <= set(complete(6).edges)
    assert f_factor(cycle(5), [0] * 5) == Graph(5)
    with pytest.raises(InfeasibleDegrees):
        f_factor(cycle(4), [3, 2, 2, 2])


def test_gadget_shape():
    g = cycle(4)
    gad = f_factor_gadget(g, [1, 2, 1, 2])
    # each v contributes d(v) ports plus d(v) - f(v) inner vertices
    assert gad.size == sum(2 * 2 - f for f in [1, 2, 1, 2])
    assert len(gad.port_edges) == g.m


def test_f_factor_matches_direct_search():
    for g in atlas(6):
        for k in (1, 2):
            if min(g.degrees()) < k:
                continue
            h = f_factor(g, [k] * g.n)
            assert (h is not None) == k_factor_bf(g, k)
            if h is not None:
                assert set(h.degrees()) == {k} and set(h.edges) <= set(g.edges)


def test_factorize_examples():
    fz = factorize(complete(4), "one_K2n")
    assert len(fz.parts) == 3 and all(len(p) == 2 for p in fz.parts)
    fz = factorize(complete(5), "two_even_regular")
    assert len(fz.parts) == 2
    for p in fz.parts:
        h = Graph(5, p)
        assert set(h.degrees()) == {2}
    fz = factorize(complete_bipartite(3, 3), "one_regular_bipartite")
    assert len(fz.parts) == 3 and all(len(p) == 3 for p in fz.parts)
    with pytest.raises(WrongClass):
        factorize(cycle(5), "one_regular_bipartite")
    with pytest.raises(WrongClass):
        factorize(petersen(), "two_even_regular")
    with pytest.raises(WrongClass):
        factorize(complete(5), "one_K2n")


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_one_factorization_complete(n):
    fz = factorize(complete(n), "one_K2n")
    assert len(fz.parts) == n - 1
    assert sorted(e for p in fz.parts for e in p) == list(complete(n).edges)


@pytest.mark.parametrize("g", [complete(7), complete(9), hypercube(4), cycle(6)], ids=["K7", "K9", "Q4", "C6"])
def test_two_factorization(g):
    fz = factorize(g, "two_even_regular")
    assert len(fz.parts) == g.degree(0) // 2
    for p in fz.parts:
        assert set(Graph(g.n, p).degrees()) == {2}


def test_arboricity_examples():
    for g, a in [(complete(4), 2), (complete(5), 3), (complete_bipartite(3, 3), 2)]:
        val, forests = arboricity(g)
        assert val == a and len(forests) == a
        assert sorted(e for f in forests for e in f) == list(g.edges)
        assert all(components_bf(Graph(g.n, f)) == g.n - len(f) for f in forests)


@pytest.mark.parametrize("n", range(2, 9))
def test_arboricity_complete(n):
    assert nash_williams(complete(n))[0] == math.ceil(n / 2)


def test_nash_williams_exhaustive():
    for g in atlas(6):
        if g.m == 0 or g.m > 10:
            continue
        a, forests = arboricity(g)
        assert a == min_forest_cover_bf(g)
        assert forest_decomposition(g, a - 1) is None


def test_random_bipartite_konig():
    rng = random.Random(8)
    for _ in range(100):
        g = random_bipartite(rng, rng.randint(1, 7), rng.randint(1, 7), 0.4)
        m, cert = max_matching(g)
        assert m.size == nu(g) == len(cert.cover)


def test_random_general_matching():
    rng = random.Random(9)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 16), 0.3)
        m, _ = max_matching(g)
        assert m.size == nu(g)
