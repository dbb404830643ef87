"""Cut structure, kappa/lambda, Menger certificates, ears and contraction."""

from __future__ import annotations

import itertools
import random

import pytest

from conftest import atlas, components_bf, random_graph
from graphcert.connectivity import (
    chartrand_harary,
    connectivity_numbers,
    contractible_edge,
    cut_structure,
    cut_structure_lowpoint,
    cut_structure_recompute,
    ear_decomposition,
    kappa_bruteforce,
    menger,
    menger_fan,
    simple_cycles,
    two_connected_checks,
    verify_ears,
    verify_menger,
)
from graphcert.errors import AdjacentEndpoints, BadParams, NotThreeConnected, TooSmall
from graphcert.families import complete, complete_bipartite, cycle, cycle_power, path, petersen, wheel
from graphcert.graphcore import Graph
from graphcert.transform import contract

# stand-in with the listed cut structure: 4-cycle v1 v2 v7 v3, pendants v4 v5 v6 at v3,
# bridge v7 v8, triangle v8 v9 v10 (0-based ids)
CUT_FIG = Graph(10, [(0, 1), (1, 6), (6, 2), (2, 0), (2, 3), (2, 4), (2, 5), (6, 7), (7, 8), (8, 9), (7, 9)])


def min_vertex_separator_bf(g: Graph, u: int, v: int) -> int:
    others = [w for w in range(g.n) if w not in (u, v)]
    for k in range(len(others) + 1):
        for s in itertools.combinations(others, k):
            if components_bf_pair(g, set(s), u, v):
                return k
    raise AssertionError("non-adjacent endpoints are always separable")


def components_bf_pair(g: Graph, removed: set, u: int, v: int) -> bool:
    """True when u and v lie in different components of g - removed."""
    seen, stack = {u}, [u]
    while stack:
        a = stack.pop()
        for b in g.neighbors(a):
            if b not in removed and b not in seen:
                seen.add(b)
                stack.append(b)
    return v not in seen


def min_edge_cut_bf(g: Graph, u: int, v: int) -> int:
    others = [w for w in range(g.n) if w not in (u, v)]
    best = g.m
    for k in range(len(others) + 1):
        for extra in itertools.combinations(others, k):
            side = {u, *extra}
            best = min(best, sum(1 for a, b in g.edges if (a in side) != (b in side)))
    return best


def test_cut_examples():
    cs = cut_structure(CUT_FIG)
    assert cs.cut_vertices == (2, 6, 7)
    assert cs.bridges == ((2, 3), (2, 4), (2, 5), (6, 7))
    cs = cut_structure(cycle(6))
    assert cs.cut_vertices == () and cs.bridges == ()
    t = path(6)
    assert cut_structure(t).bridges == t.edges


def test_cut_methods_agree_and_bridges_on_no_cycle():
    for g in atlas(7):
        a, b = cut_structure_recompute(g), cut_structure_lowpoint(g)
        assert a == b
        on_cycle = set()
        for c in simple_cycles(g):
            on_cycle |= {tuple(sorted(e)) for e in zip(c, c[1:] + c[:1])}
        assert set(a.bridges) == set(g.edges) - on_cycle
        c0 = components_bf(g)
        assert set(a.cut_vertices) == {v for v in range(g.n) if components_bf(g, [v]) > c0}


def test_connectivity_examples():
    for m, n in [(1, 3), (2, 2), (2, 5), (3, 4)]:
        assert connectivity_numbers(complete_bipartite(m, n)).kappa == min(m, n)
    assert connectivity_numbers(cycle_power(8, 3)).kappa == 6
    cn = connectivity_numbers(chartrand_harary(2, 3, 4))
    assert (cn.kappa, cn.lambda_, cn.delta) == (2, 3, 4) and cn.verified
    assert connectivity_numbers(complete(5)).kappa == 4


@pytest.mark.parametrize("abc", [(1, 1, 1), (3, 3, 3), (1, 2, 3), (2, 2, 5), (1, 4, 4)])
def test_chartrand_harary(abc):
    cn = connectivity_numbers(chartrand_harary(*abc))
    assert (cn.kappa, cn.lambda_, cn.delta) == abc and cn.verified


def test_chartrand_harary_bad():
    with pytest.raises(BadParams):
        chartrand_harary(3, 2, 4)


@pytest.mark.parametrize("n, k", [(7, 1), (8, 2), (9, 3), (10, 4), (11, 2)])
def test_harary_cycle_powers(n, k):
    assert connectivity_numbers(cycle_power(n, k)).kappa == 2 * k


def test_whitney_chain_and_witnesses():
    for g in atlas(7):
        cn = connectivity_numbers(g)
        assert cn.kappa <= cn.lambda_ <= cn.delta
        assert cn.kappa == kappa_bruteforce(g)[0]
        if components_bf(g) == 1 and g.n > 1:
            assert len(cn.vertex_cut) == cn.kappa and len(cn.edge_cut) == cn.lambda_
            alive = [v for v in range(g.n) if v not in cn.vertex_cut]
            sub_parts = components_bf(g, cn.vertex_cut)
            assert sub_parts > 1 or len(alive) <= 1
            rest = Graph(g.n, [e for e in g.edges if e not in set(cn.edge_cut)])
            assert components_bf(rest) > 1


def test_high_min_degree_lambda_equals_delta():
    for g in atlas(7):
        if g.n > 1 and components_bf(g) == 1 and min(g.degrees()) >= g.n // 2:
            cn = connectivity_numbers(g)
            assert cn.lambda_ == cn.delta


def test_menger_examples():
    r = menger(cycle(4), 0, 2)
    assert len(r.paths) == 2 and sorted(r.cut) == [1, 3]
    r = menger(complete_bipartite(3, 3), 0, 1)
    assert len(r.paths) == 3
    r = menger_fan(complete(4), 0, [1, 2, 3])
    assert len(r.paths) == 3 and verify_menger(complete(4), r)
    with pytest.raises(AdjacentEndpoints):
        menger(cycle(4), 0, 1)


def test_menger_against_enumeration():
    for g in atlas(6):
        for u, v in itertools.combinations(range(g.n), 2):
            r = menger(g, u, v, "edge")
            assert len(r.paths) == len(r.cut) == min_edge_cut_bf(g, u, v)
            if not g.has_edge(u, v):
                r = menger(g, u, v, "vertex")
                assert len(r.paths) == len(r.cut) == min_vertex_separator_bf(g, u, v)


def test_fan_random():
    rng = random.Random(3)
    for _ in range(150):
        g = random_graph(rng, rng.randint(3, 9), 0.45)
        x = rng.randrange(g.n)
        us = rng.sample([v for v in range(g.n) if v != x], rng.randint(1, g.n - 1))
        r = menger_fan(g, x, us)
        assert verify_menger(g, r)


def test_ear_examples():
    w = wheel(6)
    dec = ear_decomposition(w)
    assert dec and len(dec.ears) == 4 and verify_ears(w, dec, closed=False)
    obs = ear_decomposition(path(4))
    assert not obs and obs.kind == "cut_vertex"
    obs = ear_decomposition(path(4), closed=True)
    assert not obs and obs.kind == "bridge"
    dec = ear_decomposition(cycle(5))
    assert dec.ears == () and len(dec.cycle) == 6


def test_ears_iff_two_connected():
    for g in atlas(7, min_n=3):
        rep = two_connected_checks(g)
        assert rep.all_equal
        dec = ear_decomposition(g)
        assert bool(dec) == rep.no_cut_vertex
        if dec:
            assert verify_ears(g, dec, closed=False) and len(dec.ears) == g.m - g.n
        bridgeless = components_bf(g) == 1 and g.m > 0 and not cut_structure(g).bridges
        cdec = ear_decomposition(g, closed=True)
        assert bool(cdec) == bridgeless
        if cdec:
            assert verify_ears(g, cdec, closed=True)


def test_two_connected_examples():
    assert two_connected_checks(cycle(4)).no_cut_vertex
    rep = two_connected_checks(path(4))
    assert rep.all_equal and not rep.no_cut_vertex
    k4e = Graph(4, [e for e in complete(4).edges if e != (0, 1)])
    rep = two_connected_checks(k4e)
    assert rep.all_equal and rep.no_cut_vertex
    with pytest.raises(TooSmall):
        two_connected_checks(path(2))


def test_contractible_examples():
    e = contractible_edge(complete(5))
    assert connectivity_numbers(contract(complete(5), e)).kappa == 3
    w = wheel(6)
    e = contractible_edge(w)
    assert kappa_bruteforce(contract(w, e))[0] >= 3
    with pytest.raises(TooSmall):
        contractible_edge(complete(4))
    with pytest.raises(NotThreeConnected):
        contractible_edge(cycle(6))


def test_contractible_exhaustive():
    for g in list(atlas(7, min_n=5)) + [petersen()]:
        if kappa_bruteforce(g)[0] >= 3:
            e = contractible_edge(g)
            assert g.has_edge(*e) and kappa_bruteforce(contract(g, e))[0] >= 3
