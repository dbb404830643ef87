"""Degree-sequence tests and constructive realizations.

Witness vertex ``i`` always carries ``d[i]`` where ``d`` is the sequence in
non-increasing order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import NotGraphical
from .graphcore import Graph, MultiGraph, components, is_connected


@dataclass(frozen=True)
class DegreeSequence:
    d: tuple[int, ...]

    @classmethod
    def of(cls, seq: Sequence[int]) -> "DegreeSequence":
        if any(x < 0 for x in seq):
            raise ValueError("degrees must be non-negative")
        return cls(tuple(sorted(seq, reverse=True)))

    @property
    def n(self) -> int:
        return len(self.d)

    @property
    def total(self) -> int:
        return sum(self.d)

    def k(self) -> int:
        """max{i : d_i >= i - 1} with 1-based i (0 for the empty sequence)."""
        best = 0
        for i, x in enumerate(self.d, start=1):
            if x >= i - 1:
                best = i
        return best


@dataclass(frozen=True)
class RealizationVerdict:
    cls: str
    realizable: bool
    witness: Graph | MultiGraph | None = None
    violated_condition: str = ""
    details: dict = field(default_factory=dict, compare=False)


def _seq(d: Sequence[int]) -> tuple[int, ...]:
    return DegreeSequence.of(d).d


# ------------------------------------------------------------- pseudographs


def realize_pseudograph(d: Sequence[int]) -> RealizationVerdict:
    """Pair up the odd-degree vertices, then top up every vertex with loops."""
    d = _seq(d)
    if sum(d) % 2:
        return RealizationVerdict("pseudo", False, violated_condition="degree sum is odd")
    odd = [i for i, x in enumerate(d) if x % 2]
    edges = [(odd[i], odd[i + 1]) for i in range(0, len(odd), 2)]
    for i, x in enumerate(d):
        edges += [(i, i)] * (x // 2)
    return RealizationVerdict("pseudo", True, MultiGraph(len(d), edges, allow_loops=True))


# ------------------------------------------------------------- multigraphs


def realize_multigraph(d: Sequence[int]) -> RealizationVerdict:
    """Loopless multigraph realization.

    Start with vertex 0 joined to every other vertex i by d_i parallel edges.
    While vertex 0 has too large a degree, remove two of its edges to distinct
    neighbours x, y and add xy; the other degrees are unchanged.
    """
    d = _seq(d)
    n = len(d)
    if sum(d) % 2:
        return RealizationVerdict("multi", False, violated_condition="degree sum is odd")
    if n and d[0] > sum(d[1:]):
        return RealizationVerdict(
            "multi", False, violated_condition=f"d_1 = {d[0]} exceeds the sum {sum(d[1:])} of the rest"
        )
    if n == 0:
        return RealizationVerdict("multi", True, MultiGraph(0))
    mult = {i: d[i] for i in range(1, n)}
    extra: list[tuple[int, int]] = []
    chain = [_multi_from(n, mult, extra)]
    deg0 = sum(mult.values())
    while deg0 > d[0]:
        # two neighbours of largest multiplicity, ties to the lower id
        order = sorted((i for i in mult if mult[i] > 0), key=lambda i: (-mult[i], i))
        x, y = order[0], order[1]
        mult[x] -= 1
        mult[y] -= 1
        extra.append((min(x, y), max(x, y)))
        deg0 -= 2
        chain.append(_multi_from(n, mult, extra))
    g = chain[-1]
    return RealizationVerdict("multi", True, g, details={"chain": chain})


def _multi_from(n: int, mult: dict[int, int], extra: list[tuple[int, int]]) -> MultiGraph:
    edges = [(0, i) for i in sorted(mult) for _ in range(mult[i])]
    return MultiGraph(n, edges + extra)


# ------------------------------------------------------------ simple graphs


@dataclass(frozen=True)
class EGVerdict:
    graphical: bool
    failing_k: int | None
    lhs: int | None = None
    rhs: int | None = None
    reason: str = ""
    # every failing inequality as (k, lhs, rhs); failing_k is the first
    violations: tuple[tuple[int, int, int], ...] = ()


def erdos_gallai(d: Sequence[int]) -> EGVerdict:
    d = _seq(d)
    n = len(d)
    if sum(d) % 2:
        return EGVerdict(False, None, reason="degree sum is odd")
    bad = []
    for k in range(1, n + 1):
        lhs = sum(d[:k])
        rhs = k * (k - 1) + sum(min(k, x) for x in d[k:])
        if lhs > rhs:
            bad.append((k, lhs, rhs))
    if bad:
        k, lhs, rhs = bad[0]
        return EGVerdict(False, k, lhs, rhs, f"inequality fails at k={k}: {lhs} > {rhs}", tuple(bad))
    return EGVerdict(True, None)


@dataclass(frozen=True)
class HHStep:
    removed: int
    removed_degree: int
    order: tuple[int, ...]
    residual: tuple[int, ...]


def havel_hakimi_steps(d: Sequence[int]) -> tuple[list[HHStep], list[tuple[int, int]], str]:
    """Run the reduction with stable re-sorting.

    Returns the step tables (vertex order and residual degrees after each
    step), the edges placed, and a failure reason ("" on success).
    """
    d = _seq(d)
    cur = [(i, x) for i, x in enumerate(d)]
    steps: list[HHStep] = []
    edges: list[tuple[int, int]] = []
    while cur and cur[0][1] > 0:
        v, k = cur[0]
        rest = cur[1:]
        if k > len(rest):
            return steps, edges, f"vertex {v} needs {k} neighbours but only {len(rest)} remain"
        for j in range(k):
            w, x = rest[j]
            if x == 0:
                return steps, edges, f"negative entry appears when reducing vertex {v}"
            rest[j] = (w, x - 1)
            edges.append((v, w))
        rest.sort(key=lambda t: -t[1])  # stable: ties keep their current order
        cur = rest
        steps.append(HHStep(v, k, tuple(w for w, _ in cur), tuple(x for _, x in cur)))
    return steps, edges, ""


def havel_hakimi(d: Sequence[int]) -> RealizationVerdict:
    d = _seq(d)
    if sum(d) % 2:
        return RealizationVerdict("simple", False, violated_condition="degree sum is odd")
    steps, edges, reason = havel_hakimi_steps(d)
    if reason:
        return RealizationVerdict("simple", False, violated_condition=reason, details={"steps": steps})
    g = Graph(len(d), edges)
    return RealizationVerdict("simple", True, g, details={"steps": steps})


def is_graphical(d: Sequence[int]) -> bool:
    return erdos_gallai(d).graphical


# ------------------------------------------------------------- connected


def _bridge_free_edge(g: Graph, comp: tuple[int, ...]) -> tuple[int, int] | None:
    """An edge of the component lying on a cycle (removal keeps it connected)."""
    cs = set(comp)
    for u, v in g.edges:
        if u in cs:
            h = Graph(g.n, [e for e in g.edges if e != (u, v)])
            if _reach(h, u, v):
                return (u, v)
    return None


def _reach(g: Graph, s: int, t: int) -> bool:
    seen = {s}
    stack = [s]
    while stack:
        x = stack.pop()
        if x == t:
            return True
        for w in g.neighbors(x):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def realize_connected(d: Sequence[int], want_tree: bool = False) -> RealizationVerdict:
    """Connected (or tree) realization.

    Start from a Havel-Hakimi realization.  While it is disconnected, some
    component has a cycle edge xy (the edge count is at least n - 1); pick any
    edge uv of another component and switch to xu, yv.  Degrees stay fixed
    and the component count drops by one.
    """
    d = _seq(d)
    cls = "tree" if want_tree else "connected"
    hh = havel_hakimi(d)
    if not hh.realizable:
        raise NotGraphical(hh.violated_condition)
    n = len(d)
    total = sum(d)
    if n > 1 and d[-1] == 0:
        return RealizationVerdict(cls, False, violated_condition="some degree is 0")
    if want_tree and total != 2 * (n - 1):
        return RealizationVerdict(cls, False, violated_condition=f"degree sum {total} != 2(n-1) = {2 * (n - 1)}")
    if total < 2 * (n - 1):
        return RealizationVerdict(cls, False, violated_condition=f"degree sum {total} < 2(n-1) = {2 * (n - 1)}")
    g = hh.witness
    switches = 0
    while not is_connected(g):
        comps = components(g)
        xy = None
        for c in comps:
            xy = _bridge_free_edge(g, c)
            if xy:
                break
        if xy is None:
            raise AssertionError("edge count forces a cycle edge")
        cx = next(c for c in comps if xy[0] in c)
        other = next(c for c in comps if c is not cx)
        uv = next(e for e in g.edges if e[0] in other)
        (x, y), (u, v) = xy, uv
        edges = [e for e in g.edges if e not in (xy, uv)] + [(x, u), (y, v)]
        g = Graph(n, edges)
        switches += 1
    return RealizationVerdict(cls, True, g, details={"switches": switches})


# ------------------------------------------------------------------ split


@dataclass(frozen=True)
class SplitVerdict:
    split: bool
    k: int
    lhs: int
    rhs: int
    witness: Graph | None = None
    partition: tuple[tuple[int, ...], tuple[int, ...]] | None = None


def split_partition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Clique / independent-set partition by exhaustive search (clique listed first)."""
    n = g.n
    for mask in range(1 << n):
        clique = [v for v in range(n) if mask >> v & 1]
        indep = [v for v in range(n) if not mask >> v & 1]
        if all(g.has_edge(a, b) for a, b in combinations(clique, 2)) and not any(
            g.has_edge(a, b) for a, b in combinations(indep, 2)
        ):
            return tuple(clique), tuple(indep)
    return None


def split_test(d: Sequence[int]) -> SplitVerdict:
    seq = DegreeSequence.of(d)
    hh = havel_hakimi(seq.d)
    if not hh.realizable:
        raise NotGraphical(hh.violated_condition)
    k = seq.k()
    lhs = sum(seq.d[:k])
    rhs = k * (k - 1) + sum(seq.d[k:])
    split = lhs == rhs
    part = split_partition(hh.witness) if split and seq.n <= 20 else None
    if split and seq.n <= 20 and part is None:
        raise AssertionError("equality holds but the witness has no split partition")
    return SplitVerdict(split, k, lhs, rhs, hh.witness, part)


# -------------------------------------------------------- perfect matching


def _is_pm_inside(g: Graph, h: Graph) -> list[tuple[int, int]] | None:
    """If h is a spanning subgraph of g and g - E(h) is 1-regular, return it."""
    he = set(h.edges)
    if not he <= set(g.edges):
        return None
    rest = [e for e in g.edges if e not in he]
    covered = [v for e in rest for v in e]
    if len(covered) == g.n and len(set(covered)) == g.n:
        return rest
    return None


def _two_switches(g: Graph):
    es = g.edges
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            (a, b), (c, e) = es[i], es[j]
            if len({a, b, c, e}) < 4:
                continue
            for x, y in (((a, c), (b, e)), ((a, e), (b, c))):
                if not g.has_edge(*x) and not g.has_edge(*y):
                    new = [f for k, f in enumerate(es) if k not in (i, j)] + [x, y]
                    yield Graph(g.n, new)


def _realizations(d: tuple[int, ...]):
    """Every labeled simple graph with degree sequence d (small n only)."""
    n = len(d)
    pairs = list(combinations(range(n), 2))
    rem = list(d)
    chosen: list[tuple[int, int]] = []

    def rec(i: int):
        if i == len(pairs):
            if not any(rem):
                yield Graph(n, chosen)
            return
        u, v = pairs[i]
        # vertex u has no later pairs once v passes n-1: prune impossible demands
        if rem[u] > 0 and rem[v] > 0:
            rem[u] -= 1
            rem[v] -= 1
            chosen.append((u, v))
            yield from rec(i + 1)
            chosen.pop()
            rem[u] += 1
            rem[v] += 1
        if v == n - 1 and rem[u] > 0:
            return
        yield from rec(i + 1)

    yield from rec(0)


def realize_with_perfect_matching(d: Sequence[int], budget: int | None = None) -> RealizationVerdict:
    """Realization of d that contains a perfect matching.

    Take H realizing d - 1 and G realizing d.  Apply 2-switches to G that
    strictly reduce |E(H) - E(G)| until H sits inside G; then G - E(H) is a
    perfect matching.  The move budget defaults to 10 n^2; if it runs out or
    no improving move exists, an exhaustive search over realizations is used
    for n <= 8 and the report says so.
    """
    d = _seq(d)
    n = len(d)
    cls = "with_perfect_matching"
    if n % 2:
        return RealizationVerdict(cls, False, violated_condition="n is odd")
    if not is_graphical(d):
        return RealizationVerdict(cls, False, violated_condition="d is not graphical")
    dm = tuple(x - 1 for x in d)
    if n and (dm[-1] < 0 or not is_graphical(dm)):
        return RealizationVerdict(cls, False, violated_condition="d - 1 is not graphical")
    if n == 0:
        return RealizationVerdict(cls, True, Graph(0), details={"matching": [], "moves": 0, "fallback": False})
    budget = 10 * n * n if budget is None else budget
    g = havel_hakimi(d).witness
    h = havel_hakimi(dm).witness
    he = set(h.edges)

    def missing(x: Graph) -> int:
        return len(he - set(x.edges))

    moves = 0
    while moves < budget:
        pm = _is_pm_inside(g, h)
        if pm is not None:
            return RealizationVerdict(cls, True, g, details={"matching": pm, "moves": moves, "fallback": False})
        cur = missing(g)
        nxt = None
        for cand in _two_switches(g):
            if missing(cand) < cur:
                nxt = cand
                break
        if nxt is None:
            break
        g = nxt
        moves += 1
    if n > 8:
        raise NotGraphical("swap walk stalled and n exceeds the exhaustive fallback limit 8")
    for cand in _realizations(d):
        pm = _find_pm(cand)
        if pm is not None:
            return RealizationVerdict(cls, True, cand, details={"matching": pm, "moves": moves, "fallback": True})
    raise AssertionError("both d and d-1 graphical but no realization has a perfect matching")


def _find_pm(g: Graph) -> list[tuple[int, int]] | None:
    free = set(range(g.n))
    out: list[tuple[int, int]] = []

    def rec() -> bool:
        if not free:
            return True
        v = min(free)
        free.discard(v)
        for w in g.neighbors(v):
            if w in free:
                free.discard(w)
                out.append((v, w))
                if rec():
                    return True
                out.pop()
                free.add(w)
        free.add(v)
        return False

    return out if rec() else None


def realize(d: Sequence[int], cls: str) -> RealizationVerdict:
    """Dispatch used by the CLI."""
    if cls == "pseudo":
        return realize_pseudograph(d)
    if cls == "multi":
        return realize_multigraph(d)
    if cls == "simple":
        return havel_hakimi(d)
    if cls in ("connected", "tree"):
        if not is_graphical(d):
            return RealizationVerdict(cls, False, violated_condition="not graphical")
        return realize_connected(d, want_tree=cls == "tree")
    if cls == "split":
        if not is_graphical(d):
            return RealizationVerdict(cls, False, violated_condition="not graphical")
        sv = split_test(d)
        cond = "" if sv.split else f"equality fails at k={sv.k}: {sv.lhs} != {sv.rhs}"
        return RealizationVerdict(
            "split", sv.split, sv.witness if sv.split else None, cond,
            details={"k": sv.k, "partition": sv.partition},
        )
    if cls in ("pm", "with_perfect_matching"):
        return realize_with_perfect_matching(d)
    raise ValueError(f"unknown class {cls!r}")
