"""Batch command-line front end, text file formats and the report envelope.

Every subcommand builds a :class:`Report`, replays its witnesses through the
independent checkers, and prints either human text or canonical JSON.
Exit status: 0 for any computed verdict, 1 for usage or input errors,
2 when a search cap is exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import random
import sys
from dataclasses import dataclass, field, fields, is_dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import __version__
from . import coloring, connectivity, degseq, families, matching, morphism, planar, transform, traversal, trees
from .errors import BadParams, CapExceeded, GraphError, ParseError
from .graphcore import (
    AnyGraph,
    Graph,
    MultiGraph,
    bipartition,
    classify_walk,
    component_count_without,
    degree_profile,
    emit_edge_list,
    is_complete,
    is_connected,
    is_forest,
    metrics,
    parse_edge_list,
)

COMMANDS = ("gen", "info", "transform", "iso", "aut", "degseq", "trees", "connect", "walk", "match", "color", "planar")

CAPS = {
    "morphism": (10, "vertex limit for isomorphism, homomorphism and automorphism search"),
    "tree": (10, "vertex limit for the path-counting tree characterisations"),
    "matching": (18, "vertex limit for exact matching and optimisation numbers"),
    "subset": (16, "vertex limit for subset searches (deficiency, toughness, arboricity)"),
    "dilworth": (10, "ground-set limit for the brute-force Dilworth cross-check"),
    "tsp": (11, "city limit for brute-force TSP"),
    "hamilton": (12, "vertex limit for Hamiltonian cycle and path search"),
    "planar": (12, "vertex limit for Kuratowski and minor witnesses"),
    "chromatic": (30, "vertex limit for exact vertex and total colouring"),
    "index": (40, "edge limit for exact chromatic index"),
    "rotations": (200_000, "rotation-system budget for the maximum-face search"),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{message}\n{self.format_usage()}")


# ------------------------------------------------------------------ report


def plain(x):
    """JSON-ready copy: tuples become lists, fractions become 'p/q' strings."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return int(x) if x.is_integer() else x
    if isinstance(x, dict):
        return {str(k): plain(v) for k, v in x.items()}
    if isinstance(x, (frozenset, set)):
        return [plain(v) for v in sorted(x)]
    if isinstance(x, (Graph, MultiGraph)):
        return {"n": x.n, "m": x.m, "mode": x.mode, "edges": [list(e) for e in x.edges]}
    if isinstance(x, (list, tuple)):
        return [plain(v) for v in x]
    if is_dataclass(x):
        return {f.name: plain(getattr(x, f.name)) for f in fields(x)}
    raise TypeError(f"cannot serialise {type(x).__name__}")


@dataclass
class Report:
    command: str
    input_digest: str = ""
    results: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    caps_hit: list = field(default_factory=list)
    version: str = __version__

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "input_digest": self.input_digest,
            "results": plain(self.results),
            "witnesses": plain(self.witnesses),
            "caps_hit": plain(self.caps_hit),
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, ensure_ascii=True) + "\n"

    def to_text(self) -> str:
        d = self.as_dict()
        lines = [f"{self.command}"]
        for section in ("results", "witnesses"):
            for key, val in d[section].items():
                lines.append(f"  {key}: {_text_value(val)}")
        for cap in d["caps_hit"]:
            lines.append(f"  cap exceeded: {cap['cap']} (limit {cap['limit']}, got {cap['actual']})")
        return "\n".join(lines) + "\n"


def _text_value(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    if isinstance(v, (int, float, str)):
        return str(v)
    return json.dumps(v, separators=(",", ":"))


def digest(parts: Sequence[str]) -> str:
    h = hashlib.sha256()
    for p in parts:
        h.update(p.encode())
        h.update(b"\0")
    return h.hexdigest()


# ------------------------------------------------------------ file formats


def emit_dot(g: AnyGraph, ca: coloring.ColorAssignment | None = None) -> str:
    """Undirected DOT; colours appear as a ``color_class`` attribute."""
    vcol = ca.vertex_colors(g) if ca is not None and isinstance(g, Graph) else ()
    ecol = ca.edge_colors(g) if ca is not None and isinstance(g, Graph) else ()
    lines = ["graph G {"]
    for v in range(g.n):
        lines.append(f"  {v} [color_class={vcol[v]}];" if vcol else f"  {v};")
    for i, (u, v) in enumerate(g.edges):
        lines.append(f"  {u} -- {v} [color_class={ecol[i]}];" if ecol else f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"expected an integer, got {tok!r}") from None


def _number(tok: str, lineno: int):
    try:
        return int(tok)
    except ValueError:
        pass
    try:
        x = float(tok)
    except ValueError:
        raise ParseError(lineno, f"expected a number, got {tok!r}") from None
    if math.isnan(x):
        raise ParseError(lineno, "NaN weight")
    return x


def parse_weight_matrix(text: str) -> list[list]:
    """``n`` on the first line, then ``n`` rows of ``n`` numbers."""
    it = iter(_content_lines(text))
    first = next(it, None)
    if first is None or len(first[1]) != 1:
        raise ParseError(first[0] if first else 1, "first line must hold n")
    n = _int(first[1][0], first[0])
    rows = []
    for lineno, toks in it:
        if len(toks) != n:
            raise ParseError(lineno, f"row must have {n} entries")
        rows.append([_number(t, lineno) for t in toks])
    if len(rows) != n:
        raise ParseError(len(text.splitlines()) + 1, f"expected {n} rows, found {len(rows)}")
    return rows


def parse_poset(text: str) -> matching.Poset:
    """``n`` on the first line, then relation pairs ``x y`` meaning x <= y."""
    it = iter(_content_lines(text))
    first = next(it, None)
    if first is None or len(first[1]) != 1:
        raise ParseError(first[0] if first else 1, "first line must hold n")
    n = _int(first[1][0], first[0])
    pairs = []
    for lineno, toks in it:
        if len(toks) != 2:
            raise ParseError(lineno, "relation line must be 'x y'")
        x, y = _int(toks[0], lineno), _int(toks[1], lineno)
        if not (0 <= x < n and 0 <= y < n):
            raise ParseError(lineno, f"element outside 0..{n - 1}")
        pairs.append((x, y))
    return matching.Poset.from_pairs(n, pairs)


def parse_matrix01(text: str) -> list[list[int]]:
    """Dense 0/1 rows, entries separated by spaces or written contiguously."""
    rows = []
    for lineno, toks in _content_lines(text):
        cells = list(toks[0]) if len(toks) == 1 else toks
        if any(c not in ("0", "1") for c in cells):
            raise ParseError(lineno, "entries must be 0 or 1")
        rows.append([int(c) for c in cells])
        if len(rows[-1]) != len(rows[0]):
            raise ParseError(lineno, "rows must have equal length")
    return rows


def parse_rotation(text: str, n: int) -> list[list[int]]:
    """One line per vertex: the vertex id followed by its neighbours in cyclic order."""
    rot: list[list[int] | None] = [None] * n
    for lineno, toks in _content_lines(text):
        v = _int(toks[0], lineno)
        if not 0 <= v < n:
            raise ParseError(lineno, f"vertex outside 0..{n - 1}")
        if rot[v] is not None:
            raise ParseError(lineno, f"vertex {v} listed twice")
        rot[v] = [_int(t, lineno) for t in toks[1:]]
    missing = [v for v in range(n) if rot[v] is None]
    if missing:
        raise ParseError(len(text.splitlines()) + 1, f"no rotation for vertex {missing[0]}")
    return rot  # type: ignore[return-value]


def parse_drawing(text: str, n: int) -> list[tuple[int, int]]:
    """``x y`` integer coordinates, one line per vertex in id order."""
    coords = []
    for lineno, toks in _content_lines(text):
        if len(toks) != 2:
            raise ParseError(lineno, "coordinate line must be 'x y'")
        coords.append((_int(toks[0], lineno), _int(toks[1], lineno)))
    if len(coords) != n:
        raise ParseError(len(text.splitlines()) + 1, f"expected {n} coordinates, found {len(coords)}")
    return coords


def parse_int_list(s: str) -> tuple[int, ...]:
    s = s.strip()
    if not s:
        return ()
    try:
        return tuple(int(t) for t in s.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {s!r}") from None


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(arg: str) -> AnyGraph:
    """A file path, ``-`` for stdin, or ``@family`` / ``@family:p1,p2``."""
    if arg.startswith("@"):
        tag, _, params = arg[1:].partition(":")
        return families.generate(families.FamilySpec(tag, parse_int_list(params)))
    return parse_edge_list(read_text(arg))


def _simple(g: AnyGraph) -> Graph:
    if not isinstance(g, Graph):
        raise UsageError(f"this command needs a simple graph, got mode {g.mode}")
    return g


# ----------------------------------------------------------- verification


def _check(ok: bool, what: str) -> None:
    if not ok:
        raise AssertionError(f"witness replay failed: {what}")


def _is_walk(g: Graph, seq: Sequence[int], closed: bool) -> bool:
    if any(not g.has_edge(a, b) for a, b in zip(seq, seq[1:])):
        return False
    return not closed or (len(seq) > 0 and g.has_edge(seq[-1], seq[0]))


def _hamiltonian(g: Graph, seq: Sequence[int] | None, closed: bool) -> bool:
    if seq is None:
        return True
    if sorted(seq) != list(range(g.n)):
        return False
    if g.n <= 2 and closed:
        return g.n == 1
    return _is_walk(g, seq, closed)


def _euler_ok(g: AnyGraph, r: traversal.EulerResult) -> bool:
    if r.kind == "none":
        return bool(r.reason)
    if sorted(r.edge_order) != list(range(g.m)):
        return False
    for i, e in enumerate(r.edge_order):
        if sorted(g.edges[e]) != sorted((r.sequence[i], r.sequence[i + 1])):
            return False
    return (r.sequence[0] == r.sequence[-1]) == (r.kind == "circuit")


def _is_vertex_cover(g: Graph, cover: Sequence[int]) -> bool:
    s = set(cover)
    return all(u in s or v in s for u, v in g.edges)


def _degrees_of(n: int, edges) -> list[int]:
    d = [0] * n
    for u, v in edges:
        d[u] += 1
        d[v] += 1
    return d


def _same_edges(g: Graph, parts) -> bool:
    return sorted(e for p in parts for e in p) == sorted(g.edges)


# ------------------------------------------------------------- commands


def cmd_gen(a, rep: Report, ctx: dict):
    g = families.generate(families.FamilySpec(a.family, tuple(a.params)))
    ctx["inputs"].append(f"{a.family}:{','.join(map(str, a.params))}")
    rep.results.update(family=a.family, params=list(a.params), n=g.n, m=g.m)
    rep.witnesses["edges"] = g.edges
    ctx["graph_out"] = g


def cmd_info(a, rep: Report, ctx: dict):
    g = ctx["graph"]
    dv = degree_profile(g)
    rep.results.update(n=g.n, m=g.m, mode=g.mode, degrees=dv.degrees, min_degree=dv.delta, max_degree=dv.Delta)
    mt = metrics(g)
    rep.results.update(
        connected=mt.component_count <= 1,
        components=mt.component_count,
        radius=mt.radius,
        diameter=mt.diameter,
        center=mt.center,
        cyclomatic=mt.cyclomatic,
    )
    bp = bipartition(g)
    rep.results["bipartite"] = bp.bipartite
    if bp.bipartite:
        left, right = bp.parts
        side = {v: 0 for v in left} | {v: 1 for v in right}
        _check(all(side[u] != side[v] for u, v in g.edges), "bipartition")
        rep.witnesses["parts"] = bp.parts
    else:
        cyc = bp.odd_cycle
        _check((len(cyc) - 1) % 2 == 1 and cyc[0] == cyc[-1], "odd cycle")
        rep.witnesses["odd_cycle"] = cyc
    if a.walk is not None:
        seq = parse_int_list(a.walk)
        wc = classify_walk(_simple(g), seq, strict=False)
        rep.results["walk"] = {"kind": wc.kind, "length": wc.length, "closed": wc.closed}
    ctx["graph_out"] = g


def cmd_transform(a, rep: Report, ctx: dict):
    g = _simple(ctx["graph"])
    op, args = a.op, a.args

    def ints(k: int) -> list[int]:
        if len(args) != k:
            raise UsageError(f"{op} takes {k} integer argument(s)")
        try:
            return [int(x) for x in args]
        except ValueError:
            raise UsageError(f"{op} takes integer arguments") from None

    def other() -> Graph:
        if not args:
            raise UsageError(f"{op} needs a second GRAPH argument")
        h = _simple(load_graph(args[0]))
        ctx["inputs"].append(emit_edge_list(h))
        return h

    unary = {
        "complement": transform.complement,
        "line": transform.line_graph,
        "total": transform.total_graph,
        "mycielski": transform.mycielski,
        "add-vertex": transform.add_vertex,
    }
    if op in unary:
        ints(0)
        out = unary[op](g)
    elif op == "delete-vertex":
        out = transform.delete_vertex(g, *ints(1))
    elif op in ("delete-edge", "add-edge", "subdivide"):
        fn = {"delete-edge": transform.delete_edge, "add-edge": transform.add_edge, "subdivide": transform.subdivide}[op]
        out = fn(g, *ints(2))
    elif op == "contract":
        if len(args) != 1:
            raise UsageError("contract takes one comma-separated vertex list")
        out = transform.contract(g, parse_int_list(args[0]))
    elif op == "union":
        out = transform.union(g, other())
    elif op == "join":
        out = transform.join(g, other())
    elif op == "product":
        if len(args) != 2:
            raise UsageError(f"product takes GRAPH and KIND ({', '.join(transform.PRODUCT_KINDS)})")
        if args[1] not in transform.PRODUCT_KINDS:
            raise UsageError(f"unknown product kind {args[1]!r}")
        out = transform.product(g, other(), args[1])
    else:
        raise UsageError(f"unknown operation {op!r}")
    ctx["inputs"].append(f"{op} {' '.join(args)}")
    rep.results.update(operation=op, n=out.n, m=out.m)
    rep.witnesses["edges"] = out.edges
    ctx["graph_out"] = out


def cmd_iso(a, rep: Report, ctx: dict):
    g = _simple(ctx["graph"])
    h = _simple(load_graph(a.other))
    ctx["inputs"].append(emit_edge_list(h))
    cap = a.cap_morphism
    if a.hom:
        f = morphism.homomorphism(g, h, cap)
        rep.results["homomorphic"] = f is not None
        if f is not None:
            _check(morphism.is_homomorphism(g, h, f.mapping), "homomorphism")
            rep.witnesses["map"] = f.mapping
        else:
            rep.results["violated_condition"] = "no vertex map preserves adjacency (exhaustive search)"
        return
    f = morphism.isomorphic(g, h, cap)
    rep.results["isomorphic"] = f is not None
    if f is not None:
        _check(morphism.is_isomorphism(g, h, f.mapping), "isomorphism")
        rep.witnesses["map"] = f.mapping
    elif (g.n, g.m) != (h.n, h.m):
        rep.results["violated_condition"] = f"order/size differ: ({g.n},{g.m}) vs ({h.n},{h.m})"
    elif sorted(g.degrees()) != sorted(h.degrees()):
        rep.results["violated_condition"] = "degree sequences differ"
    else:
        rep.results["violated_condition"] = "no bijection preserves adjacency (exhaustive search)"


def cmd_aut(a, rep: Report, ctx: dict):
    g = _simple(ctx["graph"])
    auts = morphism.automorphisms(g, a.cap_morphism)
    maps = [f.mapping for f in auts]
    for f in maps:
        _check(morphism.is_isomorphism(g, g, f), "automorphism")
    tr = morphism.transitivity(g, a.cap_morphism)
    rep.results.update(
        group_order=tr.group_order,
        vertex_transitive=tr.vertex_transitive,
        edge_transitive=tr.edge_transitive,
        asymmetric=tr.asymmetric,
        vertex_orbits=tr.vertex_orbits,
    )
    rep.witnesses["automorphisms"] = maps


def cmd_degseq(a, rep: Report, ctx: dict):
    d = parse_int_list(a.sequence)
    ctx["inputs"].append(",".join(map(str, d)))
    v = degseq.realize(d, a.klass)
    rep.results.update(cls=a.klass, sequence=tuple(sorted(d, reverse=True)), realizable=v.realizable)
    if a.klass == "simple":
        eg = degseq.erdos_gallai(d)
        rep.results["erdos_gallai"] = {"graphical": eg.graphical, "failing_k": eg.failing_k, "lhs": eg.lhs, "rhs": eg.rhs, "violations": eg.violations}
        _check(eg.graphical == v.realizable, "Erdos-Gallai agrees with Havel-Hakimi")
    if v.details:
        rep.results["details"] = v.details
    if not v.realizable:
        rep.results["violated_condition"] = v.violated_condition
        return
    w = v.witness
    _check(sorted(w.degrees(), reverse=True) == sorted(d, reverse=True), "witness degrees")
    if a.klass in ("connected", "tree"):
        _check(is_connected(w), "witness connected")
    if a.klass == "tree":
        _check(w.m == w.n - 1, "witness is a tree")
    if a.klass == "split":
        _check(degseq.split_partition(w) is not None, "witness is split")
    if a.klass == "pm":
        pm, _ = matching.max_matching(w)
        _check(pm.perfect, "witness has a perfect matching")
    rep.results.update(n=w.n, m=w.m)
    rep.witnesses["edges"] = w.edges
    ctx["graph_out"] = w


def cmd_trees(a, rep: Report, ctx: dict):
    if a.prufer_decode is not None:
        code = parse_int_list(a.prufer_decode)
        ctx["inputs"].append(",".join(map(str, code)))
        t = trees.prufer_decode(code)
        _check(trees.prufer_encode(t) == code, "decode then encode")
        rep.results.update(code=code, n=t.n)
        rep.witnesses["edges"] = t.edges
        ctx["graph_out"] = t
        return
    if ctx["graph"] is None:
        raise UsageError("trees needs a GRAPH unless --prufer-decode is given")
    g = _simple(ctx["graph"])
    if a.prufer_encode:
        code = trees.prufer_encode(g)
        _check(trees.prufer_decode(code, g.n) == g, "encode then decode")
        rep.results["code"] = code
    elif a.count:
        k = trees.spanning_tree_count(g)
        rep.results["spanning_trees"] = k
        if k:
            t = trees.spanning_tree(g)
            _check(t.m == g.n - 1 and is_forest(g.n, t.edges) and set(t.edges) <= set(g.edges), "spanning tree")
            rep.witnesses["spanning_tree"] = t.edges
    elif a.center:
        rep.results["center"] = trees.tree_center(g)
    else:
        tr = trees.tree_check(g, a.cap_tree)
        _check(tr.all_equal, "tree characterisations agree")
        rep.results.update(tree=tr.connected_acyclic, characterisations=tr.as_tuple())
        if not tr.connected_acyclic:
            rep.results["violated_condition"] = "disconnected" if not is_connected(g) else "contains a cycle"
    ctx["graph_out"] = g


def cmd_connect(a, rep: Report, ctx: dict):
    g = _simple(ctx["graph"])
    cs = connectivity.cut_structure(g)
    cn = connectivity.connectivity_numbers(g, verify=g.n <= a.cap_subset)
    rep.results.update(
        kappa=cn.kappa, lambda_=cn.lambda_, delta=cn.delta,
        cut_vertices=cs.cut_vertices, bridges=cs.bridges,
    )
    _check(cn.kappa <= cn.lambda_ <= cn.delta, "Whitney inequalities")
    if g.n >= 2 and not is_complete(g):
        _check(len(cn.vertex_cut) == cn.kappa and component_count_without(g, cn.vertex_cut) > 1, "vertex cut")
    if g.n >= 2:
        rest = Graph(g.n, [e for e in g.edges if e not in set(cn.edge_cut)])
        _check(len(cn.edge_cut) == cn.lambda_ and not is_connected(rest), "edge cut")
    rep.witnesses.update(vertex_cut=cn.vertex_cut, edge_cut=cn.edge_cut)
    if a.menger is not None:
        u, v = a.menger
        mr = connectivity.menger(g, u, v, a.mode)
        _check(connectivity.verify_menger(g, mr), "Menger certificate")
        rep.results["menger"] = {"mode": mr.mode, "source": mr.source, "target": mr.target, "value": len(mr.paths)}
        rep.witnesses["menger_paths"] = mr.paths
        rep.witnesses["menger_cut"] = mr.cut
    if a.ears or a.closed_ears:
        closed = bool(a.closed_ears)
        dec = connectivity.ear_decomposition(g, closed=closed)
        rep.results["ear_decomposition"] = bool(dec)
        if dec:
            _check(connectivity.verify_ears(g, dec, closed), "ear decomposition")
            rep.witnesses.update(ear_cycle=dec.cycle, ears=dec.ears)
        else:
            rep.results["violated_condition"] = dec.kind
            rep.witnesses["obstruction"] = dec.witness


def cmd_walk(a, rep: Report, ctx: dict):
    if a.tsp is not None:
        text = read_text(a.tsp)
        ctx["inputs"].append(text)
        w = parse_weight_matrix(text)
        tour, length = traversal.tsp_bruteforce(w, a.cap_tsp)
        if tour:
            closed = list(tour) + [tour[0]]
            _check(sum(w[x][y] for x, y in zip(closed, closed[1:])) == length, "tour length")
        rep.results.update(cities=len(w), length=length)
        rep.witnesses["tour"] = tour
        return
    if ctx["graph"] is None:
        raise UsageError("walk needs a GRAPH unless --tsp is given")
    g = ctx["graph"]
    modes = [m for m in ("euler", "hamilton", "closure", "toughness", "cycles") if getattr(a, m)]
    if not modes:
        modes = ["euler"]
    if "euler" in modes:
        r = traversal.euler(g)
        _check(_euler_ok(g, r), "Euler trail")
        rep.results["euler"] = r.kind
        rep.results["odd_vertices"] = r.odd_vertices
        if r.kind == "none":
            rep.results["violated_condition"] = r.reason
        else:
            rep.results["length"] = len(r.edge_order)
            rep.witnesses["trail"] = r.sequence
    g = _simple(g) if set(modes) - {"euler"} else g
    if "cycles" in modes:
        dec = traversal.cycle_decomposition(g)
        rep.results["cycle_decomposition"] = dec is not None
        if dec is not None:
            _check(_same_edges(g, [[tuple(sorted(e)) for e in zip(c, c[1:])] for c in dec]), "cycle decomposition")
            rep.witnesses["cycles"] = dec
        else:
            rep.results["violated_condition"] = "some vertex has odd degree"
    if "hamilton" in modes:
        if g.n > a.cap_hamilton:
            raise CapExceeded("hamilton_n", a.cap_hamilton, g.n)
        hr = traversal.hamilton(g, a.cap_hamilton)
        _check(_hamiltonian(g, hr.cycle, True) and _hamiltonian(g, hr.path, False), "Hamiltonian witnesses")
        rep.results.update(
            hamiltonian_cycle=hr.cycle is not None,
            hamiltonian_path=hr.path is not None,
            sufficient_conditions=hr.flags,
            closure_complete=hr.closure_complete,
        )
        rep.witnesses.update(cycle=hr.cycle, path=hr.path)
    if "closure" in modes:
        cl = traversal.closure(g)
        rep.results["closure_complete"] = is_complete(cl)
        rep.results["closure_m"] = cl.m
        rep.witnesses["closure_edges"] = cl.edges
        if a.orders:
            rng = random.Random(a.seed)
            same = all(traversal.closure(g, rng) == cl for _ in range(a.orders))
            rep.results["order_independent"] = same
        ctx["graph_out"] = cl
    if "toughness" in modes:
        t, s = traversal.toughness_certificate(g, a.cap_subset)
        rep.results["toughness"] = t
        if s or t == 0:
            c = component_count_without(g, s)
            _check(Fraction(len(s), c) == t if c > 1 else t == 0, "toughness set")
        rep.witnesses["tough_set"] = s


def cmd_match(a, rep: Report, ctx: dict):
    if a.poset is not None:
        text = read_text(a.poset)
        ctx["inputs"].append(text)
        p = parse_poset(text)
        dr = matching.dilworth(p, cap=a.cap_dilworth, method="matching" if p.n > a.cap_dilworth else "auto")
        _check(all(not p.comparable(x, y) for i, x in enumerate(dr.antichain) for y in dr.antichain[i + 1:]), "antichain")
        _check(all(p.leq[c[i]][c[i + 1]] for c in dr.chains for i in range(len(c) - 1)), "chains")
        _check(sorted(x for c in dr.chains for x in c) == list(range(p.n)), "chain partition")
        _check(len(dr.chains) == len(dr.antichain), "Dilworth equality")
        rep.results.update(width=len(dr.antichain), method=dr.method)
        rep.witnesses.update(antichain=dr.antichain, chains=dr.chains)
        return
    if a.matrix is not None:
        text = read_text(a.matrix)
        ctx["inputs"].append(text)
        mat = parse_matrix01(text)
        mm = matching.matrix_minmax(mat)
        rows = {i for i, _ in mm.ones}
        cols = {j for _, j in mm.ones}
        _check(len(rows) == len(cols) == len(mm.ones) and all(mat[i][j] for i, j in mm.ones), "independent ones")
        lr = {i for k, i in mm.lines if k == "row"}
        lc = {j for k, j in mm.lines if k == "col"}
        _check(all(i in lr or j in lc for i, r in enumerate(mat) for j, x in enumerate(r) if x), "line cover")
        rep.results["max_independent_ones"] = len(mm.ones)
        rep.results["min_cover_lines"] = len(mm.lines)
        rep.witnesses.update(ones=mm.ones, lines=mm.lines)
        return
    if ctx["graph"] is None:
        raise UsageError("match needs a GRAPH unless --poset or --matrix is given")
    g = _simple(ctx["graph"])
    if a.numbers:
        on = matching.optimization_numbers(g, a.cap_matching)
        rep.results.update(
            alpha=on.alpha, beta=on.beta, alpha_prime=on.alpha_prime, beta_prime=on.beta_prime,
            omega=on.omega, caro_wei=on.caro_wei,
        )
        _check(_is_vertex_cover(g, on.vertex_cover) and len(on.vertex_cover) == on.beta, "vertex cover")
        _check(matching.is_matching(g, on.matching) and len(on.matching) == on.alpha_prime, "matching")
        rep.witnesses.update(
            independent_set=on.independent_set, vertex_cover=on.vertex_cover,
            matching=on.matching, edge_cover=on.edge_cover, clique=on.clique,
        )
    elif a.deficiency:
        dr = matching.matching_deficiency(g, a.cap_subset)
        _check(matching.odd_components(g, dr.extremal_set) - len(dr.extremal_set) == dr.deficiency, "Tutte-Berge set")
        rep.results.update(deficiency=dr.deficiency, perfect_matching=dr.tutte_holds, odd_components=dr.odd_components)
        if not dr.tutte_holds:
            rep.results["violated_condition"] = f"o(G-S) > |S| for S={list(dr.extremal_set)}"
        rep.witnesses.update(extremal_set=dr.extremal_set, matching=dr.perfect_matching)
    elif a.factor is not None:
        tour = parse_int_list(a.tour) if a.tour else None
        fz = matching.factorize(g, a.factor, tour)
        _check(_same_edges(g, fz.parts), "factor parts cover the edges")
        for p in fz.parts:
            _check(set(_degrees_of(g.n, p)) == {fz.degree}, "factor is regular and spanning")
        rep.results.update(kind=fz.kind, count=len(fz.parts), degree=fz.degree)
        rep.witnesses["factors"] = fz.parts
    elif a.f_factor is not None:
        f = parse_int_list(a.f_factor)
        h = matching.f_factor(g, f)
        rep.results["f_factor"] = h is not None
        if h is not None:
            _check(list(h.degrees()) == list(f) and set(h.edges) <= set(g.edges), "f-factor degrees")
            rep.witnesses["edges"] = h.edges
        else:
            rep.results["violated_condition"] = "gadget graph has no perfect matching"
    elif a.arboricity:
        k, forests = matching.arboricity(g, a.cap_subset)
        _check(len(forests) == k and _same_edges(g, forests) and all(is_forest(g.n, f) for f in forests), "forests")
        rep.results["arboricity"] = k
        rep.witnesses["forests"] = forests
    else:
        mt, cert = matching.max_matching(g, cap=a.cap_matching)
        _check(matching.is_matching(g, mt.edges), "matching")
        if cert.cover is not None:
            _check(_is_vertex_cover(g, cert.cover) and len(cert.cover) == mt.size, "Konig cover")
        else:
            _check(matching.augmenting_path(g, mt.edges) is None, "no augmenting path")
        rep.results.update(size=mt.size, perfect=mt.perfect, certificate=cert.kind)
        rep.witnesses.update(matching=mt.edges, cover=cert.cover)
        if cert.hall_violator is not None:
            _check(len(cert.neighbourhood) < len(cert.hall_violator), "Hall violator")
            rep.witnesses.update(hall_violator=cert.hall_violator, neighbourhood=cert.neighbourhood)


def _complete_bipartite_parts(g: Graph) -> bool:
    bp = bipartition(g)
    return bp.bipartite and g.m == len(bp.parts[0]) * len(bp.parts[1]) and g.m > 0


def cmd_color(a, rep: Report, ctx: dict):
    g = _simple(ctx["graph"])
    mode, alg = a.mode, a.alg
    valid = {
        "vertex": ("greedy", "exact", "five"),
        "edge": ("exact", "vizing", "konig", "rotation"),
        "total": ("exact", "konig", "rotation"),
    }
    if alg not in valid[mode]:
        raise UsageError(f"--alg {alg} is not available for --mode {mode}; choose from {', '.join(valid[mode])}")
    extra: dict = {}
    if mode == "vertex":
        if alg == "greedy":
            ca = coloring.greedy_color(g, a.order)
            extra["welsh_powell_bound"] = coloring.welsh_powell_bound(g)
        elif alg == "exact":
            chi, ca = coloring.chromatic_number(g, a.cap_chromatic)
            extra["chromatic_number"] = chi
        else:
            if not planar.is_planar(g):
                raise UsageError("five-colouring needs a planar graph")
            ca = coloring.five_color_planar(g)
    elif mode == "edge":
        if alg == "exact":
            ci = coloring.chromatic_index(g, a.cap_index)
            ca = ci.coloring
            extra.update(chromatic_index=ci.value, klass=f"class {ci.klass}", overfull=ci.overfull)
        else:
            ca = coloring.edge_color(g, {"konig": "konig_bipartite", "rotation": "complete_rotation"}.get(alg, alg))
    else:
        if alg == "exact":
            ca = coloring.total_color(g, "exact", a.cap_chromatic)
            extra["total_chromatic_number"] = ca.k
        elif alg == "konig":
            ca = coloring.total_color(g, "bipartite_plus2")
        elif is_complete(g):
            ca = coloring.total_color(g, "complete")
        elif _complete_bipartite_parts(g):
            ca = coloring.total_color(g, "complete_bipartite")
        else:
            raise UsageError("total rotation scheme needs a complete or complete bipartite graph")
    _check(coloring.is_proper(g, ca), "proper colouring")
    rep.results.update(mode=mode, alg=alg, colors=ca.k, max_degree=max(g.degrees(), default=0))
    rep.results.update(extra)
    assign: dict[str, int] = {}
    for v, c in enumerate(ca.vertex_colors(g)):
        assign[str(v)] = c
    for (u, v), c in zip(g.edges, ca.edge_colors(g)):
        assign[f"{u}-{v}"] = c
    rep.witnesses["assignment"] = assign
    ctx["graph_out"] = g
    ctx["coloring"] = ca


def cmd_planar(a, rep: Report, ctx: dict):
    if a.genus is not None:
        fam, *ps = a.genus
        try:
            params = [int(p) for p in ps]
        except ValueError:
            raise UsageError("--genus takes FAMILY and integer parameters") from None
        ctx["inputs"].append(" ".join(a.genus))
        rep.results.update(family=fam, params=params, genus=planar.genus_formula(fam, *params))
        return
    if a.zarankiewicz is not None:
        m, n = a.zarankiewicz
        ctx["inputs"].append(f"{m} {n}")
        dr = planar.zarankiewicz_drawing(m, n)
        _check(planar.count_crossings(dr.coords, dr.edges) == dr.crossings, "crossing recount")
        rep.results.update(crossings=dr.crossings, zarankiewicz_number=planar.zarankiewicz_number(m, n))
        rep.witnesses["coords"] = dr.coords
        ctx["drawing"] = dr
        return
    if ctx["graph"] is None:
        raise UsageError("planar needs a GRAPH unless --genus or --zarankiewicz is given")
    g = _simple(ctx["graph"])
    ctx["graph_out"] = g
    if a.drawing is not None:
        text = read_text(a.drawing)
        ctx["inputs"].append(text)
        coords = parse_drawing(text, g.n)
        rep.results["crossings"] = planar.count_crossings(coords, g.edges)
        rep.witnesses["coords"] = coords
        ctx["drawing"] = planar.Drawing(tuple(coords), g.edges, rep.results["crossings"])
        return
    if a.rotation is not None:
        text = read_text(a.rotation)
        ctx["inputs"].append(text)
        r, genus = planar.euler_check(g, parse_rotation(text, g.n))
        rep.results.update(faces=r, genus=genus)
        return
    if a.max_faces:
        r, rot = planar.max_faces_rotation(g, a.cap_rotations)
        rep.results.update(faces=r, genus=(2 - g.n + g.m - r) // 2)
        rep.witnesses["rotation"] = rot
        return
    if a.outer:
        tr = planar.outerplanarity(g, a.cap_planar)
        rep.results.update(outerplanar=tr.outerplanar, planar=tr.planar)
        if tr.outer_witness is not None:
            _check(planar.verify_subdivision(g, tr.outer_witness), "outerplanarity obstruction")
            rep.witnesses["obstruction"] = _subdivision(tr.outer_witness)
            rep.results["violated_condition"] = f"contains a {tr.outer_witness.pattern} subdivision"
        return
    tr = planar.planarity(g, a.cap_planar, with_minor=a.minor)
    rep.results.update(planar=tr.planar, maximal_planar=tr.maximal_planar, crossing_lower_bound=tr.crossing_lower_bound)
    if tr.prefilter:
        rep.results["edge_count_filter"] = tr.prefilter
    if tr.planar:
        _check(planar.verify_block_faces([list(map(list, b)) for b in tr.faces]), "face certificate")
        rep.witnesses["faces"] = tr.faces
    else:
        _check(planar.verify_subdivision(g, tr.kuratowski), "Kuratowski subdivision")
        rep.results["violated_condition"] = f"contains a {tr.kuratowski.pattern} subdivision"
        rep.witnesses["kuratowski"] = _subdivision(tr.kuratowski)
        if a.minor:
            _check(tr.minor is not None and planar.verify_minor(g, tr.minor, tr.kuratowski.pattern), "minor")
            rep.witnesses["minor_branch_sets"] = tr.minor


def _subdivision(s: planar.Subdivision) -> dict:
    return {"pattern": s.pattern, "branch": s.branch, "paths": s.paths}


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the JSON report envelope")
    common.add_argument("--dot", action="store_true", help="emit the (coloured) graph as DOT")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised checks such as --orders")
    for name, (default, text) in CAPS.items():
        common.add_argument(f"--cap-{name}", type=int, default=default, help=f"{text} (default {default})")

    p = _Parser(prog="graphcert", description="Certified desk-scale graph algorithms.")
    p.add_argument("--version", action="version", version=f"graphcert {__version__}")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name: str, fn: Callable, helptext: str, graph: str | None = "required") -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=helptext, description=helptext)
        sp.set_defaults(func=fn, graph_arg=graph)
        if graph == "required":
            sp.add_argument("graph", metavar="GRAPH", help="edge-list file, '-' for stdin, or @family:p1,p2")
        elif graph == "optional":
            sp.add_argument("graph", metavar="GRAPH", nargs="?", help="edge-list file, '-' for stdin, or @family:p1,p2")
        return sp

    sp = add("gen", cmd_gen, "emit a named graph family as an edge list", graph=None)
    sp.add_argument("family", choices=families.FAMILIES)
    sp.add_argument("params", nargs="*", type=int)

    sp = add("info", cmd_info, "degrees, distances, components and bipartiteness")
    sp.add_argument("--walk", metavar="SEQ", help="classify a comma-separated vertex sequence")

    sp = add("transform", cmd_transform, "apply a graph operation and emit the result")
    sp.add_argument(
        "op",
        choices=("complement", "line", "total", "mycielski", "add-vertex", "delete-vertex", "delete-edge",
                 "add-edge", "subdivide", "contract", "union", "join", "product"),
    )
    sp.add_argument("args", nargs="*", help="operation arguments (vertices, a second GRAPH, product kind)")

    sp = add("iso", cmd_iso, "isomorphism or homomorphism test with an explicit map")
    sp.add_argument("other", metavar="GRAPH2")
    sp.add_argument("--hom", action="store_true", help="search for a homomorphism GRAPH -> GRAPH2")

    add("aut", cmd_aut, "automorphism group, orbits and transitivity")

    sp = add("degseq", cmd_degseq, "realise a degree sequence in a graph class", graph=None)
    sp.add_argument("sequence", metavar="SEQ", help="comma-separated degrees")
    sp.add_argument("--class", dest="klass", default="simple",
                    choices=("pseudo", "multi", "simple", "connected", "tree", "split", "pm"))

    sp = add("trees", cmd_trees, "tree tests, spanning-tree counts and Pruefer codes", graph="optional")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true", help="number of spanning trees")
    g.add_argument("--prufer-encode", action="store_true", help="Pruefer code of a labelled tree")
    g.add_argument("--prufer-decode", metavar="CODE", help="tree of a comma-separated code")
    g.add_argument("--center", action="store_true", help="centre of a tree")

    sp = add("connect", cmd_connect, "cut vertices, bridges, connectivity numbers and Menger paths")
    sp.add_argument("--menger", nargs=2, type=int, metavar=("U", "V"))
    sp.add_argument("--mode", choices=("vertex", "edge"), default="vertex")
    sp.add_argument("--ears", action="store_true", help="open ear decomposition")
    sp.add_argument("--closed-ears", action="store_true", help="closed-ear decomposition")

    sp = add("walk", cmd_walk, "Euler trails, Hamiltonicity, closure, toughness and TSP", graph="optional")
    sp.add_argument("--euler", action="store_true")
    sp.add_argument("--hamilton", action="store_true")
    sp.add_argument("--closure", action="store_true")
    sp.add_argument("--orders", type=int, default=0, metavar="K",
                    help="recompute the closure in K random orders drawn from --seed")
    sp.add_argument("--toughness", action="store_true")
    sp.add_argument("--cycles", action="store_true", help="decompose an even graph into cycles")
    sp.add_argument("--tsp", metavar="FILE", help="weight-matrix file for brute-force TSP")

    sp = add("match", cmd_match, "matchings, covers, factors, arboricity, posets and 0/1 matrices", graph="optional")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--numbers", action="store_true", help="alpha, beta, alpha', beta' with witnesses")
    g.add_argument("--deficiency", action="store_true", help="Tutte-Berge deficiency")
    g.add_argument("--factor", choices=("one_regular_bipartite", "two_even_regular", "one_K2n"))
    g.add_argument("--f-factor", metavar="F", help="comma-separated target degrees")
    g.add_argument("--arboricity", action="store_true")
    g.add_argument("--poset", metavar="FILE", help="Dilworth decomposition of a poset file")
    g.add_argument("--matrix", metavar="FILE", help="independent ones and line cover of a 0/1 matrix")
    sp.add_argument("--tour", metavar="SEQ", help="closed Euler tour for --factor one_K2n")

    sp = add("color", cmd_color, "vertex, edge and total colourings")
    sp.add_argument("--mode", choices=("vertex", "edge", "total"), default="vertex")
    sp.add_argument("--alg", choices=("greedy", "exact", "vizing", "konig", "rotation", "five"), default="exact")
    sp.add_argument("--order", choices=("given", "welsh_powell", "smallest_last"), default="given",
                    help="vertex order for --alg greedy")

    sp = add("planar", cmd_planar, "planarity, outerplanarity, genus and crossings", graph="optional")
    sp.add_argument("--outer", action="store_true", help="outerplanarity with a K4 / K2,3 witness")
    sp.add_argument("--minor", action="store_true", help="also report K5 / K3,3 minor branch sets")
    sp.add_argument("--rotation", metavar="FILE", help="faces and genus of a rotation-system sidecar")
    sp.add_argument("--max-faces", action="store_true", help="rotation system with the most faces")
    sp.add_argument("--drawing", metavar="FILE", help="count crossings of an 'x y' drawing")
    sp.add_argument("--genus", nargs="+", metavar="ARG", help="FAMILY P...: closed-form genus")
    sp.add_argument("--zarankiewicz", nargs=2, type=int, metavar=("M", "N"), help="Zarankiewicz drawing of K_{M,N}")
    return p


# --------------------------------------------------------------------- run


@dataclass
class RunResult:
    code: int
    report: Report | None
    stdout: str
    stderr: str


def run(argv: Sequence[str] | None = None) -> RunResult:
    """Execute one command without touching the process streams."""
    parser = build_parser()
    try:
        a = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as exc:
        return RunResult(1, None, "", f"usage error: {exc}")
    except SystemExit as exc:  # --help / --version
        return RunResult(int(exc.code or 0), None, "", "")
    rep = Report(a.command)
    ctx: dict = {"inputs": [a.command], "graph": None, "graph_out": None, "coloring": None, "drawing": None}
    try:
        if a.graph_arg is not None and a.graph is not None:
            ctx["graph"] = load_graph(a.graph)
            ctx["inputs"].append(emit_edge_list(ctx["graph"]))
        a.func(a, rep, ctx)
    except UsageError as exc:
        return RunResult(1, rep, "", f"usage error: {exc}")
    except CapExceeded as exc:
        rep.input_digest = digest(ctx["inputs"])
        rep.caps_hit.append({"cap": exc.cap, "limit": exc.limit, "actual": exc.actual})
        out = rep.to_json() if a.json else rep.to_text()
        return RunResult(2, rep, out, f"cap exceeded: {exc}\n")
    except (ParseError, BadParams) as exc:
        return RunResult(1, rep, "", f"input error: {exc}\n")
    except GraphError as exc:
        return RunResult(1, rep, "", f"input error ({exc.code}): {exc}\n")
    rep.input_digest = digest(ctx["inputs"])
    if a.json:
        return RunResult(0, rep, rep.to_json(), "")
    if a.dot and ctx["graph_out"] is not None:
        return RunResult(0, rep, emit_dot(ctx["graph_out"], ctx["coloring"]), "")
    if a.command in ("gen", "transform") or (a.command == "trees" and a.prufer_decode is not None):
        return RunResult(0, rep, emit_edge_list(ctx["graph_out"]), "")
    if ctx["drawing"] is not None:
        dr = ctx["drawing"]
        body = "".join(f"{x} {y}\n" for x, y in dr.coords)
        return RunResult(0, rep, body + f"crossings {dr.crossings}\n", "")
    return RunResult(0, rep, rep.to_text(), "")


def main(argv: Sequence[str] | None = None) -> int:
    r = run(argv)
    sys.stdout.write(r.stdout)
    if r.stderr:
        sys.stderr.write(r.stderr if r.stderr.endswith("\n") else r.stderr + "\n")
    return r.code


if __name__ == "__main__":
    sys.exit(main())
