"""Command-line front end, file formats and the report envelope."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from graphcert.cli import (
    COMMANDS,
    emit_dot,
    parse_drawing,
    parse_matrix01,
    parse_poset,
    parse_rotation,
    parse_weight_matrix,
    run,
)
from graphcert.coloring import edge_color
from graphcert.errors import ParseError
from graphcert.families import complete, petersen
from graphcert.graphcore import Graph, MultiGraph, emit_edge_list, parse_edge_list

CIRCUIT = [1, 2, 6, 7, 8, 6, 10, 8, 9, 10, 5, 2, 3, 5, 4, 3, 1]
FLEURY_TEXT = "10 16 simple\n" + "".join(f"{a - 1} {b - 1}\n" for a, b in zip(CIRCUIT, CIRCUIT[1:]))


def call(*argv: str):
    r = run(list(argv) + ["--json"])
    return r, (json.loads(r.stdout) if r.stdout.startswith("{") else None)


@pytest.fixture
def files(tmp_path):
    def write(name: str, text: str) -> str:
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def test_edge_list_examples():
    assert parse_edge_list("3 3 simple\n0 1\n1 2\n0 2") == complete(3)
    g = parse_edge_list("2 1 pseudo\n0 0")
    assert isinstance(g, MultiGraph) and g.degree(0) == 2
    with pytest.raises(ParseError) as ei:
        parse_edge_list("three 3 simple\n0 1")
    assert ei.value.line == 1


def test_emit_dot():
    assert emit_dot(Graph(2, [(0, 1)])) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n"
    dot = emit_dot(petersen(), edge_color(petersen(), "vizing"))
    assert sum("--" in line and "color_class=" in line for line in dot.splitlines()) == 15
    assert emit_dot(Graph(0)) == "graph G {\n}\n"


def test_commands_listed():
    assert set(COMMANDS) == {"gen", "info", "transform", "iso", "aut", "degseq", "trees", "connect",
                             "walk", "match", "color", "planar"}
    for c in COMMANDS:
        assert run([c, "--help"]).code == 0


def test_degseq_example():
    r, d = call("degseq", "--class", "simple", "3,3,3,1")
    assert r.code == 0 and d["results"]["realizable"] is False
    assert d["results"]["erdos_gallai"]["failing_k"] is not None
    r, d = call("degseq", "5,5,3,3,2,2,2")
    assert r.code == 0 and d["results"]["realizable"] and len(d["witnesses"]["edges"]) == 11
    r, d = call("degseq", "--class", "multi", "5,2,1")
    assert d["results"]["realizable"] is False and d["results"]["violated_condition"]


def test_color_petersen_vizing(files):
    path = files("petersen.el", emit_edge_list(petersen()))
    r, d = call("color", "--mode", "edge", "--alg", "vizing", path)
    assert r.code == 0 and d["results"]["colors"] == 4
    assert len(d["witnesses"]["assignment"]) == 15


def test_walk_euler_figure(files):
    path = files("fig413.el", FLEURY_TEXT)
    r, d = call("walk", "--euler", path)
    assert r.code == 0 and d["results"]["euler"] == "circuit" and d["results"]["length"] == 16
    trail = d["witnesses"]["trail"]
    assert trail[0] == trail[-1] and len(trail) == 17


def test_results_and_witnesses():
    _, d = call("aut", "@petersen")
    assert d["results"]["group_order"] == 120
    _, d = call("trees", "--count", "@complete:5")
    assert d["results"]["spanning_trees"] == 125
    _, d = call("walk", "--toughness", "@petersen")
    assert d["results"]["toughness"] == "4/3"
    _, d = call("match", "--arboricity", "@complete:5")
    assert d["results"]["arboricity"] == 3 and len(d["witnesses"]["forests"]) == 3
    _, d = call("color", "--mode", "total", "@complete:4")
    assert d["results"]["total_chromatic_number"] == 5
    _, d = call("planar", "@complete:5", "--minor")
    assert d["results"]["planar"] is False and d["witnesses"]["minor_branch_sets"]
    _, d = call("planar", "--zarankiewicz", "4", "5")
    assert d["results"]["crossings"] == 8
    _, d = call("connect", "--menger", "0", "7", "@petersen")
    assert d["results"]["menger"]["value"] == 3 and len(d["witnesses"]["menger_paths"]) == 3
    _, d = call("iso", "@cycle:5", "@cycle:5")
    assert d["results"]["isomorphic"] is True


def test_negative_verdict_exits_zero():
    r, d = call("walk", "--hamilton", "@petersen")
    assert r.code == 0 and d["results"]["hamiltonian_cycle"] is False
    r, d = call("planar", "--outer", "@complete:4")
    assert r.code == 0 and d["results"]["outerplanar"] is False and d["witnesses"]["obstruction"]


def test_exit_codes():
    r = run(["gen", "nosuch"])
    assert r.code == 1 and "usage" in r.stderr
    r = run(["degseq", "1,x"])
    assert r.code == 1
    r = run(["info", "/nonexistent/file.el"])
    assert r.code == 1
    r, d = call("match", "--numbers", "@cycle:40")
    assert r.code == 2 and d["caps_hit"] == [{"cap": "optimization_n", "limit": 18, "actual": 40}]
    r = run(["match", "--numbers", "--cap-matching", "50", "@cycle:40"])
    assert r.code == 0


def test_parse_error_reports_line(files):
    path = files("bad.el", "3 2 simple\n0 1\n1 x\n")
    r = run(["info", path])
    assert r.code == 1 and "line 3" in r.stderr


def test_determinism():
    for argv in (["aut", "@petersen", "--json"], ["color", "--alg", "exact", "@petersen"],
                 ["walk", "--closure", "--orders", "5", "@petersen", "--json"]):
        outs = {run(argv).stdout for _ in range(3)}
        assert len(outs) == 1
    a = run(["walk", "--closure", "@petersen", "--json", "--seed", "1"]).stdout
    b = run(["walk", "--closure", "@petersen", "--json", "--seed", "2"]).stdout
    assert a == b


def test_json_key_order():
    _, d = call("info", "@cycle:4")
    assert list(d) == ["command", "input_digest", "results", "witnesses", "caps_hit", "version"]


def test_gen_and_transform_emit_edge_lists():
    r = run(["gen", "petersen"])
    assert parse_edge_list(r.stdout) == petersen()
    r = run(["transform", "@cycle:5", "complement"])
    assert parse_edge_list(r.stdout).m == 5
    r = run(["color", "--dot", "@cycle:4"])
    assert r.stdout.startswith("graph G {") and "color_class=" in r.stdout


def test_side_formats():
    assert parse_weight_matrix("2\n0 1.5\n1.5 0\n") == [[0, 1.5], [1.5, 0]]
    with pytest.raises(ParseError) as ei:
        parse_weight_matrix("2\n0 1\n1\n")
    assert ei.value.line == 3
    p = parse_poset("3\n0 1\n1 2\n")
    assert p.leq[0][2]
    assert parse_matrix01("101\n0 1 0\n") == [[1, 0, 1], [0, 1, 0]]
    with pytest.raises(ParseError):
        parse_matrix01("12\n")
    assert parse_rotation("0 1 2\n1 0\n2 0\n", 3) == [[1, 2], [0], [0]]
    with pytest.raises(ParseError):
        parse_rotation("0 1\n0 1\n", 2)
    assert parse_drawing("0 0\n1 -1\n", 2) == [(0, 0), (1, -1)]


def test_file_driven_commands(files):
    poset = files("p.txt", "4\n0 1\n2 3\n")
    _, d = call("match", "--poset", poset)
    assert len(d["witnesses"]["antichain"]) == 2
    mat = files("m.txt", "10100\n00011\n00101\n01010\n")
    _, d = call("match", "--matrix", mat)
    assert len(d["witnesses"]["ones"]) == 4
    rot = files("r.txt", "0 1 2 3\n1 0 3 2\n2 0 1 3\n3 0 2 1\n")
    _, d = call("planar", "--rotation", rot, "@complete:4")
    assert d["results"]["faces"] == 4 and d["results"]["genus"] == 0
    w = files("w.txt", "3\n0 1 2\n1 0 3\n2 3 0\n")
    r, d = call("walk", "--tsp", w)
    assert r.code == 0 and d["results"]["length"] == 6 and d["witnesses"]["tour"] == [0, 1, 2]


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "graphcert.cli", "info", "@complete:3"],
                         capture_output=True, text=True, check=True)
    assert out.stdout.startswith("info\n") and "n: 3" in out.stdout
