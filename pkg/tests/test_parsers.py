#!/usr/bin/env python3

import json

import pytest

from sdscodes.errors import FileFormatError
from sdscodes.utils import ProjectEnv
from sdscodes.dynamics import SdsDefinition, phase_space
from sdscodes.graphs import ImplicitGraphSpec, materialize, max_clique
from sdscodes.coding import hamming_code
from sdscodes.parsers import parse_sds, read_code, read_edge_list, read_sds
from sdscodes.generators import (
    code_file, edge_list, export_graph, export_phase_space, phase_space_document, sds_document,
    write_sds,
)


def example1_data():
    with open(ProjectEnv.example1_file) as fp:
        return json.load(fp)


# ============================================================================
#  SDS definitions
# ============================================================================

def test_read_example1(example1):
    assert example1.n == 4
    assert tuple(example1.order) == (2, 4, 1, 3)
    assert [f.bitstring for f in example1.functions] == [
        "0101101001101001", "1110", "01101001", "01010110"]


def test_polynomial_only_definition():
    data = example1_data()
    for entry in data["functions"]:
        del entry["table"]
    sds = parse_sds(data)
    assert [f.bitstring for f in sds.functions][1] == "1110"


def test_table_and_polynomial_must_agree():
    data = example1_data()
    data["functions"][1]["polynomial"] = "x1 + x2"
    with pytest.raises(FileFormatError):
        parse_sds(data)


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("n"),
    lambda d: d["functions"].pop(),
    lambda d: d.__setitem__("order", [1, 1, 2, 3]),
    lambda d: d.__setitem__("edges", [[1, 5]]),
    lambda d: d["functions"][0].pop("table") and d["functions"][0].pop("polynomial"),
])
def test_malformed_definitions(mutate):
    data = example1_data()
    mutate(data)
    with pytest.raises(FileFormatError):
        parse_sds(data)


def test_bad_files(tmp_path):
    with pytest.raises(FileFormatError):
        read_sds(str(tmp_path / "missing.json"))
    broken = tmp_path / "broken.json"
    broken.write_text("{\"n\": 4,")
    with pytest.raises(FileFormatError):
        read_sds(str(broken))


def test_write_then_read(tmp_path, example1):
    path = str(tmp_path / "sds.json")
    write_sds(example1, path)
    again = read_sds(path)
    assert again.functions == example1.functions
    assert again.order == example1.order
    assert again.graph == example1.graph
    assert sds_document(SdsDefinition.complete(2, "1010"))["edges"] == [[1, 2]]


# ============================================================================
#  Code files and edge lists
# ============================================================================

def test_read_code(write_lines):
    path = write_lines("code.txt", ["# repetition code", "000", "", "111"])
    code = read_code(path)
    assert code.labels == ["000", "111"]


@pytest.mark.parametrize("lines", [
    ["000", "0111"],
    ["000", "0x1"],
    ["000", "000"],
    ["# nothing"],
])
def test_bad_code_files(write_lines, lines):
    with pytest.raises(FileFormatError):
        read_code(write_lines("bad.txt", lines))


def test_missing_code_file(tmp_path):
    with pytest.raises(FileFormatError):
        read_code(str(tmp_path / "none.txt"))


def test_code_file_text(write_lines):
    text = code_file(hamming_code(3), "Hamming code r=3")
    assert text.splitlines()[0] == "# Hamming code r=3"
    assert len(text.splitlines()) == 17
    assert read_code(write_lines("h.txt", text.splitlines())) == hamming_code(3)


def test_edge_list(write_lines):
    j3 = materialize(ImplicitGraphSpec("J", 3))
    text = export_graph(j3, "edges")
    assert text == edge_list(j3)
    assert "000 111" in text.splitlines()
    g = read_edge_list(write_lines("j3.graph", text.splitlines()))
    assert (len(g), g.edge_count) == (8, 4)
    assert max_clique(g).size == 2


def test_edge_list_isolated_vertices(write_lines):
    g = read_edge_list(write_lines("g.graph", ["00 11", "01"]))
    assert (len(g), g.edge_count) == (3, 1)
    assert "01" in edge_list(g).splitlines()
    with pytest.raises(FileFormatError):
        read_edge_list(write_lines("bad.graph", ["00 111"]))


# ============================================================================
#  Exports
# ============================================================================

def test_phase_space_exports(example1):
    ps = phase_space(example1)
    document = phase_space_document(ps)
    assert document["census"] == {"2": 1}
    assert ["1011", "0110"] in document["edges"]
    assert json.loads(export_phase_space(ps, "json")) == document
    dot = export_phase_space(ps, "dot")
    assert dot.count("->") == 16
    assert '"1011"' in dot


def test_graph_dot_export():
    dot = export_graph(materialize(ImplicitGraphSpec("J", 3)), "dot")
    assert dot.count(" -- ") == 4
    assert '"000" -- "111"' in dot
