#!/usr/bin/env python3

import os
import sys
import json
import runpy

import jsonschema
import pytest

from sdscodes.utils import ProjectEnv
from sdscodes.tools.sds_cli import run


def schema(name):
    with open(os.path.join(ProjectEnv.schemas_path, f"{name}.json")) as fp:
        return json.load(fp)


def invoke(capsys, *argv):
    status = run(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def invoke_json(capsys, schema_name, *argv):
    status, out, _ = invoke(capsys, *argv, "--deterministic")
    document = json.loads(out)
    jsonschema.validate(document, schema(schema_name))
    return status, document


def last_error(err):
    document = json.loads(err.strip().splitlines()[-1])
    jsonschema.validate(document, schema("error"))
    return document


def test_simulate(capsys):
    status, doc = invoke_json(capsys, "simulate", "simulate", "--state", "0001")
    assert status == 0
    assert doc["image"] == "0111"
    assert [b["state"] for b in doc["blocks"]] == ["0001", "0101", "0101", "0101", "0111"]
    assert [b["vertex"] for b in doc["blocks"]] == [None, 2, 4, 1, 3]
    assert "timestamp" not in doc


def test_simulate_text_on_a_complete_graph(capsys):
    status, out, _ = invoke(capsys, "simulate", "--complete", "2", "--table", "1010",
                            "--state", "00", "--format", "text")
    assert status == 0
    assert out.splitlines()[-1] == "F(00) = 11"


def test_timestamp_unless_deterministic(capsys):
    status, out, _ = invoke(capsys, "simulate", "--state", "0001")
    assert status == 0
    assert "timestamp" in json.loads(out)


def test_phase_space(capsys, tmp_path):
    status, doc = invoke_json(capsys, "phase_space", "phase-space")
    assert status == 0
    assert doc["census"] == {"2": 1}
    assert len(doc["edges"]) == 16
    assert doc["fixed_points"] == []
    out = tmp_path / "example1.dot"
    assert run(["phase-space", "--format", "dot", "--out", str(out)]) == 0
    assert out.read_text().count("->") == 16


def test_eta(capsys):
    status, doc = invoke_json(capsys, "eta", "eta", "--n", "3")
    assert status == 0
    assert doc["eta"] == 1


def test_eta_cap(capsys):
    status, _, err = invoke(capsys, "eta", "--n", "6")
    assert status == 3
    assert last_error(err)["error"] == "budget"


def test_clique(capsys):
    status, doc = invoke_json(capsys, "clique", "clique", "--spec", "J:5")
    assert status == 0
    assert (doc["size"], doc["optimal"], doc["vertex_count"]) == (4, True, 32)


def test_clique_budget_still_reports(capsys, write_lines):
    path = write_lines("c5.graph", ["000 001", "001 010", "010 011", "011 100", "100 000"])
    status, doc = invoke_json(capsys, "clique", "clique", "--edges", path, "--budget-nodes", "1")
    assert status == 3
    assert not doc["optimal"]
    assert (doc["size"], doc["upper_bound"]) == (2, 3)


def test_construct_from_clique_and_code(capsys, write_lines):
    status, doc = invoke_json(capsys, "construct", "construct", write_lines("k.txt", ["0000"]))
    assert status == 0
    assert doc["table"] == "1000000010001010"
    assert doc["lower_bound_met"]
    status, doc = invoke_json(capsys, "construct", "construct",
                              write_lines("c.txt", ["000", "111"]), "--kind", "code")
    assert status == 0
    assert doc["n"] == 4
    assert doc["members"] == ["0000", "0101"]
    assert doc["two_cycles"] == 2


def test_construct_rejects_non_cliques(capsys, write_lines):
    status, _, err = invoke(capsys, "construct", write_lines("bad.txt", ["00000", "01000"]))
    assert status == 2
    assert last_error(err)["error"] == "invalid_clique"


def test_codes(capsys, write_lines):
    status, doc = invoke_json(capsys, "codes", "codes", "--r", "3")
    assert status == 0
    assert (doc["size"], doc["min_distance"], doc["length"]) == (16, 3, 7)
    status, doc = invoke_json(capsys, "codes", "codes", "--check", write_lines("one.txt", ["0110"]))
    assert status == 0
    assert doc["min_distance"] == "inf"


def test_verify(capsys):
    status, doc = invoke_json(capsys, "verify", "verify", "--n", "4")
    assert status == 0
    assert doc["agree"]
    assert list(doc["legs"]) == ["brute_eta", "omega_hatH", "omega_H", "omega_J", "a_ref",
                                 "lemma2_lower"]
    assert set(doc["legs"].values()) == {2}
    assert doc["a_ref_provenance"] == "formula"


def test_sweep(capsys):
    status, out, _ = invoke(capsys, "sweep", "--m-min", "2", "--m-max", "4")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "m,omega_hatH,omega_H,omega_J,a_ref,optimal,agree"
    assert len(lines) == 4
    status, doc = invoke_json(capsys, "sweep", "sweep", "--m-max", "3", "--format", "json")
    assert [row["omega_J"] for row in doc["rows"]] == [1, 2]


def test_properties(capsys):
    status, doc = invoke_json(capsys, "properties", "properties", "--trials", "20", "--seed", "1")
    assert status == 0
    assert doc["violations"] == 0
    assert len(doc["results"]) == 3


@pytest.mark.parametrize("argv, kind", [
    (["verify"], "usage"),
    (["clique"], "usage"),
    (["codes", "--r", "3", "--check", "x.txt"], "usage"),
    (["eta", "--n", "3", "--format", "dot"], "usage"),
    (["simulate", "--state", "001"], "dimension"),
    (["codes", "--check", "missing.txt"], "file_format"),
    (["clique", "--spec", "J7"], "file_format"),
])
def test_usage_errors(capsys, argv, kind):
    status, out, err = invoke(capsys, *argv)
    assert status == 2
    assert out == ""
    assert last_error(err)["error"] == kind


def test_package_runs_as_a_module(capsys, monkeypatch):
    monkeypatch.setattr(sys, "argv", ["sdscodes", "codes", "--r", "2", "--deterministic"])
    with pytest.raises(SystemExit) as info:
        runpy.run_module("sdscodes", run_name="__main__")
    assert info.value.code == 0
    document = json.loads(capsys.readouterr().out)
    jsonschema.validate(document, schema("codes"))
    assert document["words"] == ["000", "111"]
