import json
import subprocess
import sys

import pytest

from groupoidal.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_analyze_catalog(capsys):
    code, out = run(capsys, "analyze", "catalog:brandt(2)")
    assert code == 0 and out["schema"] == 1
    assert out["congruence_free"] is True and out["tight"] is True
    assert out["spectrum"]["tight"] == 2
    code, out = run(capsys, "analyze", "catalog:diamond")
    assert out["tight"] is False


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "analyze", str(bad))[0] == 1
    na = tmp_path / "na.json"
    na.write_text(json.dumps({"n": 2, "mul": [[1, 1], [0, 0]]}))
    code, out = run(capsys, "analyze", str(na))
    assert code == 2 and out["kind"] == "NotAssociative" and len(out["witness"]) == 3
    assert run(capsys, "analyze", "catalog:nonsense")[0] == 2


def test_generator_input(capsys, tmp_path):
    f = tmp_path / "gens.json"
    f.write_text(json.dumps({"ambient": 2, "generators": [{"pairs": [[0, 1]]}]}))
    code, out = run(capsys, "analyze", str(f))
    assert code == 0 and out["semigroup"]["size"] == 5 and out["congruence_free"]


@pytest.mark.parametrize(
    "argv,verdict,method",
    [
        (["simplicity", "contracted", "catalog:brandt(2)", "--field", "fp:2"], True, "both-agree"),
        (["semiprimitivity", "semigroup-algebra", "catalog:truncated_clifford(2)", "--field", "fp:2"], False, None),
        (["simplicity", "contracted", "catalog:chain(3)", "--field", "q"], False, None),
        (["primitivity", "tight-groupoid", "catalog:diamond", "--field", "fp:3"], False, "both-agree"),
        (["congruence-free", "contracted", "catalog:brandt(2)"], True, "both-agree"),
        (["tight", "contracted", "catalog:diamond"], False, "both-agree"),
        (["hausdorff", "universal", "catalog:diamond"], True, "groupoid-criterion"),
    ],
)
def test_check(capsys, argv, verdict, method):
    code, out = run(capsys, "check", *argv)
    assert code == 0 and out["verdict"] is verdict
    if method:
        assert out["method"] == method


def test_algebra_and_groupoid(capsys):
    code, out = run(capsys, "algebra", "catalog:truncated_clifford(2)", "--field", "fp:2", "--tight")
    assert out["radical_dim"] == 1 and out["tight"]["kernel_rank"] == out["tight"]["ideal_dim"]
    code, out = run(capsys, "algebra", "catalog:brandt(3)", "--field", "fp:3")
    assert out["wedderburn_dims"] == [9] and out["simplicity"]["verdict"] == "simple"
    code, out = run(capsys, "groupoid", "catalog:brandt(2)", "--kind", "contracted")
    g = out["groupoid"]
    assert len(g["arrows"]) == 4 and g["minimal"] and g["effective"]
    code, out = run(capsys, "groupoid", "groupoid:pair(3)")
    assert len(out["groupoid"]["arrows"]) == 9


def test_leavitt_and_catalog(capsys, tmp_path):
    f = tmp_path / "g.json"
    f.write_text(json.dumps({"vertices": 3, "edges": [[0, 1], [1, 2]]}))
    out_path = tmp_path / "out.json"
    code, out = run(capsys, "leavitt", str(f), "--field", "fp:2", "--json", str(out_path))
    assert code == 0 and out["dim"] == 9 and out["wedderburn"] == [9]
    assert json.loads(out_path.read_text()) == out
    cyc = tmp_path / "c.json"
    cyc.write_text(json.dumps({"vertices": 1, "edges": [[0, 0]]}))
    assert run(capsys, "leavitt", str(cyc))[0] == 2
    code, out = run(capsys, "catalog", "list")
    assert "brandt(2)" in out["semigroups"]
    code, out = run(capsys, "catalog", "get", "diamond")
    assert out["semigroup"]["n"] == 4


def test_output_is_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "groupoidal", "check", "primitivity", "contracted", "catalog:brandt(3)", "--field", "fp:2"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["verdict"] is True
