import io
import json
from pathlib import Path

import jsonschema
import pytest

from flowdecomp.cli import run_cli

ROOT = Path(__file__).parent
DATA = ROOT / "data"
SCHEMA = json.loads((ROOT.parent / "docs" / "schema.json").read_text())


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def check_schema(doc):
    jsonschema.Draft202012Validator(SCHEMA).validate(doc)


def test_analyze_diamond():
    code, out, _ = run("analyze", DATA / "diamond.max")
    assert code == 0
    doc = json.loads(out)
    check_schema(doc)
    assert doc["max_flow_value"] == 2
    assert [e["class"] for e in doc["edges"]] == ["A"] * 4
    assert doc["network"] == {"vertices": 4, "edges": 4, "source": 1, "sink": 4}


@pytest.mark.parametrize("name", ["diamond", "n3", "n4"])
def test_analyze_matches_golden(name):
    code, out, _ = run("analyze", DATA / f"{name}.max", "--cuts-limit", 100)
    assert code == 0
    assert out == (ROOT / "golden" / f"{name}.analyze.json").read_text()


def test_analyze_no_floats():
    _, out, _ = run("analyze", DATA / "n3.max", "--cuts-limit", 10)
    json.loads(out, parse_float=lambda s: pytest.fail(f"float {s} in output"))


def test_maxflow():
    code, out, _ = run("maxflow", DATA / "single.max")
    doc = json.loads(out)
    check_schema(doc)
    assert (code, doc["max_flow_value"], doc["flows"]) == (0, 5, [5])


def test_cuts_stream():
    code, out, _ = run("cuts", DATA / "diamond.max", "--limit", 10)
    lines = [json.loads(x) for x in out.splitlines()]
    for doc in lines:
        check_schema(doc)
    assert code == 0
    assert len(lines) == 5
    assert lines[-1]["kind"] == "cuts-summary"
    assert lines[-1]["exhausted"] is True and lines[-1]["count"] == 4


def test_cuts_truncated():
    _, out, _ = run("cuts", DATA / "diamond.max", "--limit", 3)
    assert json.loads(out.splitlines()[-1])["exhausted"] is False


@pytest.mark.parametrize("flag, side", [("--minimal", [1]), ("--maximal", [1, 2, 3])])
def test_cuts_extremes(flag, side):
    _, out, _ = run("cuts", DATA / "diamond.max", flag)
    [line] = out.splitlines()
    assert json.loads(line)["source_side"] == side


def test_jump():
    code, out, _ = run("jump", DATA / "n4.max", 2, 3)
    doc = json.loads(out)
    check_schema(doc)
    assert (code, doc["jump"], doc["witness"]) == (0, True, [4])
    _, out, _ = run("jump", DATA / "n3.max", 2, 3)
    assert json.loads(out)["jump"] is False


def test_jump_bad_vertex():
    assert run("jump", DATA / "n4.max", 2, 9)[0] == 2


def test_potential_validate(tmp_path):
    pi = tmp_path / "pi.txt"
    pi.write_text("1 1/1\n2 0/1\n3 1/1\n4 0/1\n")
    code, out, _ = run("potential", "validate", DATA / "n4.max", pi)
    check_schema(json.loads(out))
    assert code == 0 and json.loads(out)["valid"] is True
    pi.write_text("1 1/1\n2 1/1\n3 0/1\n4 0/1\n")
    code, out, _ = run("potential", "validate", DATA / "n4.max", pi)
    doc = json.loads(out)
    check_schema(doc)
    assert code == 1
    assert doc["violations"] == [
        {"kind": "dummy-ii", "edge": 4, "detail": "edge 4 (1->2) dummy II but falls 1 -> 0"}
    ]


def test_potential_sample_then_decompose(tmp_path):
    code, out, _ = run("potential", "sample", DATA / "diamond.max", "--seed", 3)
    assert code == 0
    pi = tmp_path / "pi.txt"
    pi.write_text(out)
    code, out, _ = run("potential", "decompose", DATA / "diamond.max", pi)
    doc = json.loads(out)
    check_schema(doc)
    assert code == 0
    assert doc["sets_are_min_cuts"] and doc["reconstructs"] and doc["dual_optimal"]
    assert doc["thresholds"][-1] == "1/1"


def test_potential_decompose_diamond_half(tmp_path):
    pi = tmp_path / "pi.txt"
    pi.write_text("1 1/1\n2 1/2\n3 1/2\n4 0/1\n")
    _, out, _ = run("potential", "decompose", DATA / "diamond.max", pi)
    doc = json.loads(out)
    assert doc["thresholds"] == ["1/2", "1/1"]
    assert doc["sets"] == [[1, 2, 3], [1]]
    assert doc["diff_star"] == ["1/2"] * 4


def test_potential_missing_vertex_is_parse_error(tmp_path):
    pi = tmp_path / "pi.txt"
    pi.write_text("1 1/1\n")
    assert run("potential", "validate", DATA / "n4.max", pi)[0] == 3


@pytest.mark.parametrize("name", ["diamond", "n3", "n4", "single"])
def test_verify(name):
    code, out, _ = run("verify", DATA / f"{name}.max")
    doc = json.loads(out)
    check_schema(doc)
    assert code == 0 and doc["ok"]


def test_verify_guard(tmp_path):
    net = tmp_path / "big.max"
    arcs = "".join("a 1 2 9\n" for _ in range(9))
    net.write_text(f"p max 2 9\nn 1 s\nn 2 t\n{arcs}")
    code, _, err = run("verify", net)
    assert code == 4
    assert "10" in err


def test_export_dot():
    code, out, _ = run("export-dot", DATA / "n4.max")
    assert code == 0
    assert out.count("color=red ") == 4
    assert 'v2 -> v3 [label="0/1" color=green' in out
    assert out.count("subgraph cluster_") == 4


def test_export_dot_n3_cluster():
    _, out, _ = run("export-dot", DATA / "n3.max")
    assert 'label="B1: Transfer";' in out
    assert out.count("color=black ") == 2
    assert out.count("color=red ") == 4


def test_export_dot_diamond():
    _, out, _ = run("export-dot", DATA / "diamond.max")
    assert out.count("color=red ") == 4
    assert out.count("subgraph cluster_") == 4


def test_parse_error_exit(tmp_path):
    bad = tmp_path / "bad.max"
    bad.write_text("p max 2 1\nn 1 s\nn 2 t\na 1 1 3\n")
    code, _, err = run("analyze", bad)
    assert code == 3
    assert "self-loop" in err and "line 4" in err


def test_usage_errors():
    assert run()[0] == 2
    assert run("bogus")[0] == 2
    assert run("cuts", DATA / "diamond.max", "--limit", 0)[0] == 2
    assert run("analyze", DATA / "missing.max")[0] == 2
