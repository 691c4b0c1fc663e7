"""Command line interface: JSON output, exit codes and determinism."""

import json

import pytest

from curvelab import build_truncation, loads_surface
from curvelab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.fixture
def loch4(tmp_path, capsys):
    path = tmp_path / "l4.json"
    code, _ = run(capsys, "gen", "--model", "loch_ness", "--depth", "4", "--out", str(path))
    assert code == 0
    return str(path)


def test_gen_writes_and_echoes_the_same_bytes(tmp_path, capsys):
    path = tmp_path / "surface.json"
    code, out = run(capsys, "gen", "--model", "ladder", "--depth", "2", "--out", str(path))
    assert code == 0
    assert out == path.read_text()
    g = loads_surface(out)
    assert g == build_truncation("ladder", 2)


def test_gen_finite_surface(capsys):
    code, out = run(capsys, "gen", "--genus", "2", "--boundary", "1")
    assert code == 0
    assert out.endswith("\n")
    assert len(loads_surface(out).pants) == 3


def test_gen_requires_a_recipe(capsys):
    code, out = run(capsys, "gen")
    assert code == 1
    assert json.loads(out)["error"] == "FormatError"


def test_output_is_deterministic(capsys):
    args = ("gen", "--model", "cantor_tree", "--depth", "3")
    code1, out1 = run(capsys, *args)
    code2, out2 = run(capsys, *args)
    assert (code1, code2) == (0, 0)
    assert out1 == out2


def test_validate(loch4, capsys, tmp_path):
    code, out = run(capsys, "validate", "--in", loch4)
    assert code == 0
    assert json.loads(out) == {"valid": True, "violations": []}
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out = run(capsys, "validate", "--in", str(bad))
    assert code == 1
    assert "error" in json.loads(out)


def test_classify_single_and_all(loch4, capsys):
    code, out = run(capsys, "classify", "--in", loch4, "--curve", "c2")
    assert code == 0
    assert json.loads(out) == {"curve": "c2", "class": "NonOuterSeparating"}
    code, out = run(capsys, "classify", "--in", loch4)
    classes = json.loads(out)["classes"]
    assert classes["h0"] == "Nonseparating"
    assert "c4" not in classes  # frontier curves are not classified


def test_adjacency(loch4, capsys):
    code, out = run(capsys, "adjacency", "--in", loch4)
    assert code == 0
    j = json.loads(out)
    assert set(j) == {"vertices", "edges", "marks"}
    assert j["marks"] == ["c3", "t3"]
    assert all(len(e) == 2 for e in j["edges"])


def test_ends_tree(loch4, capsys):
    code, out = run(capsys, "ends", "--in", loch4, "--depth", "1")
    assert code == 0
    j = json.loads(out)
    assert j["graph"] == "pants"
    assert j["leaf_counts"] == [1, 1]
    assert len(j["levels"]) == 2
    code, out = run(capsys, "ends", "--in", loch4, "--depth", "1", "--graph", "curves")
    assert json.loads(out)["graph"] == "curves"


def test_ends_depth_guard(loch4, capsys):
    code, out = run(capsys, "ends", "--in", loch4, "--depth", "5")
    assert code == 1
    assert json.loads(out)["error"] == "DepthExceedsTruncation"


def test_intersect(loch4, capsys):
    code, out = run(capsys, "intersect", "--in", loch4, "--a", "chain:h0:h1:c1,t1", "--b", "pants:c1")
    assert code == 0
    assert json.loads(out) == {
        "a": "chain:h0:h1:c1,t1",
        "b": "pants:c1",
        "defined": True,
        "intersection": 2,
    }
    code, out = run(capsys, "intersect", "--in", loch4, "--a", "win:c2:1/0", "--b", "win:c3:1/1")
    assert code == 0
    assert json.loads(out) == {
        "a": "win:c2:1/0",
        "b": "win:c3:1/1",
        "defined": False,
        "intersection": None,
    }
    code, out = run(capsys, "intersect", "--in", loch4, "--a", "pants:zz", "--b", "pants:c1")
    assert code == 1
    assert json.loads(out)["error"] == "UnknownCurve"


def test_triple(capsys):
    code, out = run(capsys, "triple", "--a", "0/1", "--b", "2/5")
    assert code == 0
    assert json.loads(out) == {"a": "0/1", "b": "2/5", "g": "1/2", "g2": "1/3"}
    code, out = run(capsys, "triple", "--a", "0/1", "--b", "1/2")
    assert code == 1
    assert json.loads(out)["error"] == "IntersectionTooSmall"


def test_sch04(capsys):
    code, out = run(capsys, "sch04", "--a", "0/1", "--b", "1/0")
    assert code == 0
    assert json.loads(out) == {"a": "0/1", "b": "1/0", "solutions": ["-1/1", "1/1"]}


def test_graph_with_chain_inventory(loch4, capsys):
    code, out = run(
        capsys,
        "graph", "--in", loch4,
        "--inventory", "pants:h0,pants:h1,chain:h0:h1:c1,t1",
        "--mode", "g",
    )
    assert code == 0
    j = json.loads(out)
    assert j["mode"] == "g"
    assert j["relation"] == "unit_intersection"
    assert j["vertices"] == ["pants:h0", "pants:h1", "chain:h0:h1:c1,t1"]
    assert ["pants:h0", "chain:h0:h1:c1,t1"] in j["edges"]


def test_path(loch4, capsys):
    code, out = run(capsys, "path", "--in", loch4, "--from", "h0", "--to", "h3")
    assert code == 0
    j = json.loads(out)
    assert j["length"] == 4
    assert j["path"][0] == "pants:h0" and j["path"][-1] == "pants:h3"


def test_counterexample_report(capsys):
    code, out = run(capsys, "counterexample", "--gadget", "ladder", "--samples", "40")
    assert code == 0
    j = json.loads(out)
    assert j["violations"] == []
    assert j["homeomorphic"] is False
    assert len(j["witnesses"]) == 3
    assert j["checked"] + j["skipped"] == 40


def test_verify_subcommand(capsys):
    code, out = run(capsys, "verify", "--suite", "triples", "--bound", "12")
    assert code == 0
    j = json.loads(out)
    assert j["suite"] == "triples"
    assert j["failures"] == 0
    code, out = run(capsys, "verify", "--suite", "ends", "--max-depth", "2")
    assert code == 0
    assert json.loads(out)["failures"] == 0


def test_verify_rejects_foreign_flags(capsys):
    code, out = run(capsys, "verify", "--suite", "triples", "--alpha", "c2")
    assert code == 1
    assert json.loads(out)["error"] == "FormatError"


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--model", "klein_bottle", "--depth", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_missing_input_file_reports_cleanly(capsys):
    code, out = run(capsys, "validate", "--in", "/no/such/file.json")
    assert code == 1
    assert json.loads(out)["error"] == "FileNotFoundError"
