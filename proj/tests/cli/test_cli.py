"""End-to-end checks of the hamcut command line: exit codes, report shape,
byte-determinism and the mangled-fixture verify path."""

import json
import os
import subprocess
from pathlib import Path

import pytest

BIN = os.environ.get("HAMCUT_BIN", str(Path(__file__).resolve().parents[2] / "build" / "hamcut"))
FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def run(*args, cwd=None):
    return subprocess.run([BIN, *map(str, args)], capture_output=True, text=True, cwd=cwd)


def report(*args, code=0, cwd=None):
    p = run(*args, cwd=cwd)
    assert p.returncode == code, p.stderr
    return json.loads(p.stdout)


def write(path, *args):
    p = run("--out", path, *args)
    assert p.returncode == 0, p.stderr
    assert p.stdout == ""


@pytest.fixture
def work(tmp_path):
    (tmp_path / "ws.json").write_text(run("--seed", 7, "generate", "well-separated", "--sizes", 3, 3).stdout)
    (tmp_path / "seq.json").write_text(run("--seed", 1, "generate", "allowable", "--n", 4).stdout)
    return tmp_path


def test_generated_instance_is_well_separated(work):
    r = report("check-sep", work / "ws.json")
    assert r["command"] == "check-sep"
    assert r["input_digest"].startswith("sha256:")
    assert r["results"]["well_separated"]["satisfied"] is True


def test_full_sweep_has_seven_permutations(work):
    assert len(json.loads((work / "seq.json").read_text())["perms"]) == 7


def test_generate_rejects_empty_class():
    p = run("generate", "well-separated", "--sizes", 0, 3)
    assert p.returncode == 2
    assert "error" in json.loads(p.stdout)


def test_non_separated_fixture_exits_one():
    r = report("check-sep", FIXTURES / "beta_gamma.json", code=1)
    assert r["results"]["well_separated"]["satisfied"] is False
    r = report("check-sep", FIXTURES / "beta_gamma.json", "--beta", "2,2", "--gamma", "2,2")
    assert r["command"] == "check-sep"


def test_uso_pipeline(work):
    write(work / "uso.json", "build-uso", work / "ws.json")
    r = report("check-uso", work / "uso.json", "--mode", "both")
    assert r["results"]["agree"] is True
    assert r["results"]["full"]["is_uso"] is True


def test_find_cut_matches_all_cuts(work):
    cut = report("find-cut", work / "ws.json", "--alpha", "1,1")["results"]["cut"]
    assert cut["alpha"] == [1, 1]
    assert [c["below"] for c in cut["counts"]] == [0, 0]
    everything = report("all-cuts", work / "ws.json")["results"]
    assert len(everything["cuts"]) == 9
    assert cut in everything["cuts"]


def test_alpha_out_of_range_is_an_error(work):
    p = run("find-cut", work / "ws.json", "--alpha", "4,1")
    assert p.returncode == 2
    assert json.loads(p.stdout)["error"]["kind"] == "OutOfRange"


def test_malformed_input_is_a_parse_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dimension": 2, "classes": [[["1/0", "1"]], [["2", "2"]]]}')
    p = run("check-sep", bad)
    assert p.returncode == 2
    assert json.loads(p.stdout)["error"]["kind"] == "ParseError"


def test_reports_are_byte_deterministic(work):
    for args in (("all-cuts", work / "ws.json"), ("dualize", work / "ws.json"), ("reduce", work / "seq.json")):
        assert run(*args).stdout == run(*args).stdout
    a = run("--seed", 3, "generate", "arrangement", "--sizes", 2, 3).stdout
    assert a == run("--seed", 3, "generate", "arrangement", "--sizes", 2, 3).stdout
    assert a != run("--seed", 4, "generate", "arrangement", "--sizes", 2, 3).stdout


def test_realize_verify_and_mangled_description(work):
    write(work / "desc.json", "reduce", work / "seq.json")
    write(work / "drawing.json", "realize", work / "seq.json")
    assert report("verify", work / "drawing.json", work / "desc.json")["results"]["ok"] is True

    desc = json.loads((work / "desc.json").read_text())
    desc = desc["results"]["description"]
    for red in desc["reds"]:
        if red["id"] == "r0":
            red["blue_order"][0], red["blue_order"][1] = red["blue_order"][1], red["blue_order"][0]
    (work / "mangled.json").write_text(json.dumps(desc))
    r = report("verify", work / "drawing.json", work / "mangled.json", code=1)
    assert r["results"]["ok"] is False
    assert "r0" in r["results"]["diff"]


def test_straight_round_trip(work):
    write(work / "straight.json", "realize", work / "seq.json", "--method", "straight", "--lines", work / "seq.json")
    r = report("extract", work / "straight.json")
    assert len(r["results"]["lines"]) == 4


def test_lower_bound_on_figure_four_fixture():
    r = report("lower-bound", FIXTURES / "crossing_pair.json", "--pair", "r1", "r2", code=1)
    assert r["results"]["bounds"][0]["lower_bound"] == 2
    assert r["results"]["max"] == 2


def test_bridge_equals_sigma(work):
    assert report("bridge", work / "ws.json")["results"]["equals_sigma"] is True


def test_plot_is_deterministic_and_planar_only(work, tmp_path):
    write(tmp_path / "a.svg", "plot", work / "ws.json", "--all-cuts")
    write(tmp_path / "b.svg", "plot", work / "ws.json", "--all-cuts")
    svg = (tmp_path / "a.svg").read_text()
    assert svg.startswith("<svg") and svg == (tmp_path / "b.svg").read_text()
    (tmp_path / "d3.json").write_text(run("--seed", 2, "generate", "well-separated", "--dim", 3, "--sizes", 1, 1, 1).stdout)
    p = run("plot", tmp_path / "d3.json")
    assert p.returncode == 2
    assert json.loads(p.stdout)["error"]["kind"] == "NotPlottable"
