from __future__ import annotations

import json
import subprocess
import sys

import pytest

from tri36.cli import main, parse_range
from tri36.errors import DomainError
from tri36.tri import PlaneTriangulation


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "tri36", *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_parse_range():
    assert parse_range("3") == [3]
    assert parse_range("1..4") == [1, 2, 3, 4]
    for bad in ("0", "5..2", "x", "1..y"):
        with pytest.raises(DomainError):
            parse_range(bad)


def test_count_both():
    code, out, _ = run("count", "--n", "1..8", "--what", "d", "--mode", "both")
    assert code == 0
    rows = json.loads(out)
    assert {"n": 4, "formula": 2, "partition": 2, "match": True} in rows
    assert all(r["match"] for r in rows)


def test_count_a():
    code, out, _ = run("count", "--n", "7", "--what", "a")
    assert code == 0 and json.loads(out) == [{"n": 7, "a": 2}]


def test_count_a_even_is_domain_error():
    code, out, err = run("count", "--n", "6", "--what", "a")
    assert code == 2 and out == "" and "odd" in err


def test_count_csv(capsys):
    assert main(["count", "--n", "3..4", "--what", "histogram", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,histogram_1,histogram_2,histogram_3,histogram_6"
    assert lines[2] == "4,1,0,1,0"


def test_orbit():
    code, out, _ = run("orbit", "1", "6", "3")
    doc = json.loads(out)
    assert code == 0
    assert doc["orbit"] == [[1, 6, 3], [3, 2, 0], [2, 3, 1]]
    assert doc["akempic"] is False and doc["symmetric"] is False
    assert len(doc["code"]) == 6


def test_orbit_order_two(capsys):
    assert main(["orbit", "1", "7", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["code"] == [[1, 7, 2], [1, 7, 4]] and doc["akempic"] is True


def test_orbit_improper():
    code, _, err = run("orbit", "6", "1", "0")
    assert code == 2 and "improper: (n,1,0)" in err


def test_orbit_malformed(capsys):
    assert main(["orbit", "1", "3", "5"]) == 2


@pytest.mark.parametrize("v, vertices", [((1, 1, 0), 4), ((1, 6, 3), 14), ((2, 3, 1), 14)])
def test_build(tmp_path, capsys, v, vertices):
    out = tmp_path / "g.json"
    edges = tmp_path / "e.json"
    assert main(["build", *map(str, v), "-o", str(out), "--edge-list", str(edges)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["vertices"] == vertices
    g = PlaneTriangulation.from_json(out.read_text())
    assert g.vertex_count == vertices
    assert json.loads(edges.read_text()) == [list(e) for e in g.edges()]
    assert bytes.fromhex(doc["canonical_form"])
    if v == (2, 3, 1):
        assert [1, 6, 3] in doc["index_vectors"]


def test_build_improper():
    code, _, err = run("build", "1", "5", "4")
    assert code == 2 and "improper" in err


def test_output_deterministic():
    a = run("orbit", "2", "4", "1")[1]
    b = run("orbit", "2", "4", "1")[1]
    assert a == b and a.startswith('{"akempic"')


@pytest.mark.parametrize(
    "max_n, suite",
    [("30", "arith"), ("12", "graph"), ("7", "kempe")],
)
def test_verify(max_n, suite):
    code, out, _ = run("verify", "--max-n", max_n, "--suites", suite)
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert {c["suite"] for c in doc["checks"]} == {suite}
    assert all(c["checked"] > 0 for c in doc["checks"])


def test_verify_bad_args(capsys):
    assert main(["verify", "--max-n", "0"]) == 2
    assert main(["verify", "--suites", "nope"]) == 2


def test_verify_reports_failure(monkeypatch, capsys):
    from tri36 import verify

    def broken(max_n):
        return [verify._run("arith", "always false", [1, 2], lambda n: n < 2)]

    monkeypatch.setitem(verify.SUITES, "arith", broken)
    assert main(["verify", "--suites", "arith"]) == 3
    doc = json.loads(capsys.readouterr().out)
    assert doc["checks"][0]["counterexample"] == 2
