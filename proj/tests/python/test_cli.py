import csv
import io
import json
import os
import subprocess

import pytest

CLI = os.environ.get("TORICGRAPH_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="CLI path not given")

TWO_TRIANGLES = "1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n"


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)


def test_family_output():
    out = run("family", "whiskered", "1,1,1").stdout.splitlines()
    assert out[0] == "n 6"
    assert len(out) == 7
    assert run("family", "cycle", "5").stdout.count("\n") == 6


def test_analyze_from_stdin():
    r = run("analyze", "-", "--json", stdin=run("family", "whiskered", "1,1,2").stdout)
    assert r.returncode == 0
    rep = json.loads(r.stdout)
    assert rep["gorenstein"]["gorenstein"] is False
    assert rep["pseudo_gorenstein"]["pseudo_gorenstein"] is False


def test_json_is_byte_deterministic():
    src = run("family", "cycle", "7").stdout
    a = run("analyze", "-", "--json", "--verify", stdin=src).stdout
    b = run("analyze", "-", "--json", "--verify", stdin=src).stdout
    assert a == b


def test_text_and_json_agree():
    src = run("family", "cycle", "5").stdout
    rep = json.loads(run("analyze", "-", "--json", stdin=src).stdout)
    text = run("analyze", "-", stdin=src).stdout
    assert f"a: {rep['gorenstein']['a']}" in text
    assert f"initial_degree: {rep['pseudo_gorenstein']['initial_degree']}" in text


def test_exit_codes():
    bad = run("analyze", "-", stdin="1 2\n2 2\n")
    assert bad.returncode == 2
    assert "line 2" in bad.stderr
    assert run("analyze", "/nonexistent/file").returncode == 2
    assert run("family", "cycle", "2").returncode == 2
    assert run("analyze", "-", "--section", "bogus", stdin="1 2\n").returncode == 2
    # non-normal: full report is fine, an explicit normality-dependent section is not
    full = run("analyze", "-", "--json", stdin=TWO_TRIANGLES)
    assert full.returncode == 0
    rep = json.loads(full.stdout)
    assert rep["normality"]["normal"] is False
    assert rep["primes"] is None
    assert run("analyze", "-", "--section", "primes", stdin=TWO_TRIANGLES).returncode == 3
    assert run("analyze", "-", "--section", "normality", stdin=TWO_TRIANGLES).returncode == 0


def test_sweeps():
    rows = list(csv.DictReader(io.StringIO(run("sweep", "cycle", "3..11", "--no-canonical", "-j", "0").stdout)))
    assert [r["instance"] for r in rows] == [f"cycle {k}" for k in range(3, 12)]
    assert [int(r["n"]) for r in rows if r["gorenstein"] == "true"] == [3, 4, 5, 7]

    odd = list(csv.DictReader(io.StringIO(run("sweep", "cycle", "3..9:2").stdout)))
    assert len(odd) == 4 and all(r["pseudo_gorenstein"] == "true" for r in odd)

    w = json.loads(run("sweep", "whiskered", "--k", "3", "--max-whiskers", "3", "--json").stdout)
    assert len(w["rows"]) > 1
    assert all(r["prime_set_equals_prediction"] is True for r in w["rows"])
