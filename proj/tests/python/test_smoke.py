import json
import os
import subprocess

import pytest

import toricgraph as tg


def test_parse_and_families():
    g = tg.Graph.parse("1 2\n2 3\n1 3\n")
    assert g.n == 3
    assert g == tg.cycle(3)
    assert tg.family("whiskered", [3, 2, 1, 0, 1]).n == 12
    assert len(tg.family("cycle", [5]).edges) == 5
    with pytest.raises(ValueError):
        tg.Graph.parse("1 1\n")
    with pytest.raises(ValueError):
        tg.family("cycle", [2])


def test_facets_of_triangle():
    assert sorted(tg.facets(tg.cycle(3))) == sorted(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, -1, 1], [0, -1, 0, 1], [-1, 0, 0, 1], [-1, -1, -1, 2]]
    )


def test_primes_and_class_group():
    kinds = [p["kind"] for p in tg.height_one_primes(tg.cycle(3))]
    assert kinds == ["cover"] * 3 + ["zero"] + ["variable"] * 3
    cl = tg.class_group(tg.cycle(3))
    assert cl["relation"] == [1, 1, 1, 2]
    assert cl["rank"] == 3
    assert tg.canonical_class(tg.cycle(3)) == [2, 2, 2, 4]


def test_gorenstein_census():
    assert [k for k in range(3, 12) if tg.is_gorenstein(tg.cycle(k))[0]] == [3, 4, 5, 7]
    assert tg.is_gorenstein(tg.cycle(5)) == (True, 3)


def test_canonical_module_example():
    w = tg.whiskered_cycle([1, 1, 1])
    gens, truncated = tg.omega_generators(w, 5)
    assert gens == [([1, 1, 1, 1, 1, 1], 4), ([2, 2, 2, 1, 1, 1], 5)]
    assert truncated
    assert tg.is_pseudo_gorenstein(w)[0]
    assert not tg.is_pseudo_gorenstein(tg.whiskered_cycle([1, 1, 2]))[0]


def test_non_normal():
    g = tg.Graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
    assert tg.is_normal(g) == (False, "multiple-odd-components")
    assert tg.normality_gap(g, 4) == ([1, 1, 1, 1, 1, 1], 3)
    with pytest.raises(tg.NotNormalError):
        tg.height_one_primes(g)
    report = tg.analyze(g)
    assert report["primes"] is None
    assert "not normal" in report["null_reasons"]["primes"]


def test_analyze_report():
    r = tg.analyze(tg.cycle(5), verify=True)
    assert list(r) == [
        "graph", "normality", "primes", "class_group", "canonical_class", "gorenstein",
        "pseudo_gorenstein", "omega_generators", "verification", "null_reasons",
    ]
    assert r["gorenstein"]["a"] == 3
    assert all(v is None or v["agreement"] for v in r["verification"].values())


@pytest.mark.skipif(not os.environ.get("TORICGRAPH_CLI"), reason="CLI path not given")
def test_cli_json_matches_bindings(tmp_path):
    cli = os.environ["TORICGRAPH_CLI"]
    src = tmp_path / "c5.txt"
    src.write_text(subprocess.run([cli, "family", "cycle", "5"], check=True, capture_output=True, text=True).stdout)
    out = subprocess.run([cli, "analyze", str(src), "--json"], check=True, capture_output=True, text=True).stdout
    assert json.loads(out) == tg.analyze(tg.cycle(5))
