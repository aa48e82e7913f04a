"""Tests for the command-line interface."""

import ujson
from click.testing import CliRunner

from cli import cli
from la_verifier.config import MATRIX_M_LIMIT


def run(*args):
    return CliRunner().invoke(cli, list(args), catch_exceptions=False)


def read_report(directory, name):
    return ujson.loads((directory / name).read_text(encoding="utf-8"))


# --- gen ---

def test_gen_scalar_leonardo():
    result = run("gen", "--n", "6")
    assert result.exit_code == 0
    assert result.stdout == "n,value\n0,1\n1,1\n2,3\n3,5\n4,9\n5,15\n"


def test_gen_hybrid():
    result = run("gen", "--kind", "hybrid", "--n", "1")
    assert result.exit_code == 0
    assert result.stdout == "n,re,i,eps,h\n0,1,1,3,5\n"


def test_gen_json_ernst():
    result = run("gen", "--q", "2", "--n", "4", "--format", "json")
    assert result.exit_code == 0
    assert [row["value"] for row in ujson.loads(result.stdout)] == ["1", "1", "4", "7"]


def test_gen_rejects_zero_discriminant():
    result = run("gen", "--p", "2", "--q=-1")
    assert result.exit_code == 2
    assert "p^2 + 4q" in result.output


# --- check ---

def test_check_corrected_cassini(tmp_path):
    result = run("check", "--identity", "cassini/corrected", "--grid", "leonardo", "--n-max", "10",
                 "--output", str(tmp_path))
    assert result.exit_code == 0
    report = read_report(tmp_path, "cassini__corrected.json")
    assert report["totals"] == {"pass": 10, "fail": 0, "skipped": 1, "total": 11}
    assert report["verdict"] == "pass"
    assert report["header"]["tool"] == "la-hybrid-verifier"


def test_check_printed_cassini_is_reclassified(tmp_path):
    result = run("check", "--identity", "cassini", "--grid", "leonardo", "--n-max", "6", "--output", str(tmp_path))
    assert result.exit_code == 0
    assert "reclassified" in result.output
    report = read_report(tmp_path, "cassini.json")
    assert report["reclassified_from"] == "must-pass"
    assert report["tier"] == "under-test"
    assert all(c["confirmed"] for c in report["counterexamples"])


def test_check_failing_under_test_identity(tmp_path):
    result = run("check", "--identity", "summation", "--grid", "leonardo", "--m-max", "3", "--output", str(tmp_path))
    assert result.exit_code == 3
    summary = read_report(tmp_path, "summary.json")
    assert summary["exit_code"] == 3
    assert summary["reports"][0]["verdict"] == "fail"


def test_check_unknown_identity(tmp_path):
    result = run("check", "--identity", "nonexistent", "--output", str(tmp_path))
    assert result.exit_code == 2


def test_check_malformed_dsl(tmp_path):
    source = tmp_path / "broken.la"
    source.write_text("LAH(n) ==\n", encoding="utf-8")
    result = run("check", "--dsl", str(source), "--grid", "leonardo", "--output", str(tmp_path / "out"))
    assert result.exit_code == 2
    assert "line 1, column 10" in result.output


def test_check_dsl_file(tmp_path):
    source = tmp_path / "recurrence.la"
    source.write_text("# hybrid recurrence\nLAH(n+2) == p*LAH(n+1) + q*LAH(n) + r*PSI\n", encoding="utf-8")
    out = tmp_path / "out"
    result = run("check", "--dsl", str(source), "--grid", "ernst", "--n-max", "5", "--output", str(out))
    assert result.exit_code == 0
    report = read_report(out, "dsl__recurrence.json")
    assert report["totals"]["pass"] == 6
    assert report["tier"] == "under-test"


def test_reports_are_reproducible(tmp_path):
    args = ["check", "--identity", "vajda-t2", "--p", "1..2", "--q=-3,1", "--r", "0,2", "--a", "1", "--b", "0",
            "--n-max", "2", "--u-max", "2", "--v-max", "2"]
    first, second, parallel = tmp_path / "first", tmp_path / "second", tmp_path / "parallel"
    assert run(*args, "--output", str(first)).exit_code == 0
    assert run(*args, "--output", str(second)).exit_code == 0
    assert run(*args, "--output", str(parallel), "--workers", "2").exit_code == 0
    for name in ("vajda-t2.json", "summary.json"):
        expected = (first / name).read_bytes()
        assert (second / name).read_bytes() == expected
        assert (parallel / name).read_bytes() == expected


def test_config_file_and_flag_override(tmp_path):
    config = tmp_path / "run.json"
    config.write_text(ujson.dumps({"identity": ["binet"], "grid": "leonardo", "n-max": 3}), encoding="utf-8")
    from_file = tmp_path / "from_file"
    assert run("check", "--config", str(config), "--output", str(from_file)).exit_code == 0
    assert read_report(from_file, "binet.json")["totals"]["total"] == 4

    overridden = tmp_path / "overridden"
    assert run("check", "--config", str(config), "--n-max", "5", "--output", str(overridden)).exit_code == 0
    report = read_report(overridden, "binet.json")
    assert report["totals"]["total"] == 6
    assert report["header"]["config"]["n_max"] == 5
    assert report["header"]["config"]["grid"] == "leonardo"


def test_config_file_rejects_unknown_keys(tmp_path):
    config = tmp_path / "run.json"
    config.write_text(ujson.dumps({"colour": "blue"}), encoding="utf-8")
    assert run("check", "--config", str(config), "--output", str(tmp_path)).exit_code == 2


# --- catalog, series, matrix, det ---

def test_catalog_lists_tiers():
    result = run("catalog")
    assert result.exit_code == 0
    assert "cassini/corrected" in result.output
    assert "must-pass" in result.output
    assert "under-test" in result.output


def test_series_ogf_csv():
    result = run("series", "--order", "3")
    assert result.exit_code == 0
    assert result.stdout == "m,re,i,eps,h\n0,1,1,3,5\n1,1,3,5,9\n2,3,5,9,15\n"


def test_series_egf_needs_rho():
    result = run("series", "--kind", "egf", "--p", "0", "--q", "1")
    assert result.exit_code == 2


def test_matrix_identity(tmp_path):
    out = tmp_path / "matrix.json"
    result = run("matrix", "--m", "4", "--output", str(out))
    assert result.exit_code == 0
    doc = ujson.loads(out.read_text(encoding="utf-8"))
    assert doc["matrix_power_identity"] is True
    assert doc["characteristic_cubic"] is True
    assert doc["companion"] == [["2", "0", "-1"], ["1", "0", "0"], ["0", "1", "0"]]


def test_matrix_power_limit():
    result = run("matrix", "--m", str(MATRIX_M_LIMIT + 1))
    assert result.exit_code == 2
    assert f"between 0 and {MATRIX_M_LIMIT}" in result.output
    assert run("matrix", "--m=-1").exit_code == 2


def test_det_matches_terms(tmp_path):
    out = tmp_path / "det.json"
    result = run("det", "--n", "0..8", "--output", str(out))
    assert result.exit_code == 0
    doc = ujson.loads(out.read_text(encoding="utf-8"))
    assert [row["n"] for row in doc["rows"]] == list(range(9))
    assert all(row["match"] for row in doc["rows"])
    assert doc["rows"][3]["determinant"] == "5"


def test_det_pattern_corrected_mismatch(tmp_path):
    out = tmp_path / "det.json"
    result = run("det", "--reading", "pattern-corrected", "--n", "3", "--show-matrix", "--output", str(out))
    assert result.exit_code == 0
    [row] = ujson.loads(out.read_text(encoding="utf-8"))["rows"]
    assert row["determinant"] == "7"
    assert row["match"] is False
    assert len(row["matrix"]) == 4


def test_det_rejects_zero_q():
    assert run("det", "--q", "0").exit_code == 2
