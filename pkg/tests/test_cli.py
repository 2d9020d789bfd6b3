import io
import json
import subprocess
import sys

import pytest

from goppabch.cli import run


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), stdout=buf)
    return code, buf.getvalue()


def call_json(*argv):
    code, out = call(*argv, "--json")
    return code, json.loads(out)


def test_bch_build_report():
    code, rep = call_json("bch", "build", "--q", "3", "--m", "3", "--delta", "8")
    assert code == 0
    assert rep["schema"] == 1 and rep["status"] == "pass" and rep["command"] == "bch build"
    out = rep["outputs"]
    assert (out["n"], out["k"]) == (26, 11)
    assert out["distance"]["lower"] == out["distance"]["upper"] == 8


def test_reports_are_deterministic():
    a = call("family", "run", "norm_bch", "--q", "5", "--m", "2", "--r", "2", "--json")
    b = call("family", "run", "norm_bch", "--q", "5", "--m", "2", "--r", "2", "--json")
    assert a == b
    assert "seconds" not in a[1]


def test_timing_is_opt_in():
    code, rep = call_json("field", "--q", "9", "--m", "2", "--timing")
    assert code == 0 and "seconds" in rep


def test_table3_short_rows_pass():
    code, rep = call_json("family", "table3", "--max-length", "45")
    assert code == 0
    assert rep["outputs"]["passed"] == rep["outputs"]["total"] > 0


def test_table3_partial_status():
    code, rep = call_json("family", "table3", "--max-length", "80")
    assert code == 1 and rep["status"] == "partial"
    failing = [r for r in rep["outputs"]["rows"] if not r["pass"]]
    assert [r["expected"] for r in failing] == ["[49,43,4]_7"]


def test_text_table_output():
    code, out = call("family", "table5", "--max-length", "10")
    assert code == 0
    assert "[8,3,5]_3" in out and "PASS" in out


def test_criterion_check_failure_exit_code():
    code, rep = call_json("criterion", "check", "--q", "3", "--m", "2", "--G", "x^2+a^2",
                          "--elems", "1;a;a^2")
    assert code == 1 and rep["outputs"]["failing_index"] == 1


def test_criterion_check_success():
    # roots of x^2 = a^2 plus 0 carry a weight-3 word of Gamma(L, x^2 + a^2)
    code, rep = call_json("criterion", "check", "--q", "3", "--m", "2", "--G", "x^2+a^2",
                          "--elems", "a;a^5;0")
    assert code == 0
    w = rep["outputs"]["witness"]
    assert w["weight"] == 3 and w["ratios"] == ["2,0", "2,0"]
    assert w["codeword"] == [0, 2, 0, 0, 2, 0, 1]
    assert rep["outputs"]["membership_congruence"] is True


def test_criterion_sample_is_seeded():
    a = call_json("criterion", "sample", "--q", "4", "--m", "2", "--t", "3", "--count", "20",
                  "--seed", "5")
    assert a[0] == 0 and a[1]["outputs"]["agreements"] == 20
    assert a == call_json("criterion", "sample", "--q", "4", "--m", "2", "--t", "3", "--count",
                          "20", "--seed", "5")


def test_family_hypothesis_failure():
    code, rep = call_json("family", "run", "xt_plus_A", "--q", "4", "--m", "2", "--t", "3")
    assert code == 1
    assert {"hypothesis": "q odd", "pass": False} in rep["outputs"]["hypotheses"]


def test_family_run_exhaustive():
    code, rep = call_json("family", "run", "wild", "--q", "5", "--m", "2", "--r", "2",
                          "--verify-distance", "exhaustive")
    assert code == 0
    assert rep["outputs"]["code"]["distance"]["method"] == "enumeration"
    assert rep["outputs"]["claimed_d"] == 13


def test_goppa_build_with_matrices():
    code, rep = call_json("goppa", "build", "--q", "3", "--m", "2", "--G", "x^2+a^2",
                          "--emit-matrices")
    out = rep["outputs"]
    assert code == 0 and (out["n"], out["k"]) == (7, 3)
    assert len(out["generator"]) == 3 and len(out["parity_check"]) == 4


def test_map_word():
    code, rep = call_json("bch", "map-word", "--n", "8", "--indices", "0,1,7")
    assert code == 0 and rep["outputs"]["bch_indices"] == [0, 7, 1]
    code, rep = call_json("bch", "map-word", "--n", "4", "--word", "1,2,0,1")
    assert rep["outputs"]["bch_word"] == [1, 1, 0, 2]


def test_poly_mpoly():
    code, rep = call_json("poly", "--q", "2", "--m", "8", "--poly", "x^8+x^7+x^2+x+1", "--mpoly")
    assert code == 0
    assert rep["outputs"]["irreducible_over_prime"] is True
    assert rep["outputs"]["m_poly"]["w"] == "1,0,0,0,0,0,0,0"


def test_field_element_queries():
    code, rep = call_json("field", "--q", "9", "--m", "2", "--element", "a^10", "--power", "2")
    el = rep["outputs"]["element"]
    assert el["log"] == 10 and el["in_base_field"] is True and el["power_test"]["is_power"]


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["field", "--q", "6", "--m", "2"], ["bch", "build", "--q", "3", "--m", "2"],
    ["bch", "build", "--q", "3", "--m", "2", "--delta", "1"],
    ["goppa", "build", "--q", "3", "--m", "2", "--G", "x^^2"],
    ["criterion", "check", "--q", "3", "--m", "2", "--G", "x^2+1", "--elems", "zz"],
    ["family", "run", "wild", "--q", "5"],
    ["bch", "map-word", "--n", "4"],
])
def test_usage_errors(argv, capsys):
    code, out = call(*argv)
    assert code == 2 and out == ""
    assert "error" in capsys.readouterr().err


def test_budget_env_var(monkeypatch):
    monkeypatch.setenv("GOPPA_BUDGET", "1")
    code, rep = call_json("bch", "build", "--q", "3", "--m", "2", "--delta", "5")
    assert rep["outputs"]["distance"]["method"] == "bounds"
    code, rep = call_json("bch", "build", "--q", "3", "--m", "2", "--delta", "5", "--budget", "100")
    assert rep["outputs"]["distance"]["method"] == "enumeration"


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "goppabch", "field", "--q", "4", "--m", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "status   pass" in proc.stdout
