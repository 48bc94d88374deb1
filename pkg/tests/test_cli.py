import json

from bbwkoszul import checks
from bbwkoszul.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list_checks(capsys):
    code, out, _ = run_cli(capsys, "list-checks")
    assert code == 0
    for check_id in ("example-universal", "prop-fano", "oracles", "remark-d34"):
        assert check_id in out


def test_clean_range_exits_zero(capsys):
    code, out, _ = run_cli(
        capsys, "--d-min", "6", "--d-max", "6", "--check", "theorem-moduli"
    )
    assert code == 0
    assert "pass" in out


def test_discrepancy_exits_zero_by_default(capsys):
    code, out, _ = run_cli(
        capsys, "--d-min", "5", "--d-max", "5", "--check", "lemma-cohomology"
    )
    assert code == 0
    assert "paper-discrepancy" in out


def test_strict_paper_exit_code(capsys):
    code, _, _ = run_cli(
        capsys,
        "--d-min", "5", "--d-max", "5",
        "--check", "lemma-cohomology",
        "--strict-paper",
    )
    assert code == 3


def test_usage_error_bad_range(capsys):
    code, _, err = run_cli(capsys, "--d-min", "2", "--d-max", "5", "--check", "lemma-s")
    assert code == 2
    assert "usage error" in err


def test_usage_error_unknown_check(capsys):
    code, _, err = run_cli(capsys, "--check", "no-such-check")
    assert code == 2
    assert "unknown check ids" in err


def test_usage_error_bad_flag(capsys):
    code, _, _ = run_cli(capsys, "--frobnicate")
    assert code == 2


def test_json_report_reproducible(capsys):
    argv = (
        "--d-min", "5", "--d-max", "6",
        "--check", "prop-fano",
        "--format", "json",
        "--no-timestamp",
    )
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert set(payload) == {"version", "params", "results", "summary"}
    assert "timestamp" not in payload["params"]
    assert set(payload["summary"]) == {"pass", "fail", "undetermined", "discrepancy", "skipped"}
    row = payload["results"][0]
    assert set(row) == {"check", "d", "status", "computed", "expected", "provenance", "axioms", "notes"}


def test_json_timestamp_present_by_default(capsys):
    code, out, _ = run_cli(
        capsys, "--d-min", "6", "--d-max", "6", "--check", "lemma-s", "--format", "json"
    )
    assert code == 0
    assert "timestamp" in json.loads(out)["params"]


def test_failure_exit_code(capsys, monkeypatch):
    def broken_runner(d):
        return "fail", {"h0": -1}, {"h0": 0}, "forced failure", ()

    monkeypatch.setitem(checks._RUNNERS, "lemma-s", broken_runner)
    code, out, _ = run_cli(capsys, "--d-min", "6", "--d-max", "6", "--check", "lemma-s")
    assert code == 1
    assert "fail" in out
