import csv
import io
import json
import subprocess
import sys

import pytest

from jordanlab import cli, report
from jordanlab.closed import r, s


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dims_csv(capsys):
    code, out, _ = run(capsys, "dims", "--D", "2", "--N", "15", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 15
    assert [int(x["a_n"]) for x in rows] == [s(n, 2) for n in range(1, 16)]
    assert [int(x["b_n"]) for x in rows] == [r(n, 2) for n in range(1, 16)]


def test_dims_d1(capsys):
    code, out, _ = run(capsys, "dims", "--D", "1", "--N", "5", "--format", "json")
    assert json.loads(out) == [{"n": n, "a_n": 1, "b_n": 0} for n in range(1, 6)]


def test_dims_weakest(capsys):
    _, out, _ = run(capsys, "dims", "--D", "3", "--N", "8", "--form", "weakest", "--format", "json")
    assert [row["a_n"] for row in json.loads(out)][-1] == 3324


@pytest.mark.parametrize("argv", [["dims", "--D", "0"], ["dims", "--D", "x"], ["dims", "--format", "xml"],
                                  ["verify", "--suite", "nope"], ["frobnicate"]])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as e:
        cli.main(argv)
    assert e.value.code != 0


def test_chars_rows(capsys):
    _, out, _ = run(capsys, "chars", "--D", "3", "--N", "4", "--format", "json")
    rows = json.loads(out)
    assert rows[0]["A"] == {"1": 1} and rows[0]["B"] == {}
    assert rows[1]["A"] == {"2": 1} and rows[1]["B"] == {"1,1": 1}


def test_chars_dims_match_dims(capsys):
    _, out, _ = run(capsys, "chars", "--D", "4", "--N", "7", "--format", "json")
    chars = json.loads(out)
    _, out, _ = run(capsys, "dims", "--D", "4", "--N", "7", "--format", "json")
    dims = json.loads(out)
    assert [x["dim_A"] for x in chars] == [x["a_n"] for x in dims]
    assert [x["dim_B"] for x in chars] == [x["b_n"] for x in dims]


def test_chars_monomial(capsys):
    _, out, _ = run(capsys, "chars", "--D", "3", "--N", "2", "--basis", "monomial", "--format", "json")
    assert json.loads(out)[1]["A"] == {"2": 1, "1,1": 1}


def test_chars_envelope(capsys):
    code, _, err = run(capsys, "chars", "--D", "7", "--N", "2")
    assert code == 2 and "envelope" in err
    code, out, _ = run(capsys, "chars", "--D", "7", "--N", "2", "--force-envelope", "--format", "json")
    assert code == 0 and json.loads(out)[1]["B"] == {"1,1": 1}


def test_closed_and_oracle(capsys):
    _, out, _ = run(capsys, "closed", "--D", "2", "--N", "15", "--format", "json")
    last = json.loads(out)[-1]
    assert (last["s_n"], last["r_n"]) == (16512, 15288)
    _, out, _ = run(capsys, "oracle", "--D", "3", "--N", "5", "--format", "json")
    assert [x["CJ"] for x in json.loads(out)] == [s(n, 3) for n in range(1, 6)]
    _, out, _ = run(capsys, "oracle", "--D", "4", "--multilinear", "--format", "json")
    assert json.loads(out)[0]["M"] == 1


def test_markdown_table(capsys):
    _, out, _ = run(capsys, "dims", "--D", "2", "--N", "3", "--format", "md")
    assert out.splitlines()[0] == "| n | a_n | b_n |"


def test_verify_jacobi(capsys):
    code, out, err = run(capsys, "verify", "--suite", "jacobi", "--format", "json")
    assert code == 0
    assert all(x["status"] == "pass" for x in json.loads(out))
    assert "fail 0" in err


def test_verify_branching(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "branching", "--format", "json")
    rows = json.loads(out)
    assert code == 0
    assert [x["status"] for x in rows].count("report") == 1


def test_verify_exit_on_failure(monkeypatch, capsys):
    bad = [report.VerificationResult("jacobi", "x", 1, 2, "TRIVIAL")]
    monkeypatch.setattr(report, "run_suite", lambda *a, **k: bad)
    code, _, _ = run(capsys, "verify", "--suite", "jacobi")
    assert code == 1
    only_report = [report.VerificationResult("jacobi", "x", 1, 2, "TRIVIAL", status="report")]
    monkeypatch.setattr(report, "run_suite", lambda *a, **k: only_report)
    code, _, _ = run(capsys, "verify", "--suite", "jacobi")
    assert code == 0


def test_cache_output_identical(tmp_path, capsys):
    argv = ["dims", "--D", "3", "--N", "12", "--format", "json", "--cache-dir", str(tmp_path)]
    _, cold, _ = run(capsys, *argv)
    assert (tmp_path / "weak_D3_N12.json").exists()
    _, warm, _ = run(capsys, *argv)
    assert cold == warm


def test_cache_env_var(tmp_cache, capsys):
    run(capsys, "dims", "--D", "2", "--N", "4")
    assert (tmp_cache / "weak_D2_N4.json").exists()


def test_verify_threads_deterministic():
    one = report.run_suite("paper-tables", D_max=2, n_max=5, threads=1)
    two = report.run_suite("paper-tables", D_max=2, n_max=5, threads=2)
    assert one == two


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "jordanlab", "dims", "--D", "1", "--N", "2", "--format", "csv"],
                       capture_output=True, text=True)
    assert p.returncode == 0
    assert p.stdout == "n,a_n,b_n\n1,1,0\n2,1,0\n"
