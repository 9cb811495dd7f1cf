import json
import subprocess
import sys

import pytest

from splitword.cli import main
from splitword.graph import Graph
from splitword.pipeline import exit_code, run_pipeline, verify_report
from splitword.split import B1, B4

from conftest import B1_DOC, B4_DOC, cycle


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_run_k3(capsys):
    code, out = _run(capsys, "run", "Bw")
    report = json.loads(out.out)
    assert code == 0
    assert report["schema"] == 1 and report["status"] == "ok"
    assert report["prn"]["value"] == 1
    assert report["word"]["compact"] == "123 123 123"
    assert all(report["stages"].values())


def test_run_b4(capsys, tmp_path):
    path = tmp_path / "b4.txt"
    path.write_text(B4_DOC + "\n")
    code, out = _run(capsys, "run", str(path))
    report = json.loads(out.out)
    assert code == 0
    assert report["prn"]["value"] == 3
    assert report["word"]["compact"] == "7152346 1267354 1527346"
    assert report["labelling"] == [2, 1, 0, 3]
    assert all(verify_report(report).values())


def test_run_failures(capsys):
    code, out = _run(capsys, "run", B1_DOC)
    assert code == 3
    report = json.loads(out.out)
    assert report["certificate"]["forbidden"] == "B1"
    code, out = _run(capsys, "run", "Cl")
    assert code == 2
    assert json.loads(out.out)["certificate"]["obstruction"] == "C4"


def test_parse_error_exit_code(capsys):
    code, out = _run(capsys, "run", "n=3\n0-7")
    assert code == 1
    assert "line 2" in out.err


@pytest.mark.parametrize("g", [Graph.complete(1), Graph.empty(4), B4, B1, cycle(5), B4.induced(range(6))])
def test_reports_verify_after_json_round_trip(g):
    report = json.loads(json.dumps(run_pipeline(g)))
    checks = verify_report(report)
    assert checks and all(checks.values())


def test_tampered_report_fails_verification():
    report = json.loads(json.dumps(run_pipeline(B4)))
    report["word"]["q3"] = report["word"]["q2"]
    assert not verify_report(report)["word"]
    report = json.loads(json.dumps(run_pipeline(B4)))
    report["orientation"][0].reverse()
    assert not verify_report(report)["orientation"]


def test_exit_code_mapping():
    assert exit_code({"status": "ok"}) == 0
    assert exit_code({"status": "not_split"}) == 2
    assert exit_code({"status": "not_comparability"}) == 3
    assert exit_code({}) == 1


def test_word_label_prn_forbidden(capsys):
    code, out = _run(capsys, "word", B4_DOC, "--json")
    assert code == 0 and json.loads(out.out)["compact"] == "7152346 1267354 1527346"
    code, out = _run(capsys, "word", B4_DOC)
    assert "compact: 7152346 1267354 1527346" in out.out
    code, out = _run(capsys, "label", B4_DOC, "--json")
    data = json.loads(out.out)
    assert data["labelling"] == [2, 1, 0, 3] and data["d"] == 1 and len(data["orientation"]) == 12
    code, out = _run(capsys, "label", B4_DOC)
    assert "5: A2(r=2)" in out.out
    code, out = _run(capsys, "prn", B4_DOC, "--json")
    data = json.loads(out.out)
    assert data["value"] == 3 and data["certificate_data"]["embedding"]["6"] == 6
    code, out = _run(capsys, "prn", "Bw")
    assert out.out.strip() == "prn: 1 (complete)"
    code, out = _run(capsys, "forbidden", B4_DOC, "--which", "B1", "B2", "B3", "--json")
    assert json.loads(out.out)["found"] is None
    code, out = _run(capsys, "forbidden", B1_DOC)
    assert out.out.startswith("B1:")
    code, out = _run(capsys, "word", B1_DOC)
    assert code == 3


def test_format_override(capsys):
    code, out = _run(capsys, "prn", "Bw", "--format", "graph6", "--json")
    assert json.loads(out.out)["value"] == 1
    code, _ = _run(capsys, "prn", "Bw", "--format", "edgelist")
    assert code == 1


def test_sweep_command(capsys):
    code, out = _run(capsys, "sweep", "--n-max", "3", "--workers", "1")
    assert code == 0
    assert json.loads(out.out)["failures"] == 0


def test_console_script_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "splitword.cli", "run", "-"],
        input=B4_DOC, capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["prn"]["value"] == 3
