import subprocess
import sys
from pathlib import Path

import pytest

from catalan import cli
from catalan.search import SolutionReport

GOLDEN = Path(__file__).parent / "golden"


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv,golden",
    [
        (["mordell", "--bound", "1000"], "cli_mordell_1000.jsonl"),
        (["wieferich", "--limit", "5000"], "cli_wieferich_5000.jsonl"),
        (["consecutive-powers", "--max", "100_000_000"], "cli_consecutive_1e8.jsonl"),
        (["factor-gaussian", "5", "0"], "cli_factor_gaussian_5.jsonl"),
    ],
)
def test_golden_json(argv, golden, capsys):
    code, out, _ = run(["--format", "json", *argv], capsys)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_byte_identical_across_runs_and_threads(capsys):
    outs = set()
    for threads in ("1", "1", "3"):
        code, out, _ = run(["--threads", threads, "--format", "json", "deduction", "--q-limit", "2000"], capsys)
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_verify_lemma_deterministic(capsys):
    first = run(["verify-lemma", "all"], capsys)
    second = run(["verify-lemma", "all"], capsys)
    assert first == second and first[0] == 0


@pytest.mark.parametrize("name", sorted(cli.LEMMAS))
def test_each_lemma_passes(name, capsys):
    code, out, _ = run(["verify-lemma", name], capsys)
    assert code == 0, out


def test_report_roundtrip(capsys):
    _, out, _ = run(["--format", "json", "--timing", "fmn", "--m", "7", "--n", "3", "--l", "5"], capsys)
    report = cli.Report.parse(out)
    assert report.render("json") == out
    assert report.timing is not None and report.passed


def test_text_format(capsys):
    code, out, _ = run(["mordell", "--bound", "10"], capsys)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == 'record=command command=mordell params={"bound":10}'
    assert lines[-1] == "record=status status=pass"
    assert 'check="only the five known solutions" ok=true' in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.jsonl"
    code, out, _ = run(["--format", "json", "--out", str(target), "lebesgue", "--m", "3", "--bound", "100"], capsys)
    assert code == 0 and target.read_text() == out


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        [],
        ["catalan-pq", "--p", "9", "--q", "3"],
        ["catalan-pq", "--p", "3", "--q", "5"],
        ["chao-ko", "--q", "2"],
        ["mordell", "--bound", "-5"],
        ["mordell", "--bound", "ten"],
        ["lebesgue", "--m", "4"],
        ["verify-lemma", "nope"],
    ],
)
def test_usage_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert "usage" in err


def test_failed_verification_exits_1(monkeypatch, capsys):
    monkeypatch.setattr(
        cli.elementary, "mordell_search", lambda bound, threads=1: SolutionReport("x^2-y^3=1", [(1, 0)])
    )
    code, out, _ = run(["mordell", "--bound", "100"], capsys)
    assert code == 1
    assert out.splitlines()[-1] == "record=status status=fail"


def test_threads_env(monkeypatch, capsys):
    monkeypatch.setenv("CATALAN_THREADS", "2")
    code, out, _ = run(["--format", "json", "wieferich", "--limit", "5000"], capsys)
    assert code == 0 and out == (GOLDEN / "cli_wieferich_5000.jsonl").read_text()


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "catalan.cli", "pell", "--d", "2", "--bound", "100"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "x=99 y=70" in proc.stdout
