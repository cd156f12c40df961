from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path
from typing import Callable

import pytest
from pytest import fixture

from permfix.permutations import derangement_count, rencontres


Runner = Callable[..., "subprocess.CompletedProcess[str]"]


@fixture
def run(repo_dir: Path) -> Runner:
    def _run(*args: str) -> subprocess.CompletedProcess[str]:
        return subprocess.run(
            [sys.executable, "-m", "permfix", *args],
            capture_output=True,
            text=True,
            cwd=repo_dir,
        )

    return _run


def test_verify_all(run: Runner) -> None:
    subp = run("verify", "--identity", "all", "--n-max", "6", "--format", "json")
    assert subp.returncode == 0
    data = json.loads(subp.stdout)
    assert data["totals"]["failed"] == 0
    assert {rec["id"] for rec in data["checks"]} == set(data["config"]["identity"])


def test_verify_determinant(run: Runner) -> None:
    subp = run("verify", "--identity", "det", "--n-max", "6", "--format", "json")
    assert subp.returncode == 0
    checks = json.loads(subp.stdout)["checks"]
    assert len(checks) == 6
    assert all(rec["passed"] for rec in checks)


def test_verify_long_flags(run: Runner) -> None:
    subp = run(
        "verify", "--identity", "thm2", "--n-max", "2", "--k-max", "2", "-f", "json"
    )
    assert subp.returncode == 0
    data = json.loads(subp.stdout)
    assert (data["config"]["n_max"], data["config"]["k_max"]) == (2, 2)
    last = data["checks"][-1]
    assert (last["n"], last["k"]) == (2, 2)
    assert last["lhs"] == last["rhs"] == "-5/12"


def test_help_spells_dashed_flags(run: Runner) -> None:
    subp = run("verify", "-h")
    assert subp.returncode == 0
    assert "--n-max" in subp.stdout
    assert "--k-max" in subp.stdout


def test_verify_trivial(run: Runner) -> None:
    subp = run("verify", "-i", "thm1", "-n", "1", "-k", "0", "-f", "json")
    assert subp.returncode == 0
    checks = json.loads(subp.stdout)["checks"]
    assert [(rec["lhs"], rec["rhs"]) for rec in checks] == [("x", "x")]


def test_verify_out_file(run: Runner, tmp_path: Path) -> None:
    out = tmp_path / "report.csv"
    subp = run("verify", "-i", "det", "-n", "3", "-f", "csv", "--out", str(out))
    assert subp.returncode == 0
    assert subp.stdout == ""
    assert out.read_text().splitlines()[0] == "id,n,k,x,j,lhs,rhs,passed"


def test_verify_out_missing_directory(run: Runner, tmp_path: Path) -> None:
    out = tmp_path / "absent" / "report.csv"
    subp = run("verify", "-i", "det", "-n", "3", "--out", str(out))
    assert subp.returncode == 1
    assert "OutputFileError" in subp.stderr


def test_table_csv(run: Runner) -> None:
    subp = run("table", "--n-max", "4", "--format", "csv")
    assert subp.returncode == 0
    lines = subp.stdout.splitlines()
    assert lines[0] == "n,f,unsigned,signed"
    assert len(lines) == 16


def test_table_fixture_mismatch(run: Runner, tmp_path: Path) -> None:
    lines = []
    for n in range(9):
        for fix in range(n + 1):
            lines.append(f"{len(lines)} {rencontres(n, fix) + (n == 5)}")
    (tmp_path / "b008290.txt").write_text("\n".join(lines) + "\n")
    terms = "\n".join(f"{n} {derangement_count(n)}" for n in range(9))
    (tmp_path / "b000166.txt").write_text(terms + "\n")
    subp = run("table", "--fixtures", str(tmp_path))
    assert subp.returncode == 1
    assert "FixtureMismatchError" in subp.stderr
    assert "row 5, column 0" in subp.stderr


def test_table_malformed_fixture(run: Runner, tmp_path: Path) -> None:
    (tmp_path / "b008290.txt").write_text("0 1\n1 zero\n2 1\n")
    (tmp_path / "b000166.txt").write_text("0 1\n1 0\n")
    subp = run("table", "-n", "1", "--fixtures", str(tmp_path))
    assert subp.returncode == 1
    assert "MalformedFixtureError" in subp.stderr


def test_permutations_text(run: Runner) -> None:
    subp = run("permutations", "--n-max", "3")
    assert subp.returncode == 0
    lines = subp.stdout.splitlines()
    assert lines[0] == "S_3: 6 permutations"
    assert lines[-1] == "(1 2)(3)   -1  fix=1"


def test_permutations_beyond_cap(run: Runner) -> None:
    subp = run("permutations", "--n-max", "5", "--cap", "4")
    assert subp.returncode == 1
    assert "EnumerationCapError" in subp.stderr


def test_bench(run: Runner) -> None:
    subp = run("bench", "-n", "5", "--repeat", "1", "-f", "csv")
    assert subp.returncode == 0
    assert subp.stdout.splitlines()[0] == "n,method,runs,median_ms,min_ms"


@pytest.mark.parametrize(
    "args",
    [
        ("verify", "--x", "1.5"),
        ("verify", "--identity", "nope"),
        ("verify", "--format", "yaml"),
        ("verify", "--n-max", "0"),
        ("bench", "--methods", "fft"),
        ("verify", "--dummyinvalidarg"),
    ],
)
def test_usage_errors(run: Runner, args: tuple) -> None:
    subp = run(*args)
    assert subp.returncode == 2
    assert subp.stderr.startswith("usage:")


@pytest.mark.parametrize(
    "args,option",
    [
        (("verify", "--n-max", "0"), "n_max"),
        (("table", "--n-max", "65"), "n_max"),
        (("verify", "--k-max=-1"), "k_max"),
    ],
)
def test_out_of_range_bounds(run: Runner, args: tuple, option: str) -> None:
    subp = run(*args)
    assert subp.returncode == 2
    assert "InvalidConfigError" in subp.stderr
    assert f"{option}: should be" in subp.stderr
