import json
from pathlib import Path
from typing import Mapping, Optional, Tuple

import pytest

from permfix import table
from permfix.error import (
    FixtureMismatchError,
    MalformedFixtureError,
    MissingFixtureError,
)
from permfix.permutations import derangement_count, rencontres


def _write_fixtures(
    directory: Path,
    nrows: int = 9,
    overrides: Optional[Mapping[Tuple[int, int], str]] = None,
) -> None:
    overrides = overrides or {}
    lines = ["# A008290"]
    index = 0
    for n in range(nrows):
        for fix in range(n + 1):
            value = overrides.get((n, fix), str(rencontres(n, fix)))
            lines.append(f"{index} {value}")
            index += 1
    (directory / "b008290.txt").write_text("\n".join(lines) + "\n")
    terms = [f"{n} {derangement_count(n)}" for n in range(nrows)]
    (directory / "b000166.txt").write_text("# A000166\n" + "\n".join(terms) + "\n")


def test_packaged_fixtures() -> None:
    rows = table.triangle_rows(table.read_bfile(table.RENCONTRES))
    assert sorted(rows) == list(range(9))
    assert rows[4] == (9, 8, 6, 0, 1)
    terms = table.read_bfile(table.DERANGEMENTS)
    assert list(terms) == [1, 0, 1, 2, 9, 44, 265, 1854, 14833]


def test_triangle_rows() -> None:
    frame = table.fixed_point_frame(4)
    assert list(frame.columns) == ["n", "f", "unsigned", "signed"]
    assert len(frame) == 15
    row4 = frame[frame["n"] == 4]
    assert list(row4["unsigned"]) == [9, 8, 6, 0, 1]
    row3 = frame[frame["n"] == 3]
    assert list(row3["signed"]) == [2, -3, 0, 1]
    row0 = frame[frame["n"] == 0]
    assert list(row0["unsigned"]) == [1]


def test_derangement_column() -> None:
    assert list(table.derangement_series(4)) == [1, 0, 1, 2, 9]


@pytest.mark.parametrize("n_max", [1, 8, 12])
def test_run_table(n_max: int) -> None:
    frame, derangements = table.run_table(n_max)
    assert frame["n"].max() == n_max
    assert len(derangements) == n_max + 1


def test_custom_fixtures(tmp_path: Path) -> None:
    _write_fixtures(tmp_path)
    frame, _ = table.run_table(6, tmp_path)
    assert len(frame) == 28


def test_fixture_mismatch(tmp_path: Path) -> None:
    _write_fixtures(tmp_path, overrides={(4, 1): "9"})
    with pytest.raises(FixtureMismatchError) as err:
        table.run_table(8, tmp_path)
    assert err.value.sequence == "A008290"
    assert (err.value.row, err.value.column) == (4, 1)
    assert (err.value.expected, err.value.found) == (9, 8)
    assert "row 4, column 1" in str(err.value)


def test_missing_fixture(tmp_path: Path) -> None:
    with pytest.raises(MissingFixtureError):
        table.run_table(3, tmp_path)


def test_text_output() -> None:
    frame, derangements = table.run_table(4)
    text = table.to_text(frame, derangements)
    assert "n=4  9 8 6 0 1" in text
    assert "n=3  2 -3 0 1" in text
    assert text.endswith("1 0 1 2 9")


def test_csv_output() -> None:
    frame, _ = table.run_table(2)
    lines = frame.to_csv(index=False).splitlines()
    assert lines[0] == "n,f,unsigned,signed"
    assert lines[1:] == [
        "0,0,1,1",
        "1,0,0,0",
        "1,1,1,1",
        "2,0,1,-1",
        "2,1,0,0",
        "2,2,1,1",
    ]


def test_json_output() -> None:
    frame, derangements = table.run_table(3)
    data = json.loads(table.to_json(frame, derangements))
    assert data["command"] == "table"
    assert data["derangements"] == [1, 0, 1, 2]
    assert {"n": 3, "f": 0, "unsigned": 2, "signed": 2} in data["rows"]


@pytest.mark.parametrize("value", ["8.7", "eight", "8e0", ""])
def test_malformed_fixture(tmp_path: Path, value: str) -> None:
    _write_fixtures(tmp_path, overrides={(4, 1): value})
    with pytest.raises(MalformedFixtureError) as err:
        table.run_table(8, tmp_path)
    assert err.value.path == tmp_path / "b008290.txt"


def test_fixture_terms_beyond_int64(tmp_path: Path) -> None:
    _write_fixtures(tmp_path, nrows=31)
    terms = table.read_bfile(table.DERANGEMENTS, tmp_path)
    assert terms[30] == derangement_count(30) > 2**63
    frame, derangements = table.run_table(30, tmp_path)
    assert int(derangements[30]) == derangement_count(30)
    assert len(frame) == 31 * 32 // 2


def test_large_term_mismatch(tmp_path: Path) -> None:
    wrong = str(derangement_count(30) + 1)
    _write_fixtures(tmp_path, nrows=31, overrides={(30, 0): wrong})
    with pytest.raises(FixtureMismatchError) as err:
        table.run_table(30, tmp_path)
    assert (err.value.row, err.value.column) == (30, 0)
    assert err.value.expected == derangement_count(30) + 1
