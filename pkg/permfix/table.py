"""Print fixed-point triangles checked against OEIS fixtures.

The unsigned triangle is OEIS A008290 (rencontres numbers), its first column
is OEIS A000166 (derangements). The fixtures are OEIS b-files, ``index value``
per line, shipped in :mod:`permfix._fixtures`.
"""

from __future__ import annotations

import importlib.resources as imlr
import re
import typing
from pathlib import Path

import pandas as pd

from . import __version__, _fixtures, _helpers, conf
from .error import FixtureMismatchError, MalformedFixtureError, MissingFixtureError
from .permutations import derangement_count, fix_profile

if typing.TYPE_CHECKING:
    from typing import Dict, Optional, Tuple

DERANGEMENTS = "A000166"
RENCONTRES = "A008290"

_INTEGER = re.compile(r"-?\d+")


def _fixture_path(seq: str, directory: Optional[Path]) -> Path:
    fname = f"b{seq[1:]}.txt"
    if directory is None:
        return Path(str(imlr.files(_fixtures) / fname))
    return directory / fname


def read_bfile(seq: str, directory: Optional[Path] = None) -> pd.Series:
    """Read an OEIS b-file.

    Args:
        seq: OEIS id, e.g. ``A000166``.
        directory: where to look for ``b000166.txt``. The packaged fixtures are
            used if None.

    Returns:
        the terms as Python integers, indexed by their offset.

    Raises:
        MissingFixtureError: if the file does not exist.
        MalformedFixtureError: if a line is not a pair of integers.
    """
    path = _fixture_path(seq, directory)
    if not path.is_file():
        raise MissingFixtureError(path)
    # read as text, terms of full b-files do not fit in int64
    try:
        data = pd.read_csv(
            path,
            sep=r"\s+",
            comment="#",
            header=None,
            names=["index", "value"],
            index_col=False,
            dtype=str,
        )
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as err:
        raise MalformedFixtureError(path, str(err)) from err
    terms: Dict[int, int] = {}
    for index, value in data.itertuples(index=False):
        if not all(
            isinstance(field, str) and _INTEGER.fullmatch(field)
            for field in (index, value)
        ):
            raise MalformedFixtureError(path, f"{index} {value}")
        terms[int(index)] = int(value)
    return pd.Series(terms, dtype=object, name=seq).sort_index()


def triangle_rows(terms: pd.Series) -> Dict[int, Tuple[int, ...]]:
    """Split a triangle read by rows into its rows."""
    rows: Dict[int, Tuple[int, ...]] = {}
    values = [int(v) for v in terms.sort_index()]
    start, row = 0, 0
    while start + row + 1 <= len(values):
        rows[row] = tuple(values[start : start + row + 1])
        start += row + 1
        row += 1
    return rows


def fixed_point_frame(n_max: int) -> pd.DataFrame:
    """Unsigned and signed fixed-point counts, one row per (n, f).

    Counts come from the conjugacy class path, rows 0..n_max.
    """
    records = []
    for n in range(n_max + 1):
        prof = fix_profile(n, "cycleclass")
        for fix in range(n + 1):
            records.append(
                {
                    "n": n,
                    "f": fix,
                    "unsigned": prof.unsigned_counts[fix],
                    "signed": prof.signed_counts[fix],
                }
            )
    return pd.DataFrame(records, columns=["n", "f", "unsigned", "signed"])


def derangement_series(n_max: int) -> pd.Series:
    """Derangement numbers D_0..D_n_max."""
    return pd.Series(
        [derangement_count(n) for n in range(n_max + 1)],
        index=pd.RangeIndex(n_max + 1, name="n"),
        name="derangements",
    )


def cross_check(
    frame: pd.DataFrame, derangements: pd.Series, directory: Optional[Path] = None
) -> None:
    """Compare the computed table with the OEIS fixtures.

    Every row present both in the table and in a fixture is compared, as
    Python integers.

    Raises:
        FixtureMismatchError: naming the first differing row and column.
        MalformedFixtureError: if a fixture line is not a pair of integers.
    """
    rows = triangle_rows(read_bfile(RENCONTRES, directory))
    for n, group in frame.groupby("n", sort=True):
        if n not in rows:
            continue
        expected = rows[n]
        computed = [int(v) for v in group.sort_values("f")["unsigned"]]
        for fix, (exp, got) in enumerate(zip(expected, computed)):
            if exp != got:
                raise FixtureMismatchError(RENCONTRES, n, fix, exp, got)
    terms = read_bfile(DERANGEMENTS, directory)
    for n, exp in terms.items():
        if n not in derangements.index:
            continue
        got = int(derangements[n])
        if got != exp:
            raise FixtureMismatchError(DERANGEMENTS, n, None, exp, got)


def run_table(
    n_max: int, directory: Optional[Path] = None
) -> Tuple[pd.DataFrame, pd.Series]:
    """Build and cross-check the fixed-point triangles.

    Args:
        n_max: last row of the triangles.
        directory: location of the OEIS b-files, packaged ones if None.

    Returns:
        the (n, f, unsigned, signed) table and the derangement column.
    """
    frame = fixed_point_frame(n_max)
    derangements = derangement_series(n_max)
    cross_check(frame, derangements, directory)
    return frame, derangements


def _triangle_text(frame: pd.DataFrame, column: str) -> str:
    width = len(str(frame["n"].max()))
    return "\n".join(
        f"n={n:<{width}}  " + " ".join(str(v) for v in group.sort_values("f")[column])
        for n, group in frame.groupby("n", sort=True)
    )


def to_text(frame: pd.DataFrame, derangements: pd.Series) -> str:
    """Three text blocks: unsigned triangle, signed triangle, derangements."""
    return "\n\n".join(
        [
            f"unsigned fixed points ({RENCONTRES}):\n"
            + _triangle_text(frame, "unsigned"),
            "signed fixed points:\n" + _triangle_text(frame, "signed"),
            f"derangements ({DERANGEMENTS}):\n"
            + " ".join(str(v) for v in derangements),
        ]
    )


def to_json(frame: pd.DataFrame, derangements: pd.Series) -> str:
    """JSON document holding the rows and the derangement column."""
    rows = [
        {key: int(val) for key, val in rec.items()}
        for rec in frame.to_dict(orient="records")
    ]
    return _helpers.canonical_json(
        {
            "version": __version__,
            "command": "table",
            "config": {"n_max": int(frame["n"].max())},
            "rows": rows,
            "derangements": [int(v) for v in derangements],
        }
    )


def cmd() -> None:
    """Print fixed-point triangles cross-checked with OEIS.

    Other Parameters:
        conf.core.n_max
        conf.table.fixtures
    """
    fmt = _helpers.output_format()
    n_max, _ = _helpers.sweep_bounds()
    directory = None if conf.table.fixtures is None else Path(conf.table.fixtures)
    frame, derangements = run_table(n_max, directory)
    if fmt == "json":
        _helpers.write_output(to_json(frame, derangements))
    elif fmt == "csv":
        _helpers.write_output(frame.to_csv(index=False))
    else:
        _helpers.write_output(to_text(frame, derangements))
