"""List the permutations of S_n with their sign and fixed points.

Permutations are shown in 1-indexed cycle notation, fixed points included, in
the adjacent-transposition order of
:func:`~permfix.permutations.enumerate_permutations`.
"""

from __future__ import annotations

import pandas as pd

from . import __version__, _helpers
from .permutations import DEFAULT_CAP, enumerate_permutations


def permutation_frame(n: int, cap: int = DEFAULT_CAP) -> pd.DataFrame:
    """One row per permutation of S_n: cycles, sign and fixed points.

    Raises:
        EnumerationCapError: if n exceeds cap.
    """
    records = [
        {"cycles": perm.cycle_notation(), "sign": perm.sign, "fix": perm.fix_count}
        for perm in enumerate_permutations(n, cap)
    ]
    return pd.DataFrame(records, columns=["cycles", "sign", "fix"])


def to_text(frame: pd.DataFrame, n: int) -> str:
    """Aligned listing headed by the group size."""
    width = max(len(cyc) for cyc in frame["cycles"])
    lines = [f"S_{n}: {len(frame)} permutations"]
    lines.extend(
        f"{cyc:<{width}}  {int(sign):+d}  fix={fix}"
        for cyc, sign, fix in frame.itertuples(index=False)
    )
    return "\n".join(lines)


def to_json(frame: pd.DataFrame, n: int) -> str:
    """JSON document holding the permutations in enumeration order."""
    return _helpers.canonical_json(
        {
            "version": __version__,
            "command": "permutations",
            "config": {"n": n},
            "permutations": [
                {"cycles": cyc, "sign": int(sign), "fix": int(fix)}
                for cyc, sign, fix in frame.itertuples(index=False)
            ],
        }
    )


def cmd() -> None:
    """List the permutations of S_n with sign and fixed points.

    n is the value of ``--n-max``, at most the enumeration cap.

    Other Parameters:
        conf.core.n_max
        conf.core.cap
        conf.core.format
    """
    fmt = _helpers.output_format()
    n, _ = _helpers.sweep_bounds()
    cap = _helpers.enumeration_cap()
    frame = permutation_frame(n, cap)
    if fmt == "json":
        _helpers.write_output(to_json(frame, n))
    elif fmt == "csv":
        _helpers.write_output(frame.to_csv(index=False))
    else:
        _helpers.write_output(to_text(frame, n))
