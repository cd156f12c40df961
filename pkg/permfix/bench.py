"""Time the determinant evaluation paths.

The paths form a ladder: permutation enumeration is O(n!), conjugacy classes
O(p(n)) and the closed form polynomial in n. Bareiss elimination evaluates
the determinant at the sampled x instead of producing a polynomial.
"""

from __future__ import annotations

import time
import typing

import numpy as np
import pandas as pd

from . import __version__, _helpers, conf
from .error import InvalidConfigError, MethodDisagreementError
from .exact import poly_eval
from .identities import det_closed
from .matrix import build_matrix, det_elimination
from .permutations import fix_profile

if typing.TYPE_CHECKING:
    from fractions import Fraction
    from typing import Any, Callable, Dict, List, Sequence, Tuple

BENCH_METHODS = ("leibniz", "cycle", "closed", "elimination")


def _leibniz(n: int, xs: Sequence[Fraction], cap: int) -> Any:
    # bypass the profile cache so that every run does the enumeration
    return fix_profile.__wrapped__(n, "bruteforce", cap).polynomial()


def _cycle(n: int, xs: Sequence[Fraction], cap: int) -> Any:
    return fix_profile.__wrapped__(n, "cycleclass").polynomial()


def _closed(n: int, xs: Sequence[Fraction], cap: int) -> Any:
    return det_closed(n)


def _elimination(n: int, xs: Sequence[Fraction], cap: int) -> Any:
    return tuple(det_elimination(build_matrix(n, x)) for x in xs)


_PATHS: Dict[str, Callable[[int, Sequence[Fraction], int], Any]] = {
    "leibniz": _leibniz,
    "cycle": _cycle,
    "closed": _closed,
    "elimination": _elimination,
}


def check_methods(methods: Sequence[str]) -> List[str]:
    """Validate benchmark method names, dropping duplicates."""
    selected: List[str] = []
    for meth in methods:
        if meth not in BENCH_METHODS:
            raise InvalidConfigError(
                "methods", f"{meth!r} is not one of {', '.join(BENCH_METHODS)}"
            )
        if meth not in selected:
            selected.append(meth)
    if not selected:
        raise InvalidConfigError("methods", "at least one method is needed")
    return selected


def _timed(func: Callable[[], Any], repeat: int) -> Tuple[Any, np.ndarray]:
    times: List[float] = []
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = func()
        times.append((time.perf_counter() - start) * 1e3)
    return result, np.array(times)


def run_bench(
    n_max: int,
    methods: Sequence[str],
    xs: Sequence[Fraction],
    cap: int,
    repeat: int = 3,
) -> pd.DataFrame:
    """Time the determinant paths for n = 1..n_max.

    Results of every path are compared with the closed form before any timing
    is kept. The leibniz path is skipped for n above the enumeration cap.

    Args:
        n_max: largest matrix order.
        methods: subset of :data:`BENCH_METHODS`.
        xs: sample points of the elimination path.
        cap: enumeration cap.
        repeat: number of timed runs per method and n.

    Returns:
        one row per (n, method) with the number of runs and the median and
        minimum wall time in milliseconds.

    Raises:
        MethodDisagreementError: if a path disagrees with the closed form.
    """
    methods = check_methods(methods)
    repeat = max(repeat, 1)
    rows = []
    for n in range(1, n_max + 1):
        reference = det_closed(n)
        at_xs = tuple(poly_eval(reference, x) for x in xs)
        for meth in methods:
            if meth == "leibniz" and n > cap:
                continue
            path = _PATHS[meth]
            result, times = _timed(lambda: path(n, xs, cap), repeat)
            expected = at_xs if meth == "elimination" else reference
            if result != expected:
                raise MethodDisagreementError(n, meth, "closed")
            rows.append(
                {
                    "n": n,
                    "method": meth,
                    "runs": repeat,
                    "median_ms": float(np.median(times)),
                    "min_ms": float(np.min(times)),
                }
            )
    return pd.DataFrame(rows, columns=["n", "method", "runs", "median_ms", "min_ms"])


def to_text(frame: pd.DataFrame) -> str:
    """Median times in a n x method grid."""
    grid = frame.pivot(index="n", columns="method", values="median_ms")
    grid = grid.reindex(columns=[m for m in BENCH_METHODS if m in grid.columns])
    return "median wall time (ms)\n" + grid.to_string(
        float_format=lambda t: f"{t:.3f}", na_rep="-"
    )


def to_json(frame: pd.DataFrame, config: Dict[str, Any]) -> str:
    records = frame.to_dict(orient="records")
    return _helpers.canonical_json(
        {
            "version": __version__,
            "command": "bench",
            "config": config,
            "timings": records,
        }
    )


def cmd() -> None:
    """Time the determinant evaluation paths.

    Other Parameters:
        conf.core
        conf.bench
    """
    fmt = _helpers.output_format()
    n_max, _ = _helpers.sweep_bounds()
    xs = _helpers.x_samples()
    cap = _helpers.enumeration_cap()
    methods = check_methods(conf.bench.methods)
    if conf.bench.repeat < 1:
        raise InvalidConfigError(
            "repeat", f"should be >= 1 (got {conf.bench.repeat})"
        )
    frame = run_bench(n_max, methods, xs, cap, conf.bench.repeat)
    if fmt == "json":
        config = {
            "n_max": n_max,
            "methods": methods,
            "x": [_helpers.render(x) for x in xs],
            "cap": cap,
            "repeat": conf.bench.repeat,
        }
        _helpers.write_output(to_json(frame, config))
    elif fmt == "csv":
        _helpers.write_output(frame.to_csv(index=False))
    else:
        _helpers.write_output(to_text(frame))
