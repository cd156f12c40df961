"""Run identity verification sweeps."""

from __future__ import annotations

import time
import typing
from concurrent.futures import ThreadPoolExecutor

import pandas as pd

from . import __version__, _helpers, conf
from .datatypes import VerificationReport
from .error import IdentityFailureError, UnknownIdentityError
from .suites import SUITES, SweepPlan

if typing.TYPE_CHECKING:
    from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

    from .datatypes import IdentityCheck


def select_identities(names: Sequence[str]) -> List[str]:
    """Expand ``all`` and validate identity ids.

    Raises:
        UnknownIdentityError: for an id that is not a key of
            :data:`~permfix.suites.SUITES`.
    """
    selected: List[str] = []
    for name in names:
        if name == "all":
            candidates: Sequence[str] = list(SUITES)
        elif name in SUITES:
            candidates = [name]
        else:
            raise UnknownIdentityError(name)
        selected.extend(c for c in candidates if c not in selected)
    return selected


def _run_suite(name: str, plan: SweepPlan) -> Tuple[str, List[IdentityCheck], float]:
    start = time.perf_counter()
    checks = list(SUITES[name].sweep(plan))
    return name, checks, (time.perf_counter() - start) * 1e3


def run_verify(
    plan: SweepPlan,
    names: Sequence[str],
    jobs: int = 1,
    config: Optional[Mapping[str, Any]] = None,
) -> VerificationReport:
    """Run the selected identity suites.

    Args:
        plan: the sweep ranges.
        names: identity ids, ``all`` selects every suite.
        jobs: number of worker threads the suites are spread over. The
            brute-force enumerations are split over plan.jobs threads.
        config: options recorded in the report.

    Returns:
        the report, checks sorted by identity id, n, k, x and j whatever the
        schedule.
    """
    selected = select_identities(names)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda name: _run_suite(name, plan), selected))
    else:
        results = [_run_suite(name, plan) for name in selected]
    checks = sorted(
        (chk for _, suite_checks, _ in results for chk in suite_checks),
        key=lambda chk: chk.sort_key(),
    )
    elapsed = {name: round(msecs, 3) for name, _, msecs in sorted(results)}
    return VerificationReport(__version__, dict(config or {}), tuple(checks), elapsed)


def _check_record(chk: IdentityCheck) -> Dict[str, Any]:
    rec: Dict[str, Any] = {
        "id": chk.identity_id,
        "n": chk.params.get("n"),
        "k": chk.params.get("k"),
    }
    if "x" in chk.params:
        rec["x"] = _helpers.render(chk.params["x"])
    if "j" in chk.params:
        rec["j"] = chk.params["j"]
    rec["lhs"] = _helpers.render(chk.lhs)
    rec["rhs"] = _helpers.render(chk.rhs)
    if chk.others:
        rec["others"] = [_helpers.render(side) for side in chk.others]
    rec["passed"] = chk.passed
    return rec


def report_to_dict(report: VerificationReport) -> Dict[str, Any]:
    """Plain data view of a report, with exact rational strings."""
    return {
        "version": report.tool_version,
        "command": "verify",
        "config": report.config,
        "checks": [_check_record(chk) for chk in report.checks],
        "totals": report.totals,
        "elapsed_ms": report.elapsed_ms,
    }


def report_to_json(report: VerificationReport) -> str:
    """Canonical JSON text of a report (sorted keys)."""
    return _helpers.canonical_json(report_to_dict(report))


def report_to_frame(report: VerificationReport) -> pd.DataFrame:
    """One row per check."""
    rows = []
    for chk in report.checks:
        rows.append(
            {
                "id": chk.identity_id,
                "n": chk.params.get("n"),
                "k": chk.params.get("k"),
                "x": _helpers.render(chk.params["x"]) if "x" in chk.params else "",
                "j": chk.params.get("j"),
                "lhs": _helpers.render(chk.lhs),
                "rhs": _helpers.render(chk.rhs),
                "passed": chk.passed,
            }
        )
    columns = ["id", "n", "k", "x", "j", "lhs", "rhs", "passed"]
    frame = pd.DataFrame(rows, columns=columns)
    return frame.astype({"n": "Int64", "k": "Int64", "j": "Int64"})


def report_to_text(report: VerificationReport) -> str:
    """Human readable summary, failures listed in full."""
    lines = [f"permfix {report.tool_version} verify"]
    for name, msecs in report.elapsed_ms.items():
        suite_checks = [chk for chk in report.checks if chk.identity_id == name]
        npass = sum(chk.passed for chk in suite_checks)
        lines.append(
            f"  {name:<14} {npass:>5}/{len(suite_checks):<5} passed  {msecs:10.1f} ms"
        )
    for chk in report.checks:
        if not chk.passed:
            prms = ", ".join(
                f"{key}={_helpers.render(val)}" for key, val in chk.params.items()
            )
            lines.append(f"FAILED {chk.identity_id} ({prms})")
            lines.append(f"  lhs: {_helpers.render(chk.lhs)}")
            lines.append(f"  rhs: {_helpers.render(chk.rhs)}")
            for side in chk.others:
                lines.append(f"  alt: {_helpers.render(side)}")
    totals = report.totals
    lines.append(f"{totals['passed']} passed, {totals['failed']} failed")
    return "\n".join(lines)


def cmd() -> None:
    """Verify identities on signed fixed points.

    Other Parameters:
        conf.core
        conf.verify
    """
    fmt = _helpers.output_format()
    n_max, k_max = _helpers.sweep_bounds()
    xs = _helpers.x_samples()
    cap = _helpers.enumeration_cap()
    names = select_identities(conf.verify.identity)
    jobs = max(conf.verify.jobs, 1)
    plan = SweepPlan(n_max=n_max, k_max=k_max, xs=xs, cap=cap, jobs=jobs)
    config = {
        "identity": names,
        "n_max": n_max,
        "k_max": k_max,
        "x": [_helpers.render(x) for x in xs],
        "cap": cap,
    }
    report = run_verify(plan, names, jobs, config)

    if fmt == "json":
        _helpers.write_output(report_to_json(report))
    elif fmt == "csv":
        _helpers.write_output(report_to_frame(report).to_csv(index=False))
    else:
        _helpers.write_output(report_to_text(report))

    if report.failed:
        raise IdentityFailureError(report.failed, len(report.checks))
