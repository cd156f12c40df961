"""Various helper functions."""

from __future__ import annotations

import json
import re
import sys
import typing
import warnings
from fractions import Fraction
from inspect import getdoc
from pathlib import Path

from . import conf
from .error import (
    EnumerationCapWarning,
    InvalidConfigError,
    InvalidFormatError,
    InvalidRationalError,
    OutputFileError,
)
from .exact import Polynomial
from .permutations import CYCLECLASS_MAX, DEFAULT_CAP

if typing.TYPE_CHECKING:
    from typing import Any, List, Tuple

FORMATS = ("text", "json", "csv")

_RATIONAL = re.compile(r"-?\d+(/\d+)?")


def baredoc(obj: object) -> str:
    """Return the first line of the docstring of an object.

    Trailing periods and spaces as well as leading spaces are removed from the
    output.

    Args:
        obj: any Python object.
    Returns:
        str: the first line of the docstring of obj.
    """
    doc = getdoc(obj)
    if not doc:
        return ""
    doc = doc.splitlines()[0]
    return doc.rstrip(" .").lstrip()


def parse_rational(literal: str) -> Fraction:
    """Parse a ``[-]digits[/digits]`` literal.

    Raises:
        InvalidRationalError: on any other text, including a zero denominator.
    """
    text = literal.strip()
    if not _RATIONAL.fullmatch(text):
        raise InvalidRationalError(literal)
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise InvalidRationalError(literal) from None


def canonical_json(data: Any) -> str:
    """Serialize with sorted keys and fixed indentation."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)


def render(value: Any) -> str:
    """Exact string of a rational, polynomial or vector."""
    if isinstance(value, tuple):
        return "[" + ", ".join(render(v) for v in value) + "]"
    if isinstance(value, (Fraction, int, Polynomial)):
        return str(value)
    raise TypeError(f"cannot render {type(value).__name__}")


def x_samples() -> List[Fraction]:
    """Parsed value of conf.core.x.

    Other Parameters:
        conf.core.x: rational sample points.
    """
    samples = [parse_rational(lit) for lit in conf.core.x]
    if not samples:
        raise InvalidConfigError("x", "at least one sample point is needed")
    return samples


def output_format() -> str:
    """Validated value of conf.core.format."""
    fmt = conf.core.format
    if fmt not in FORMATS:
        raise InvalidFormatError(fmt, FORMATS)
    return fmt


def enumeration_cap() -> int:
    """Validated enumeration cap, warning when raised above the default.

    Other Parameters:
        conf.core.cap: the enumeration cap.
    """
    cap = conf.core.cap
    if cap < 1:
        raise InvalidConfigError("cap", f"should be >= 1 (got {cap})")
    if cap > DEFAULT_CAP:
        warnings.warn(
            f"enumeration cap raised to {cap}: S_{cap} has "
            "a very large number of permutations",
            EnumerationCapWarning,
        )
    return cap


def sweep_bounds(k_min: int = 0) -> Tuple[int, int]:
    """Validated (n_max, k_max) pair.

    Other Parameters:
        conf.core.n_max: largest n.
        conf.core.k_max: largest k.
    """
    n_max, k_max = conf.core.n_max, conf.core.k_max
    if not 1 <= n_max <= CYCLECLASS_MAX:
        raise InvalidConfigError(
            "n_max", f"should be in [1, {CYCLECLASS_MAX}] (got {n_max})"
        )
    if k_max < k_min:
        raise InvalidConfigError("k_max", f"should be >= {k_min} (got {k_max})")
    return n_max, k_max


def write_output(text: str) -> None:
    """Write text to conf.core.out, or to stdout if it is empty.

    Raises:
        OutputFileError: if the output file cannot be written.

    Other Parameters:
        conf.core.out: output file path.
    """
    if not text.endswith("\n"):
        text += "\n"
    if conf.core.out:
        path = Path(conf.core.out)
        try:
            path.write_text(text)
        except OSError as err:
            raise OutputFileError(path, err.strerror or str(err)) from err
    else:
        sys.stdout.write(text)
