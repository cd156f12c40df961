"""Exceptions and warnings raised by permfix."""

from __future__ import annotations

import typing

if typing.TYPE_CHECKING:
    from pathlib import Path
    from typing import Any, Sequence


class PermfixError(Exception):
    """Base class for exceptions raised by permfix.

    Note:
        All exceptions derive from this class. To catch any error that might be
        raised by permfix due to invalid requests, you only need to catch this
        exception.
    """

    pass


class UsageError(PermfixError):
    """Raised when command line options are invalid or inconsistent.

    The command line tool exits with status 2 on such errors.
    """

    pass


class InvalidRationalError(UsageError):
    """Raised when a rational literal does not match ``[-]digits[/digits]``.

    Attributes:
        literal: the offending text.
    """

    def __init__(self, literal: str):
        self.literal = literal
        super().__init__(f"invalid rational literal {literal!r}")


class InvalidFormatError(UsageError):
    """Raised when an unknown output format is requested.

    Attributes:
        fmt: the invalid format.
        allowed: the accepted formats.
    """

    def __init__(self, fmt: str, allowed: Sequence[str]):
        self.fmt = fmt
        self.allowed = allowed
        super().__init__(f"format should be one of {', '.join(allowed)} (got {fmt})")


class InvalidConfigError(UsageError):
    """Raised when a configuration option has an invalid value.

    Attributes:
        option: name of the option.
        msg: what is wrong with it.
    """

    def __init__(self, option: str, msg: str):
        self.option = option
        self.msg = msg
        super().__init__(f"{option}: {msg}")


class UnknownIdentityError(UsageError, KeyError):
    """Raised when an invalid identity id is requested.

    Attributes:
        identity_id: the invalid identity id.
    """

    def __init__(self, identity_id: str):
        self.identity_id = identity_id
        super().__init__(identity_id)


class InvalidDenominatorError(PermfixError, ZeroDivisionError):
    """Raised when a rational with a zero denominator is requested.

    Attributes:
        numerator: the numerator of the rejected fraction.
    """

    def __init__(self, numerator: Any):
        self.numerator = numerator
        super().__init__(f"zero denominator for {numerator}")


class DomainError(PermfixError, ValueError):
    """Raised when an operation is called outside of its domain.

    Attributes:
        operation: name of the operation.
        msg: description of the violated precondition.
    """

    def __init__(self, operation: str, msg: str):
        self.operation = operation
        self.msg = msg
        super().__init__(f"{operation}: {msg}")


class UnsupportedClosedFormError(DomainError):
    """Raised when no displayed closed form exists for the requested order.

    Attributes:
        k: the requested integration order.
    """

    def __init__(self, k: int):
        self.k = k
        super().__init__(
            "p_closed", f"no closed form for k={k} (only 1, 2, 3), use p_poly"
        )


class EnumerationCapError(PermfixError):
    """Raised when permutation enumeration exceeds the configured cap.

    Attributes:
        n: the requested group order.
        cap: the enumeration cap.
    """

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(
            f"enumerating S_{n} exceeds the enumeration cap {cap} "
            "(raise it with --cap or use the cycle-class path)"
        )


class EmptyMatrixError(PermfixError):
    """Raised when a matrix of order zero is requested."""

    def __init__(self) -> None:
        super().__init__("matrix order should be at least 1")


class IdentityFailureError(PermfixError):
    """Raised after a verification sweep in which some checks failed.

    Attributes:
        failed: number of failed checks.
        total: number of checks.
    """

    def __init__(self, failed: int, total: int):
        self.failed = failed
        self.total = total
        super().__init__(f"{failed} of {total} identity checks failed")


class FixtureMismatchError(PermfixError):
    """Raised when a computed table entry differs from the OEIS fixture.

    Attributes:
        sequence: OEIS id of the fixture.
        row: row index (n).
        column: column index (f), None for one-dimensional sequences.
        expected: value read from the fixture.
        found: computed value.
    """

    def __init__(
        self, sequence: str, row: int, column: Any, expected: int, found: int
    ):
        self.sequence = sequence
        self.row = row
        self.column = column
        self.expected = expected
        self.found = found
        where = f"row {row}" if column is None else f"row {row}, column {column}"
        super().__init__(
            f"{sequence} mismatch at {where}: fixture has {expected}, "
            f"computed {found}"
        )


class MissingFixtureError(PermfixError):
    """Raised when an OEIS fixture file cannot be found.

    Attributes:
        path: expected location of the fixture.
    """

    def __init__(self, path: Path):
        self.path = path
        super().__init__(f"{path} fixture not found")


class MalformedFixtureError(PermfixError):
    """Raised when an OEIS b-file line is not a pair of integers.

    Attributes:
        path: the fixture file.
        line: the offending line, stripped.
    """

    def __init__(self, path: Path, line: str):
        self.path = path
        self.line = line
        super().__init__(f"{path}: expected 'index value' integers, got {line!r}")


class OutputFileError(PermfixError):
    """Raised when the output file cannot be written.

    Attributes:
        path: the requested output path.
        reason: what the operating system reported.
    """

    def __init__(self, path: Path, reason: str):
        self.path = path
        self.reason = reason
        super().__init__(f"cannot write {path}: {reason}")


class MethodDisagreementError(PermfixError):
    """Raised when two determinant evaluation paths disagree.

    Attributes:
        n: the matrix order.
        method: the disagreeing method.
        reference: the method used as reference.
    """

    def __init__(self, n: int, method: str, reference: str):
        self.n = n
        self.method = method
        self.reference = reference
        super().__init__(f"n={n}: {method} disagrees with {reference}")


class PermfixWarning(UserWarning):
    """Base class for warnings issued by permfix."""

    pass


class EnumerationCapWarning(PermfixWarning):
    """Issued when the enumeration cap is raised above its default."""

    pass
