"""Explicit matrix M_x and its exact determinant and eigenvectors.

This is an oracle independent of any closed form: the determinant is obtained
by fraction-free elimination and eigen facts are checked as explicit
matrix-vector products.
"""

from __future__ import annotations

import typing
from dataclasses import dataclass
from fractions import Fraction

from .datatypes import EigenCheck
from .error import DomainError, EmptyMatrixError
from .exact import as_fraction

if typing.TYPE_CHECKING:
    from typing import List, Sequence, Tuple

    from .exact import Scalar


@dataclass(frozen=True)
class RationalMatrix:
    """Square matrix with rational entries.

    Attributes:
        entries: rows of the matrix.
    """

    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(as_fraction(v) for v in row) for row in self.entries)
        if any(len(row) != len(rows) for row in rows):
            raise DomainError("RationalMatrix", "matrix should be square")
        object.__setattr__(self, "entries", rows)

    @property
    def order(self) -> int:
        """Number of rows (and columns)."""
        return len(self.entries)

    def __getitem__(self, idx: Tuple[int, int]) -> Fraction:
        i, j = idx
        return self.entries[i][j]

    def matvec(self, vec: Sequence[Scalar]) -> Tuple[Fraction, ...]:
        """Exact product of the matrix with a column vector."""
        if len(vec) != self.order:
            raise DomainError("matvec", "vector size differs from matrix order")
        col = [as_fraction(v) for v in vec]
        return tuple(
            sum((a * b for a, b in zip(row, col)), Fraction(0)) for row in self.entries
        )

    def permuted(self, perm: Sequence[int]) -> RationalMatrix:
        """Matrix P M P^T, rows and columns reordered by perm."""
        return RationalMatrix(
            tuple(tuple(self.entries[pi][pj] for pj in perm) for pi in perm)
        )


def build_matrix(n: int, x: Scalar) -> RationalMatrix:
    """The n x n matrix with x on the diagonal and 1 elsewhere.

    Raises:
        EmptyMatrixError: if n < 1.
    """
    if n < 1:
        raise EmptyMatrixError()
    xval = as_fraction(x)
    one = Fraction(1)
    return RationalMatrix(
        tuple(tuple(xval if i == j else one for j in range(n)) for i in range(n))
    )


def det_elimination(mat: RationalMatrix) -> Fraction:
    """Exact determinant by Bareiss fraction-free elimination.

    Pivots are the first nonzero entry down the current column; a row swap
    flips the sign. Singular matrices give 0.
    """
    size = mat.order
    if size == 0:
        raise EmptyMatrixError()
    work: List[List[Fraction]] = [list(row) for row in mat.entries]
    sign = 1
    prev = Fraction(1)
    for k in range(size - 1):
        if not work[k][k]:
            for i in range(k + 1, size):
                if work[i][k]:
                    work[i], work[k] = work[k], work[i]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = work[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                work[i][j] = (pivot * work[i][j] - work[i][k] * work[k][j]) / prev
            work[i][k] = Fraction(0)
        prev = pivot
    return sign * work[size - 1][size - 1]


def eigen_action_check(n: int, x: Scalar) -> Tuple[EigenCheck, ...]:
    """Check the eigenvectors of M_x by exact matrix-vector products.

    The all-ones vector has eigenvalue x+n-1 and every e_1-e_j, for j in
    [2, n], has eigenvalue x-1.

    Returns:
        one :class:`~permfix.datatypes.EigenCheck` per vector.
    """
    if n < 2:
        raise DomainError("eigen_action_check", f"n={n} should be >= 2")
    xval = as_fraction(x)
    mat = build_matrix(n, xval)
    checks = []
    ones = (Fraction(1),) * n
    lam = xval + n - 1
    checks.append(
        EigenCheck("ones", None, lam, mat.matvec(ones), tuple(lam * v for v in ones))
    )
    lam = xval - 1
    for j in range(1, n):
        vec = tuple(
            Fraction(1) if i == 0 else Fraction(-1) if i == j else Fraction(0)
            for i in range(n)
        )
        checks.append(
            EigenCheck(
                "e1-ej", j + 1, lam, mat.matvec(vec), tuple(lam * v for v in vec)
            )
        )
    return tuple(checks)


def eigenvalue_product(n: int, x: Scalar) -> Fraction:
    """Product of the eigenvalues of M_x with multiplicities."""
    xval = as_fraction(x)
    return (xval + n - 1) * (xval - 1) ** (n - 1)
