from fractions import Fraction

import pytest

from permfix.error import DomainError, EmptyMatrixError
from permfix.exact import poly_eval
from permfix.identities import det_closed
from permfix.matrix import (
    RationalMatrix,
    build_matrix,
    det_elimination,
    eigen_action_check,
    eigenvalue_product,
)


def test_build_matrix() -> None:
    half = Fraction(1, 2)
    mat = build_matrix(3, half)
    assert mat.order == 3
    assert mat[1, 1] == half
    assert mat[0, 2] == 1


def test_build_empty_matrix() -> None:
    with pytest.raises(EmptyMatrixError):
        build_matrix(0, 1)


def test_non_square() -> None:
    with pytest.raises(DomainError):
        RationalMatrix(((1, 2), (3,)))  # type: ignore[arg-type]


@pytest.mark.parametrize("n", range(1, 9))
def test_elimination_matches_closed_form(n: int, default_xs: list) -> None:
    det = det_closed(n)
    for x in default_xs:
        assert det_elimination(build_matrix(n, x)) == poly_eval(det, x)


@pytest.mark.parametrize("n", range(2, 9))
def test_singular_points(n: int) -> None:
    assert det_elimination(build_matrix(n, 1)) == 0
    assert det_elimination(build_matrix(n, 1 - n)) == 0


def test_row_swap_flips_sign() -> None:
    mat = RationalMatrix(((0, 1), (2, 3)))  # type: ignore[arg-type]
    assert det_elimination(mat) == -2
    assert det_elimination(mat.permuted((1, 0))) == -2


def test_matvec() -> None:
    mat = build_matrix(2, 3)
    assert mat.matvec((1, -1)) == (Fraction(2), Fraction(-2))
    with pytest.raises(DomainError):
        mat.matvec((1, 2, 3))


@pytest.mark.parametrize("n", range(2, 13))
def test_eigenvectors(n: int, default_xs: list) -> None:
    for x in default_xs:
        checks = eigen_action_check(n, x)
        assert len(checks) == n
        assert checks[0].label == "ones"
        assert checks[0].eigenvalue == x + n - 1
        assert [chk.j for chk in checks[1:]] == list(range(2, n + 1))
        assert all(chk.passed for chk in checks)


def test_eigenvectors_need_two_points() -> None:
    with pytest.raises(DomainError):
        eigen_action_check(1, 2)


@pytest.mark.parametrize("n", range(1, 9))
def test_eigenvalue_product(n: int, default_xs: list) -> None:
    det = det_closed(n)
    for x in default_xs:
        assert eigenvalue_product(n, x) == poly_eval(det, x)


def test_small_determinants() -> None:
    assert det_elimination(build_matrix(2, 5)) == 24
    assert det_elimination(build_matrix(3, 1)) == 0
    assert det_elimination(build_matrix(3, 0)) == 2
    assert det_elimination(build_matrix(1, 7)) == 7


def test_eigenvalues_of_zero_diagonal() -> None:
    checks = eigen_action_check(2, 0)
    assert [chk.eigenvalue for chk in checks] == [1, -1]
    assert all(chk.passed for chk in checks)


def test_all_ones_kernel() -> None:
    checks = eigen_action_check(2, 1)
    assert checks[1].image == (0, 0)
    assert checks[1].passed
