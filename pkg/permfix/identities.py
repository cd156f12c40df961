"""Signed fixed-point identities, each as a brute-force and a closed side.

Brute-force sides are sums over S_n assembled from a
:class:`~permfix.datatypes.FixProfile`; they take a ``method`` argument
selecting permutation enumeration (``bruteforce``) or conjugacy classes
(``cycleclass``), see :func:`~permfix.permutations.fix_profile`. ``jobs`` splits
the permutation enumeration over threads.
"""

from __future__ import annotations

import math
import typing
from fractions import Fraction
from functools import lru_cache

from .datatypes import IdentityCheck
from .error import DomainError, UnsupportedClosedFormError
from .exact import (
    Polynomial,
    binomial,
    factorial,
    falling_factorial,
    poly_derivative,
    poly_eval,
    poly_integrate_from_zero,
    sign_of,
)
from .permutations import DEFAULT_CAP, fix_profile

if typing.TYPE_CHECKING:
    from typing import Tuple

IDENTITY_IDS = (
    "det",
    "thm1",
    "thm1_x1",
    "thm1_x2",
    "thm2",
    "p_poly",
    "p_closed",
    "st_chain",
    "p1_recurrence",
    "generating",
)
"""Identity ids of the displayed identities."""

EXTRA_IDENTITY_IDS = ("thm1_product", "thm2_special", "det_matrix", "eigen")
"""Identity ids of proof steps, displayed special cases and matrix checks."""

X = Polynomial.x()


def _require(cond: bool, operation: str, msg: str) -> None:
    if not cond:
        raise DomainError(operation, msg)


def det_closed(n: int) -> Polynomial:
    """Closed form (x-1+n)(x-1)^(n-1) of det M_x, expanded."""
    _require(n >= 1, "det_closed", f"n={n} should be >= 1")
    return (X + (n - 1)) * (X - 1) ** (n - 1)


def det_leibniz(n: int, cap: int = DEFAULT_CAP, jobs: int = 1) -> Polynomial:
    """Leibniz sum of sign * x^fix over every permutation of S_n."""
    return fix_profile(n, "bruteforce", cap, jobs).polynomial()


def det_cycleclass(n: int) -> Polynomial:
    """Leibniz sum regrouped by conjugacy class."""
    _require(n >= 1, "det_cycleclass", f"n={n} should be >= 1")
    return fix_profile(n, "cycleclass").polynomial()


def thm1_lhs(
    n: int,
    k: int,
    method: str = "bruteforce",
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
) -> Polynomial:
    """Sum of sign * (fix)_k * x^(fix-k) over S_n.

    Terms with fix < k vanish with their falling factorial.
    """
    _require(0 <= k <= n, "thm1_lhs", f"k={k} should be in [0, n={n}]")
    prof = fix_profile(n, method, cap, jobs)
    return Polynomial(
        tuple(
            prof.signed_counts[fix] * falling_factorial(fix, k)
            for fix in range(k, n + 1)
        )
    )


def thm1_rhs(n: int, k: int) -> Polynomial:
    """(x-1)^(n-k-1) * n! (x+n-k-1) / (n-k)!, for 0 <= k <= n-1.

    Raises:
        DomainError: for k >= n, where the k-th derivative is the constant n!.
    """
    _require(n >= 1, "thm1_rhs", f"n={n} should be >= 1")
    _require(k >= 0, "thm1_rhs", f"k={k} should be >= 0")
    _require(
        k <= n - 1,
        "thm1_rhs",
        f"k={k} >= n={n}: the k=n derivative is the constant n! = {factorial(n)}",
    )
    return (X - 1) ** (n - k - 1) * (X + (n - k - 1)) * Fraction(
        factorial(n), factorial(n - k)
    )


def thm1_product_rule(n: int, k: int) -> Polynomial:
    """(x-1+n) ((x-1)^(n-1))^(k) + k ((x-1)^(n-1))^(k-1)."""
    _require(n >= 1 and 0 <= k <= n, "thm1_product_rule", f"n={n}, k={k}")
    base = (X - 1) ** (n - 1)
    deriv = (X + (n - 1)) * base.derivative(k)
    if k:
        deriv = deriv + k * base.derivative(k - 1)
    return deriv


def thm1_factored(n: int, k: int) -> Polynomial:
    """(x-1)^(n-k-1) (n-1)!/(n-k-1)! (x-1+n + k(x-1)/(n-k))."""
    _require(n >= 1 and 0 <= k <= n - 1, "thm1_factored", f"n={n}, k={k}")
    inner = X + (n - 1) + (X - 1) * Fraction(k, n - k)
    return (X - 1) ** (n - k - 1) * inner * Fraction(
        factorial(n - 1), factorial(n - k - 1)
    )


def thm1_special_x1(n: int) -> Tuple[Fraction, ...]:
    """Derivatives of order k = 0..n of det M_x evaluated at x = 1."""
    _require(n >= 1, "thm1_special_x1", f"n={n} should be >= 1")
    det = det_closed(n)
    return tuple(poly_eval(poly_derivative(det, k), 1) for k in range(n + 1))


def thm1_special_x2(
    n: int,
    k: int,
    method: str = "bruteforce",
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
) -> IdentityCheck:
    """The derivative identity at x = 2: the sum equals n!(n-k+1)/(n-k)!."""
    _require(1 <= k <= n - 1, "thm1_special_x2", f"k={k} should be in [1, n-1]")
    lhs = poly_eval(thm1_lhs(n, k, method, cap, jobs), 2)
    rhs = Fraction(factorial(n) * (n - k + 1), factorial(n - k))
    return IdentityCheck("thm1_x2", {"n": n, "k": k, "x": Fraction(2)}, lhs, rhs)


def thm2_lhs(
    n: int,
    k: int,
    method: str = "bruteforce",
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
) -> Fraction:
    """Sum of sign * fix!/(fix+k)! over S_n."""
    _require(k >= 1, "thm2_lhs", f"k={k} should be >= 1")
    prof = fix_profile(n, method, cap, jobs)
    return sum(
        (
            count * Fraction(factorial(fix), factorial(fix + k))
            for fix, count in enumerate(prof.signed_counts)
        ),
        Fraction(0),
    )


def thm2_rhs(n: int, k: int) -> Fraction:
    """(-1)^(n+1) (n^2+(k-1)n-(k-1)) / ((k-1)! (n+k-1) (n+k))."""
    _require(n >= 1 and k >= 1, "thm2_rhs", f"n={n}, k={k} should be >= 1")
    num = n * n + (k - 1) * n - (k - 1)
    den = factorial(k - 1) * (n + k - 1) * (n + k)
    return sign_of(n + 1) * Fraction(num, den)


def thm2_displayed(n: int, k: int) -> Fraction:
    """Special values of the integral identity for k = 1, 2, 3."""
    _require(n >= 1, "thm2_displayed", f"n={n} should be >= 1")
    sgn = sign_of(n + 1)
    if k == 1:
        return sgn * Fraction(n, n + 1)
    if k == 2:
        # (n+phi)(n+1-phi) = n^2+n-1
        return sgn * Fraction(n * n + n - 1, (n + 1) * (n + 2))
    if k == 3:
        return sgn * Fraction((n + 1) ** 2 - 3, 2 * (n + 2) * (n + 3))
    raise UnsupportedClosedFormError(k)


def p1_displayed(n: int, k: int) -> Fraction:
    """Displayed expanded sums for P_{n,k}(1), k = 1, 2, 3."""
    _require(n >= 1, "p1_displayed", f"n={n} should be >= 1")
    plus, minus = sign_of(n + 1), sign_of(n)
    first = plus * Fraction(n, n + 1)
    if k == 1:
        return first
    if k == 2:
        return (
            first
            + Fraction(plus, (n + 1) * (n + 2))
            + Fraction(minus, n + 1)
        )
    if k == 3:
        return (
            plus * Fraction(n, 2 * (n + 1))
            + Fraction(plus, (n + 1) * (n + 2))
            + Fraction(minus, n + 1)
            + Fraction(minus, (n + 1) * (n + 2) * (n + 3))
            + Fraction(plus, (n + 1) * (n + 2))
        )
    raise UnsupportedClosedFormError(k)


@lru_cache(maxsize=None)
def p_poly(n: int, k: int) -> Polynomial:
    """k-fold antiderivative from zero of det M_x."""
    _require(n >= 1 and k >= 1, "p_poly", f"n={n}, k={k} should be >= 1")
    prev = det_closed(n) if k == 1 else p_poly(n, k - 1)
    return poly_integrate_from_zero(prev)


def p_closed(n: int, k: int) -> Polynomial:
    """Displayed closed forms of P_{n,k}(x) for k = 1, 2, 3.

    The (x-1)^(n+2) term of P_{n,3} uses the coefficient 1/((n+1)(n+2))
    obtained by integrating P_{n,2}.

    Raises:
        UnsupportedClosedFormError: for k outside {1, 2, 3}.
    """
    _require(n >= 1, "p_closed", f"n={n} should be >= 1")
    plus, minus = sign_of(n + 1), sign_of(n)
    xm1 = X - 1
    if k == 1:
        return (
            Fraction(plus * n, n + 1)
            + xm1 ** (n + 1) / (n + 1)
            + xm1**n
        )
    if k == 2:
        return (
            X * Fraction(plus * n, n + 1)
            + Fraction(plus, (n + 1) * (n + 2))
            + Fraction(minus, n + 1)
            + xm1 ** (n + 2) / ((n + 1) * (n + 2))
            + xm1 ** (n + 1) / (n + 1)
        )
    if k == 3:
        return (
            X**2 * Fraction(plus * n, 2 * (n + 1))
            + X * Fraction(plus, (n + 1) * (n + 2))
            + X * Fraction(minus, n + 1)
            + Fraction(minus, (n + 1) * (n + 2) * (n + 3))
            + Fraction(plus, (n + 1) * (n + 2))
            + xm1 ** (n + 3) / ((n + 1) * (n + 2) * (n + 3))
            + xm1 ** (n + 2) / ((n + 1) * (n + 2))
        )
    raise UnsupportedClosedFormError(k)


def generating_rhs(
    n: int,
    k: int,
    method: str = "bruteforce",
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
) -> Polynomial:
    """Sum of sign * fix!/(fix+k)! * x^(fix+k) over S_n."""
    _require(k >= 1, "generating_rhs", f"k={k} should be >= 1")
    prof = fix_profile(n, method, cap, jobs)
    return Polynomial(
        (0,) * k
        + tuple(
            count * Fraction(factorial(fix), factorial(fix + k))
            for fix, count in enumerate(prof.signed_counts)
        )
    )


def generating_identity_check(
    n: int,
    k: int,
    method: str = "bruteforce",
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
) -> IdentityCheck:
    """Compare P_{n,k} with its signed fixed-point expansion."""
    return IdentityCheck(
        "generating",
        {"n": n, "k": k},
        p_poly(n, k),
        generating_rhs(n, k, method, cap, jobs),
    )


def _check_k2(operation: str, n: int, k: int) -> None:
    _require(n >= 0, operation, f"n={n} should be >= 0")
    _require(k >= 2, operation, f"k={k} should be >= 2")


def s_sum(n: int, k: int) -> Fraction:
    """S_n(k), the sum over j in [2, k] of (-1)^(n+j) / ((k-j)! (n+j)!)."""
    _check_k2("s_sum", n, k)
    return sum(
        (
            Fraction(sign_of(n + j), factorial(k - j) * factorial(n + j))
            for j in range(2, k + 1)
        ),
        Fraction(0),
    )


def s_closed(n: int, k: int) -> Fraction:
    """(-1)^n / ((n+1)! (k-2)! (n+k))."""
    _check_k2("s_closed", n, k)
    return Fraction(sign_of(n), factorial(n + 1) * factorial(k - 2) * (n + k))


def t_sum(n: int, k: int) -> int:
    """T_n(k), the alternating sum of binomial(n+k, m) for m in [0, n+1]."""
    _check_k2("t_sum", n, k)
    return sum(sign_of(m) * binomial(n + k, m) for m in range(n + 2))


def t_closed(n: int, k: int) -> int:
    """(-1)^(n-1) binomial(n+k-1, n+1)."""
    _check_k2("t_closed", n, k)
    return sign_of(n - 1) * binomial(n + k - 1, n + 1)


def p1_via_recurrence(n: int, k: int) -> Fraction:
    """P_{n,k}(1) from the closed forms of S_n(k) and S_{n-1}(k)."""
    _require(n >= 1, "p1_via_recurrence", f"n={n} should be >= 1")
    _check_k2("p1_via_recurrence", n, k)
    nfact = factorial(n)
    return (
        Fraction(sign_of(n + 1) * n, (n + 1) * factorial(k - 1))
        - nfact * s_closed(n, k)
        - nfact * s_closed(n - 1, k)
    )


def p1_via_products(n: int, k: int) -> Fraction:
    """P_{n,k}(1) written with the products (n+1)...(n+j)."""
    _require(n >= 1, "p1_via_products", f"n={n} should be >= 1")
    _check_k2("p1_via_products", n, k)
    total = Fraction(sign_of(n + 1) * n, (n + 1) * factorial(k - 1))
    for j in range(2, k + 1):
        diff = Fraction(1, math.prod(range(n + 1, n + j + 1))) - Fraction(
            1, math.prod(range(n + 1, n + j))
        )
        total -= Fraction(sign_of(n + j), factorial(k - j)) * diff
    return total
