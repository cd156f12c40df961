"""Catalogue of identity suites made available by permfix.

Each suite sweeps one identity over 1..n_max and the applicable k range and
yields :class:`~permfix.datatypes.IdentityCheck` instances. Brute-force sides
use permutation enumeration up to the enumeration cap and the conjugacy class
path beyond it.
"""

from __future__ import annotations

import typing
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

from . import identities as ids
from .datatypes import IdentityCheck
from .exact import Polynomial, factorial, poly_eval
from .matrix import (
    build_matrix,
    det_elimination,
    eigen_action_check,
    eigenvalue_product,
)

if typing.TYPE_CHECKING:
    from typing import Any, Callable, Dict, Iterator, Mapping, Sequence


@dataclass(frozen=True)
class SweepPlan:
    """Ranges of a verification sweep.

    Attributes:
        n_max: largest n.
        k_max: largest k.
        xs: rational sample points.
        cap: enumeration cap of the brute-force path.
        jobs: number of threads each brute-force enumeration is split over.
    """

    n_max: int
    k_max: int
    xs: Sequence[Fraction]
    cap: int
    jobs: int = 1

    def method(self, n: int) -> str:
        """Summation path used for S_n."""
        return "bruteforce" if n <= self.cap else "cycleclass"

    def sum_opts(self, n: int) -> Dict[str, Any]:
        """Keyword arguments of the brute-force sides for S_n."""
        return {"method": self.method(n), "cap": self.cap, "jobs": self.jobs}

    def ns(self, start: int = 1) -> range:
        return range(start, self.n_max + 1)


@dataclass(frozen=True)
class Suite:
    """Identity suite.

    Attributes:
        description: short description of the identity.
        sweep: function yielding the checks of a plan.
    """

    description: str
    sweep: Callable[[SweepPlan], Iterator[IdentityCheck]]


def _det(plan: SweepPlan) -> Iterator[IdentityCheck]:
    for n in plan.ns():
        cycle = ids.det_cycleclass(n)
        lhs = ids.det_leibniz(n, plan.cap, plan.jobs) if n <= plan.cap else cycle
        yield IdentityCheck("det", {"n": n}, lhs, ids.det_closed(n), (cycle,))


def _det_matrix(plan: SweepPlan) -> Iterator[IdentityCheck]:
    for n in plan.ns():
        det = ids.det_closed(n)
        for x in plan.xs:
            yield IdentityCheck(
                "det_matrix",
                {"n": n, "x": x},
                det_elimination(build_matrix(n, x)),
                poly_eval(det, x),
                (eigenvalue_product(n, x),),
            )


def _eigen(plan: SweepPlan) -> Iterator[IdentityCheck]:
    for n in plan.ns(2):
        for x in plan.xs:
            for chk in eigen_action_check(n, x):
                yield IdentityCheck(
                    "eigen",
                    {"n": n, "x": x, "j": 1 if chk.j is None else chk.j},
                    chk.image,
                    chk.expected,
                )


def _thm1(plan: SweepPlan) -> Iterator[IdentityCheck]:
    for n in plan.ns():
        for k in range(min(plan.k_max, n) + 1):
            lhs = ids.thm1_lhs(n, k, **plan.sum_opts(n))
            if k < n:
                rhs = ids.thm1_rhs(n, k)
            else:
                rhs = Polynomial.constant(factorial(n))
            yield IdentityCheck(
                "thm1",
                {"n": n, "k": k},
                lhs,
                rhs,
                (ids.det_closed(n).derivative(k),),
            )


def _thm1_product(plan: SweepPlan) -> Iterator[IdentityCheck]:
    for n in plan.ns():
        for k in range(min(plan.k_max, n - 1) + 1):
            yield IdentityCheck(
                "thm1_product",
                {"n": n, "k": k},
                ids.thm1_product_rule(n, k),
                ids.thm1_rhs(n, k),
                (ids.thm1_factored(n, k),),
            )


def _thm1_x1(plan: SweepPlan) -> Iterator[IdentityCheck]:
    for n in plan.ns():
        at_one = ids.thm1_special_x1(n)
        for k in range(min(plan.k_max, n - 1) + 1):
            lhs = poly_eval(ids.thm1_lhs(n, k, **plan.sum_opts(n)), 1)
            rhs = Fraction(factorial(n) if k == n - 1 else 0)
            yield IdentityCheck(
                "thm1_x1", {"n": n, "k": k, "x": Fraction(1)}, lhs, rhs, (at_one[k],)
            )


def _thm1_x2(plan: SweepPlan) -> Iterator[IdentityCheck]:
    for n in plan.ns(2):
        for k in range(1, min(plan.k_max, n - 1) + 1):
            yield ids.thm1_special_x2(n, k, **plan.sum_opts(n))


def _thm2(plan: SweepPlan) -> Iterator[IdentityCheck]:
    for n in plan.ns():
        for k in range(1, plan.k_max + 1):
            yield IdentityCheck(
                "thm2",
                {"n": n, "k": k},
                ids.thm2_lhs(n, k, **plan.sum_opts(n)),
                ids.thm2_rhs(n, k),
            )


def _thm2_special(plan: SweepPlan) -> Iterator[IdentityCheck]:
    for n in plan.ns():
        for k in range(1, min(plan.k_max, 3) + 1):
            yield IdentityCheck(
                "thm2_special",
                {"n": n, "k": k},
                ids.thm2_displayed(n, k),
                ids.thm2_rhs(n, k),
                (ids.p1_displayed(n, k),),
            )


def _p_poly(plan: SweepPlan) -> Iterator[IdentityCheck]:
    for n in plan.ns():
        for k in range(1, plan.k_max + 1):
            yield IdentityCheck(
                "p_poly",
                {"n": n, "k": k, "x": Fraction(1)},
                poly_eval(ids.p_poly(n, k), 1),
                ids.thm2_rhs(n, k),
            )


def _p_closed(plan: SweepPlan) -> Iterator[IdentityCheck]:
    for n in plan.ns():
        for k in range(1, min(plan.k_max, 3) + 1):
            yield IdentityCheck(
                "p_closed", {"n": n, "k": k}, ids.p_poly(n, k), ids.p_closed(n, k)
            )


def _generating(plan: SweepPlan) -> Iterator[IdentityCheck]:
    for n in plan.ns():
        for k in range(1, plan.k_max + 1):
            yield ids.generating_identity_check(n, k, **plan.sum_opts(n))


def _st_chain(plan: SweepPlan) -> Iterator[IdentityCheck]:
    for n in plan.ns():
        for k in range(2, plan.k_max + 1):
            scale = factorial(n + k)
            yield IdentityCheck(
                "st_chain",
                {"n": n, "k": k},
                ids.s_sum(n, k),
                ids.s_closed(n, k),
                (
                    Fraction(-ids.t_sum(n, k), scale),
                    Fraction(-ids.t_closed(n, k), scale),
                ),
            )


def _p1_recurrence(plan: SweepPlan) -> Iterator[IdentityCheck]:
    for n in plan.ns():
        for k in range(2, plan.k_max + 1):
            yield IdentityCheck(
                "p1_recurrence",
                {"n": n, "k": k},
                ids.p1_via_recurrence(n, k),
                ids.thm2_rhs(n, k),
                (ids.p1_via_products(n, k),),
            )


SUITES: Mapping[str, Suite] = MappingProxyType(
    {
        "det": Suite("Leibniz, cycle-class and closed determinant agree", _det),
        "det_matrix": Suite("Bareiss determinant of M_x at x samples", _det_matrix),
        "eigen": Suite("eigenvectors of M_x by matrix-vector products", _eigen),
        "thm1": Suite("k-th derivative of the signed fixed-point sum", _thm1),
        "thm1_product": Suite(
            "product-rule steps of the derivative form", _thm1_product
        ),
        "thm1_x1": Suite("derivatives at x = 1 are n! delta(k, n-1)", _thm1_x1),
        "thm1_x2": Suite("derivative identity at x = 2", _thm1_x2),
        "thm2": Suite("signed sum of fix!/(fix+k)!", _thm2),
        "thm2_special": Suite("displayed k = 1, 2, 3 values of the sum", _thm2_special),
        "p_poly": Suite("iterated integral P_{n,k} at x = 1", _p_poly),
        "p_closed": Suite("closed forms of P_{n,1}, P_{n,2}, P_{n,3}", _p_closed),
        "generating": Suite("P_{n,k} as signed fixed-point expansion", _generating),
        "st_chain": Suite("S_n(k) and T_n(k) closed forms", _st_chain),
        "p1_recurrence": Suite(
            "P_{n,k}(1) from S_n(k) and S_{n-1}(k)", _p1_recurrence
        ),
    }
)
