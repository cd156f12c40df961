"""Exact rational arithmetic and dense univariate polynomials.

Scalars are :class:`fractions.Fraction` instances; combinatorial quantities are
plain Python integers. No floating-point value is ever accepted.
"""

from __future__ import annotations

import math
import typing
from dataclasses import dataclass
from fractions import Fraction

from .error import DomainError, InvalidDenominatorError

if typing.TYPE_CHECKING:
    from typing import Iterable, Optional, Tuple, Union

    Scalar = Union[int, Fraction]


def as_fraction(value: Scalar) -> Fraction:
    """Coerce an exact scalar to a Fraction, refusing floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact scalar expected, got {type(value).__name__}")


def sign_of(exponent: int) -> int:
    """Return (-1)**exponent as an int, also for negative exponents."""
    return -1 if exponent % 2 else 1


def rational_new(num: int, den: int) -> Fraction:
    """Build the reduced fraction num/den with a positive denominator.

    Raises:
        InvalidDenominatorError: if den is zero.
    """
    if den == 0:
        raise InvalidDenominatorError(num)
    return Fraction(num, den)


def factorial(n: int) -> int:
    """Return n!, with 0! = 1."""
    if n < 0:
        raise DomainError("factorial", f"n={n} is negative")
    return math.factorial(n)


def binomial(n: int, m: int) -> int:
    """Binomial coefficient, zero when m lies outside [0, n]."""
    if n < 0:
        raise DomainError("binomial", f"n={n} is negative")
    if m < 0 or m > n:
        return 0
    return math.comb(n, m)


def falling_factorial(m: int, k: int) -> int:
    """Return m(m-1)...(m-k+1); zero when k > m and one when k = 0."""
    if m < 0 or k < 0:
        raise DomainError("falling_factorial", f"m={m}, k={k} must be >= 0")
    return math.perm(m, k)


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial over the rationals.

    Attributes:
        coefficients: coefficient of x**i at index i. Trailing zeros are
            trimmed on construction, the zero polynomial is the empty tuple.
    """

    coefficients: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coefs = [as_fraction(c) for c in self.coefficients]
        while coefs and not coefs[-1]:
            coefs.pop()
        object.__setattr__(self, "coefficients", tuple(coefs))

    @classmethod
    def constant(cls, value: Scalar) -> Polynomial:
        """Constant polynomial."""
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coef: Scalar = 1) -> Polynomial:
        """The polynomial coef * x**degree."""
        return cls((0,) * degree + (coef,))

    @classmethod
    def x(cls) -> Polynomial:
        """The identity polynomial."""
        return cls.monomial(1)

    @property
    def degree(self) -> Optional[int]:
        """Degree of the polynomial, None for the zero polynomial."""
        if not self.coefficients:
            return None
        return len(self.coefficients) - 1

    def coef(self, power: int) -> Fraction:
        """Coefficient of x**power (zero beyond the degree)."""
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def _lift(self, other: object) -> Optional[Polynomial]:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return None

    def __add__(self, other: object) -> Polynomial:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        size = max(len(self.coefficients), len(rhs.coefficients))
        return Polynomial(tuple(self.coef(i) + rhs.coef(i) for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: object) -> Polynomial:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> Polynomial:
        lhs = self._lift(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> Polynomial:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        if not self or not rhs:
            return Polynomial()
        prod = [Fraction(0)] * (len(self.coefficients) + len(rhs.coefficients) - 1)
        for i, ci in enumerate(self.coefficients):
            if not ci:
                continue
            for j, cj in enumerate(rhs.coefficients):
                prod[i + j] += ci * cj
        return Polynomial(tuple(prod))

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> Polynomial:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise InvalidDenominatorError(self)
        return Polynomial(tuple(c / other for c in self.coefficients))

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            raise DomainError("polynomial power", f"exponent {exponent} < 0")
        result = Polynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, x: Scalar) -> Fraction:
        value = Fraction(0)
        xval = as_fraction(x)
        for coef in reversed(self.coefficients):
            value = value * xval + coef
        return value

    def derivative(self, order: int = 1) -> Polynomial:
        """The order-th derivative of the polynomial."""
        if order < 0:
            raise DomainError("derivative", f"order {order} < 0")
        return Polynomial(
            tuple(
                falling_factorial(i, order) * c
                for i, c in enumerate(self.coefficients)
                if i >= order
            )
        )

    def antiderivative(self) -> Polynomial:
        """The primitive vanishing at zero."""
        return Polynomial(
            (Fraction(0),)
            + tuple(c / (i + 1) for i, c in enumerate(self.coefficients))
        )

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for power in range(len(self.coefficients) - 1, -1, -1):
            coef = self.coefficients[power]
            if not coef:
                continue
            mag = abs(coef)
            if power == 0:
                body = str(mag)
            else:
                var = "x" if power == 1 else f"x^{power}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not terms:
                terms.append(f"-{body}" if coef < 0 else body)
            else:
                terms.append(f"- {body}" if coef < 0 else f"+ {body}")
        return " ".join(terms)


def poly_from_counts(counts: Iterable[Scalar]) -> Polynomial:
    """Polynomial whose i-th coefficient is the i-th count."""
    return Polynomial(tuple(counts))


def poly_eval(poly: Polynomial, x: Scalar) -> Fraction:
    """Exact value of poly at x."""
    return poly(x)


def poly_derivative(poly: Polynomial, order: int) -> Polynomial:
    """k-th derivative, zero when k exceeds the degree."""
    return poly.derivative(order)


def poly_integrate_from_zero(poly: Polynomial) -> Polynomial:
    """Unique antiderivative P of poly with P(0) = 0."""
    return poly.antiderivative()
