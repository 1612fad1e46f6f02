"""Exact rational polynomial and truncated power-series arithmetic.

Everything is built on fractions.Fraction; no floating point appears
anywhere in the library.  Three value kinds live here:

  ExactPoly   -- dense univariate polynomial over Q, coeffs low-to-high
  PolySeries  -- truncated power series in y whose coefficients are
                 ExactPoly values in x (used to expand the bivariate
                 generating functions exactly)
  BiSeries    -- truncated bivariate table, entry (i, j) = coeff of x^i y^j

Combinatorial number helpers (binomial, central binomial, Catalan,
multinomial) are plain functions at the bottom.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


class InexactDivisionError(ArithmeticError):
    """A division that was required to be exact left a remainder."""


def _normalize(coeffs: Iterable[Rational]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class ExactPoly:
    """Dense univariate polynomial over Q; coeffs[k] is the x^k coefficient.

    The zero polynomial has an empty coefficient tuple.  Instances are
    immutable and all arithmetic is exact.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Rational] = ()):
        object.__setattr__(self, "coeffs", _normalize(coeffs))

    @staticmethod
    def zero() -> "ExactPoly":
        return ExactPoly(())

    @staticmethod
    def constant(c: Rational) -> "ExactPoly":
        return ExactPoly((c,))

    @staticmethod
    def x() -> "ExactPoly":
        return ExactPoly((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial mapped to -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __add__(self, other: "ExactPoly") -> "ExactPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return ExactPoly(out)

    def __neg__(self) -> "ExactPoly":
        return ExactPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "ExactPoly") -> "ExactPoly":
        return self + (-other)

    def __mul__(self, other: "ExactPoly") -> "ExactPoly":
        if self.is_zero() or other.is_zero():
            return ExactPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ExactPoly(out)

    def scale(self, c: Rational) -> "ExactPoly":
        c = Fraction(c)
        return ExactPoly(tuple(c * a for a in self.coeffs))

    def __call__(self, q: Rational) -> Fraction:
        return self.eval(q)

    def eval(self, q: Rational) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        q = Fraction(q)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def compose_linear(self, a: Rational, b: Rational) -> "ExactPoly":
        """Return p(a*x + b), expanded exactly (Horner in the polynomial ring)."""
        lin = ExactPoly((b, a))
        acc = ExactPoly(())
        for c in reversed(self.coeffs):
            acc = acc * lin + ExactPoly.constant(c)
        return acc

    def divmod(self, divisor: "ExactPoly") -> tuple["ExactPoly", "ExactPoly"]:
        """Euclidean division; returns (quotient, remainder)."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = divisor.coeffs
        dd = len(dv) - 1
        lead = dv[-1]
        if len(rem) - 1 < dd:
            return ExactPoly(()), ExactPoly(rem)
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] / lead
            if c != 0:
                quot[k - dd] = c
                for j in range(dd + 1):
                    rem[k - dd + j] -= c * dv[j]
        return ExactPoly(quot), ExactPoly(rem)

    def exact_div(self, divisor: "ExactPoly") -> "ExactPoly":
        """Division that must leave no remainder."""
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise InexactDivisionError(
                f"nonzero remainder {r.coeffs} dividing by {divisor.coeffs}"
            )
        return q

    def derivative(self) -> "ExactPoly":
        return ExactPoly(tuple((k + 1) * c for k, c in enumerate(self.coeffs[1:])))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{k}" if c != 1 else f"x^{k}")
        return " + ".join(parts)


def poly_eval_at_rational(p: ExactPoly, q: Rational) -> Fraction:
    """Exact evaluation p(q)."""
    return p.eval(q)


def poly_shift(p: ExactPoly) -> ExactPoly:
    """Return p(x - 1)."""
    return p.compose_linear(1, -1)


def poly_shift_inverse(p: ExactPoly) -> ExactPoly:
    """Return p(x + 1)."""
    return p.compose_linear(1, 1)


class PolySeries:
    """Truncated power series in y with ExactPoly (in x) coefficients.

    coeffs[j] is the coefficient polynomial of y^j; the series carries an
    explicit truncation order (coeffs has order+1 entries).  Division is
    the usual coefficient recursion and requires every per-step polynomial
    division to be exact, otherwise InexactDivisionError is raised.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[ExactPoly], order: int):
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = list(coeffs[: order + 1])
        cs += [ExactPoly(())] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = cs

    @staticmethod
    def from_rationals(vals: Sequence[Rational], order: int) -> "PolySeries":
        return PolySeries([ExactPoly.constant(v) for v in vals], order)

    def __add__(self, other: "PolySeries") -> "PolySeries":
        order = min(self.order, other.order)
        return PolySeries(
            [self.coeffs[j] + other.coeffs[j] for j in range(order + 1)], order
        )

    def __sub__(self, other: "PolySeries") -> "PolySeries":
        order = min(self.order, other.order)
        return PolySeries(
            [self.coeffs[j] - other.coeffs[j] for j in range(order + 1)], order
        )

    def __mul__(self, other: "PolySeries") -> "PolySeries":
        order = min(self.order, other.order)
        out = [ExactPoly(()) for _ in range(order + 1)]
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a.is_zero():
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return PolySeries(out, order)

    def divide(self, divisor: "PolySeries") -> "PolySeries":
        """Series division; divisor's y^0 coefficient must divide exactly
        at every recursion step (it acts as a unit in Q(x)[[y]])."""
        order = min(self.order, divisor.order)
        lead = divisor.coeffs[0]
        if lead.is_zero():
            raise InexactDivisionError("division by series with zero y^0 coefficient")
        out: list[ExactPoly] = []
        for j in range(order + 1):
            acc = self.coeffs[j]
            for k in range(1, j + 1):
                acc = acc - divisor.coeffs[k] * out[j - k]
            out.append(acc.exact_div(lead))
        return PolySeries(out, order)

    def substitute_y_squared(self) -> "PolySeries":
        """Return the series with y replaced by y^2, same truncation order."""
        out = [ExactPoly(()) for _ in range(self.order + 1)]
        for j, c in enumerate(self.coeffs):
            if 2 * j <= self.order:
                out[2 * j] = c
        return PolySeries(out, self.order)

    def shift_y(self, k: int) -> "PolySeries":
        """Multiply by y^k."""
        return PolySeries([ExactPoly(())] * k + self.coeffs, self.order)

    def to_biseries(self, order_x: int) -> "BiSeries":
        table = [[Fraction(0)] * (self.order + 1) for _ in range(order_x + 1)]
        for j, p in enumerate(self.coeffs):
            if p.degree > order_x:
                raise ValueError("x-degree exceeds requested truncation order")
            for i, c in enumerate(p.coeffs):
                table[i][j] = c
        return BiSeries(order_x, self.order, table)


@dataclass(frozen=True)
class BiSeries:
    """Truncated bivariate series; coeffs[i][j] is the x^i y^j coefficient."""

    order_x: int
    order_y: int
    coeffs: tuple[tuple[Fraction, ...], ...]

    def __init__(self, order_x: int, order_y: int, coeffs: Sequence[Sequence[Rational]]):
        table = []
        for i in range(order_x + 1):
            row = [Fraction(0)] * (order_y + 1)
            if i < len(coeffs):
                for j in range(min(order_y + 1, len(coeffs[i]))):
                    row[j] = Fraction(coeffs[i][j])
            table.append(tuple(row))
        object.__setattr__(self, "order_x", order_x)
        object.__setattr__(self, "order_y", order_y)
        object.__setattr__(self, "coeffs", tuple(table))

    def coeff(self, i: int, j: int) -> Fraction:
        if 0 <= i <= self.order_x and 0 <= j <= self.order_y:
            return self.coeffs[i][j]
        return Fraction(0)

    def y_coefficient(self, j: int) -> ExactPoly:
        """The coefficient of y^j as a polynomial in x."""
        return ExactPoly(tuple(self.coeffs[i][j] for i in range(self.order_x + 1)))

    def __add__(self, other: "BiSeries") -> "BiSeries":
        ox = min(self.order_x, other.order_x)
        oy = min(self.order_y, other.order_y)
        return BiSeries(
            ox, oy,
            [[self.coeffs[i][j] + other.coeffs[i][j] for j in range(oy + 1)]
             for i in range(ox + 1)],
        )

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        ox = min(self.order_x, other.order_x)
        oy = min(self.order_y, other.order_y)
        table = [[Fraction(0)] * (oy + 1) for _ in range(ox + 1)]
        for i in range(ox + 1):
            for j in range(oy + 1):
                a = self.coeffs[i][j]
                if a == 0:
                    continue
                for k in range(ox + 1 - i):
                    for l in range(oy + 1 - j):
                        b = other.coeffs[k][l]
                        if b != 0:
                            table[i + k][j + l] += a * b
        return BiSeries(ox, oy, table)


# ---------------------------------------------------------------------------
# combinatorial numbers


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return 0
    return comb(n, k)


def central_binomial(n: int) -> int:
    """b_n = C(n, floor(n/2)), the count of length-n Dyck-path left factors."""
    return comb(n, n // 2)


def catalan_number(m: int) -> int:
    """c_m = C(2m, m) / (m + 1)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return comb(2 * m, m) // (m + 1)


def catalan_series(order: int) -> PolySeries:
    """The series C(y) = sum_{m<=order} c_m y^m.

    This identity is the library-wide definition of sqrt(1-4y):
    sqrt(1-4y) = 1 - 2y*C(y); no radical is ever evaluated numerically.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    return PolySeries.from_rationals([catalan_number(m) for m in range(order + 1)], order)


def multinomial(parts: Sequence[int]) -> int:
    """(sum parts)! / prod(part!)."""
    if any(p < 0 for p in parts):
        raise ValueError("parts must be nonnegative")
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def epsilon_odd(n: int) -> int:
    """1 if n is odd, 0 if n is even (the parity switch in the recurrences)."""
    return n % 2
