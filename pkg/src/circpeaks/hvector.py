"""h-vector and h-polynomial of the peak-set complex.

H_n(x) = P_n(x-1); the entries have the closed form

    h_{n,i} = (floor(n/2) - i)/(floor(n/2) + i) * C(floor(n/2) + i, floor(n/2))

which also counts Dyck-path left factors ending at a shifted endpoint, and
satisfy a parity recurrence with Catalan boundary terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complex_poset import f_polynomial
from .exact_algebra import (
    BiSeries,
    ExactPoly,
    PolySeries,
    binomial,
    catalan_number,
    catalan_series,
    epsilon_odd,
    poly_shift,
)
from .peak_sets import count_left_factors_to, max_peak_count


@dataclass(frozen=True)
class HVector:
    n: int
    h: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {"n": self.n, "h": list(self.h)}

    def csv_rows(self) -> list[tuple[int, int, int]]:
        return [(self.n, i, v) for i, v in enumerate(self.h)]


def h_polynomial(n: int) -> ExactPoly:
    """H_n(x) = P_n(x - 1)."""
    return poly_shift(f_polynomial(n))


def h_polynomial_by_recurrence(n: int) -> ExactPoly:
    """H_n(x) from the parity recurrence (test oracle).

    Even m: H_{m+1} = x H_m; odd m: (x-1) H_{m+1} = x H_m - 2/(m+1) C(m-1,(m-1)/2),
    the latter solved by exact division by (x-1).
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    h = ExactPoly((0, 1))
    x = ExactPoly.x()
    for m in range(3, n):
        if m % 2 == 0:
            h = x * h
        else:
            c = Fraction(2, m + 1) * binomial(m - 1, (m - 1) // 2)
            h = (x * h - ExactPoly.constant(c)).exact_div(ExactPoly((-1, 1)))
    return h


def h_entry(n: int, i: int) -> int:
    """Closed-form h_{n,i}."""
    if n < 3:
        raise ValueError("n must be >= 3")
    if i < 0 or i > max_peak_count(n):
        raise ValueError(f"i={i} outside [0, {max_peak_count(n)}]")
    half = n // 2
    if i == half:  # the (half - i) factor vanishes before the binomial grows
        return 0
    val = Fraction(half - i, half + i) * binomial(half + i, half)
    assert val.denominator == 1
    return int(val)


def h_table(n: int) -> HVector:
    return HVector(n, tuple(h_entry(n, i) for i in range(max_peak_count(n) + 1)))


def h_recurrence_table(n: int) -> HVector:
    """h-vector built purely from the recurrence (test oracle).

    h_{m+1,0} = h_{m,0}; h_{m+1,i} = h_{m,i} + eps(m) h_{m+1,i-1} for
    1 <= i <= floor(m/2) - 1; h_{m+1,floor(m/2)} = eps(m) c_{floor(m/2)};
    initial row (h_{3,0}, h_{3,1}) = (1, 0).
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    row = [1, 0]
    for m in range(3, n):
        def h(i: int) -> int:
            return row[i] if 0 <= i < len(row) else 0
        eps = epsilon_odd(m)
        top = m // 2
        new = [h(0)]
        for i in range(1, top):
            new.append(h(i) + eps * new[i - 1])
        new.append(eps * catalan_number(top))
        row = new
    return HVector(n, tuple(row))


def h_generating_series(order_n: int) -> BiSeries:
    """Truncated expansion of H(x,y) = sum_n H_n(x) y^n.

    Uses the corrected closed form (substituting x -> x-1 in the corrected
    f-series form):

        H(x,y) = y^2 [x - C(y^2)] (1 + x y) / ((x-1) - x^2 y^2) - y^2.
    """
    if order_n < 3:
        raise ValueError("order_n must be >= 3")
    order = order_n
    x = ExactPoly.x()
    one = ExactPoly.constant(1)
    cy2 = catalan_series(order).substitute_y_squared()

    numer = (PolySeries([x], order) - cy2).shift_y(2)
    numer = numer * PolySeries([one, x], order)
    denom = PolySeries([x - one, ExactPoly(()), (x * x).scale(-1)], order)
    series = numer.divide(denom)
    series = series - PolySeries([ExactPoly(()), ExactPoly(()), one], order)
    return series.to_biseries(order_x=(order_n - 1) // 2)


def printed_h_series_discrepancy(order_n: int = 12) -> dict | None:
    """Cross-multiplied check of the commonly printed H(x,y) closed form.

    Tests (S + y^2) * x (x - 1 - x y^2) against
    [(x^2-1) y^2 - (x-1) y^2 C(y^2)] (1 + x y); returns None if it holds,
    else a report with the first mismatching y-order.
    """
    order = order_n
    x = ExactPoly.x()
    one = ExactPoly.constant(1)
    truth = PolySeries(
        [h_polynomial(n) if n >= 3 else ExactPoly(()) for n in range(order + 1)],
        order,
    )
    y2 = PolySeries([ExactPoly(()), ExactPoly(()), one], order)
    lhs = (truth + y2) * PolySeries(
        [x * (x - one), ExactPoly(()), (x * x).scale(-1)], order
    )
    cy2 = catalan_series(order).substitute_y_squared()
    numer = (PolySeries([x * x - one], order)
             - PolySeries([x - one], order) * cy2).shift_y(2)
    rhs = numer * PolySeries([one, x], order)
    for j in range(order + 1):
        if lhs.coeffs[j] != rhs.coeffs[j]:
            return {
                "formula": "H(x,y) printed form (cross-multiplied)",
                "first_mismatch_y_order": j,
                "lhs_coefficient": str(lhs.coeffs[j]),
                "rhs_coefficient": str(rhs.coeffs[j]),
                "note": (
                    "inherits the f-series misprint under x -> x-1; the shipped "
                    "series uses the corrected form (x-1) - x^2 y^2 denominator"
                ),
            }
    return None


def h_dyck_oracle(n: int, i: int) -> int:
    """Brute-force left-factor count for the endpoint of the h-entry law.

    Counts left factors of length floor(n/2)+i-1 ending at height
    floor(n/2)-i-1 (zero when the height is negative or of wrong parity).
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if i < 0 or i > max_peak_count(n):
        raise ValueError(f"i={i} outside [0, {max_peak_count(n)}]")
    half = n // 2
    return count_left_factors_to(half + i - 1, half - i - 1)
