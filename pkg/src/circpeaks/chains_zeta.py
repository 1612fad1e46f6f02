"""Multichain and chain counting in the peak-set complex.

zeta(n, i) counts multichains of i-1 faces and is evaluated exactly from
the f-polynomial; the multinomial composition formula gives the strict
chain counts d_{n,i}.  Both have dumb exhaustive oracles over the face
poset for cross-checking, and the f-polynomial can be rebuilt from the
chain counts alone.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .complex_poset import POSET_CAP, _check_poset_cap, all_faces, f_polynomial
from .exact_algebra import ExactPoly, multinomial
from .peak_sets import max_peak_count


def zeta(n: int, i: int) -> int:
    """Number of multichains x_1 <= ... <= x_{i-1}; (i-1)^D P_n(1/(i-1)).

    Expanded symbolically as sum_j a_j (i-1)^(D-j), so i = 2 needs no
    special case and the value is an exact integer.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if i < 2:
        raise ValueError("zeta is defined for i >= 2")
    p = f_polynomial(n)
    top = max_peak_count(n)
    val = sum(p.coeff(j) * (i - 1) ** (top - j) for j in range(top + 1))
    assert val.denominator == 1
    return int(val)


def zeta_polynomial(n: int) -> ExactPoly:
    """Z(P_n, i) as a polynomial in i: sum_j a_j (i-1)^(D-j)."""
    p = f_polynomial(n)
    top = max_peak_count(n)
    i_minus_1 = ExactPoly((-1, 1))
    acc = ExactPoly(())
    power = ExactPoly.constant(1)
    for j in range(top, -1, -1):
        acc = acc + power.scale(p.coeff(j))
        power = power * i_minus_1
    return acc


def _subset_matrix(n: int) -> tuple[list, list[list[bool]]]:
    fs = [frozenset(f.elements) for f in all_faces(n)]
    return fs, [[a <= b for b in fs] for a in fs]


def multichain_oracle(n: int, length: int) -> int:
    """Exhaustive count of weakly increasing length-tuples of faces."""
    if length < 0:
        raise ValueError("length must be >= 0")
    _check_poset_cap(n)
    if length == 0:
        return 1
    fs, le = _subset_matrix(n)
    m = len(fs)
    counts = [1] * m
    for _ in range(length - 1):
        counts = [sum(counts[j] for j in range(m) if le[j][k]) for k in range(m)]
    return sum(counts)


def chain_oracle(n: int, i: int) -> int:
    """Exhaustive count of strictly increasing i-tuples of faces."""
    if i < 0:
        raise ValueError("i must be >= 0")
    _check_poset_cap(n)
    if i == 0:
        return 1
    fs, le = _subset_matrix(n)
    m = len(fs)
    lt = [[le[a][b] and fs[a] != fs[b] for b in range(m)] for a in range(m)]
    counts = [1] * m
    for _ in range(i - 1):
        counts = [sum(counts[j] for j in range(m) if lt[j][k]) for k in range(m)]
    return sum(counts)


def _compositions(total: int, mins: list[int]) -> Iterator[tuple[int, ...]]:
    if len(mins) == 1:
        if total >= mins[0]:
            yield (total,)
        return
    for first in range(mins[0], total + 1):
        for rest in _compositions(total - first, mins[1:]):
            yield (first,) + rest


def chain_count_formula(n: int, i: int) -> Fraction:
    """d_{n,i} by the multinomial composition sum, evaluated literally.

    Sum over (d_1, ..., d_{i+1}) with sum = n, d_1 >= 0, middle parts >= 1
    and d_{i+1} >= n - floor((n-1)/2); the weight (2 d_{i+1} - n)/n is not
    clamped.  Always integral on the tested range (the caller may assert).
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if i < 1:
        raise ValueError("i must be >= 1")
    mins = [0] + [1] * (i - 1) + [n - max_peak_count(n)]
    total = Fraction(0)
    for parts in _compositions(n, mins):
        total += Fraction(multinomial(parts)) * Fraction(2 * parts[-1] - n, n)
    return total


def f_polynomial_from_chains(n: int) -> ExactPoly:
    """Rebuild P_n(x) from the chain counts alone.

    P_n(x) = sum_{i=2}^{D+2} x^(D+2-i)/(i-2)! * prod_{j=1}^{i-2}(1-jx) * d_{n,i-1}.
    """
    top = max_peak_count(n)
    acc = ExactPoly(())
    for i in range(2, top + 3):
        d = chain_count_formula(n, i - 1)
        if d == 0:
            continue
        term = ExactPoly.constant(d)
        for j in range(1, i - 1):
            term = term * ExactPoly((1, -j))
        fact = 1
        for j in range(2, i - 1):
            fact *= j
        term = term.scale(Fraction(1, fact))
        shift = [Fraction(0)] * (top + 2 - i) + [Fraction(1)]
        acc = acc + term * ExactPoly(shift)
    return acc
