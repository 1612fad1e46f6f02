"""Permutations of [n] and their circular peak / descent statistics.

A "circular peak" of sigma is a value sigma(i) with
sigma(i-1) < sigma(i) > sigma(i+1) at an interior position i; despite the
name there is no wrap-around.  A circular descent is a value sigma(i) with
sigma(i) > sigma(i+1).  Sets are returned as strictly ascending tuples.

The exhaustive enumerator over S_n is the oracle used everywhere to test
the closed-form results; it is capped at n <= 10.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

PERMUTATION_CAP = 10


class ResourceLimitError(RuntimeError):
    """An exhaustive enumeration was requested past its configured cap."""


@dataclass(frozen=True)
class Permutation:
    """One-indexed permutation; values is (sigma(1), ..., sigma(n))."""

    values: tuple[int, ...]

    def __init__(self, values):
        vals = tuple(int(v) for v in values)
        n = len(vals)
        if sorted(vals) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [{n}]: {vals}")
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return len(self.values)

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(1, n + 1))

    def __str__(self) -> str:
        return "".join(str(v) for v in self.values) if self.n < 10 else \
            ",".join(str(v) for v in self.values)


@dataclass(frozen=True)
class PeakStatistics:
    cp: tuple[int, ...]
    cdes: tuple[int, ...]


def circular_peak_set(sigma: Permutation) -> tuple[int, ...]:
    """Values sigma(i) with sigma(i-1) < sigma(i) > sigma(i+1), ascending."""
    v = sigma.values
    peaks = [v[i] for i in range(1, len(v) - 1) if v[i - 1] < v[i] > v[i + 1]]
    return tuple(sorted(peaks))


def circular_descent_set(sigma: Permutation) -> tuple[int, ...]:
    """Values sigma(i) with sigma(i) > sigma(i+1), ascending."""
    v = sigma.values
    return tuple(sorted(v[i] for i in range(len(v) - 1) if v[i] > v[i + 1]))


def peak_statistics(sigma: Permutation) -> PeakStatistics:
    return PeakStatistics(circular_peak_set(sigma), circular_descent_set(sigma))


def _check_cap(n: int) -> None:
    if n > PERMUTATION_CAP:
        raise ResourceLimitError(
            f"exhaustive S_n enumeration capped at n <= {PERMUTATION_CAP} (got n={n})"
        )


def enumerate_cp_class(n: int, s) -> list[Permutation]:
    """All sigma in S_n with CP(sigma) = s, in lexicographic order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_cap(n)
    target = tuple(sorted(set(int(v) for v in s)))
    if any(v < 1 or v > n for v in target):
        raise ValueError(f"set {target} is not a subset of [{n}]")
    out = []
    for vals in permutations(range(1, n + 1)):
        peaks = [vals[i] for i in range(1, n - 1) if vals[i - 1] < vals[i] > vals[i + 1]]
        if tuple(sorted(peaks)) == target:
            out.append(Permutation(vals))
    return out


def cp_class_size(n: int, s) -> int:
    return len(enumerate_cp_class(n, s))


def cp_class_table(n: int) -> dict[tuple[int, ...], int]:
    """Map CP set -> class size over all of S_n (single sweep)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_cap(n)
    table: dict[tuple[int, ...], int] = {}
    for vals in permutations(range(1, n + 1)):
        peaks = tuple(sorted(
            vals[i] for i in range(1, n - 1) if vals[i - 1] < vals[i] > vals[i + 1]
        ))
        table[peaks] = table.get(peaks, 0) + 1
    return table
