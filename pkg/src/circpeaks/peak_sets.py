"""Realizable circular-peak sets and the Dyck-path left-factor bijection.

A set S = {i_1 < i_2 < ... < i_k} inside [n] is realizable as a circular
peak set iff i_j >= 2j + 1 for every j.  The map to words over {U, D}
(w_i = D iff i+1 in S) is a bijection onto left factors of Dyck paths of
length n-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .perm_core import Permutation, ResourceLimitError


class InvalidPeakSetError(ValueError):
    """Raised when a peak set violates the realizability criterion.

    Carries the smallest violating one-based index j together with the
    offending element and the bound 2j+1 it fails to reach.
    """

    def __init__(self, n: int, elements, j: int, element: int, bound: int):
        self.n = n
        self.elements = tuple(elements)
        self.j = j
        self.element = element
        self.bound = bound
        super().__init__(
            f"{self.elements} is not a circular peak set for n={n}: "
            f"element #{j} is {element} < {bound}"
        )


class DyckFormatError(ValueError):
    """Raised for a malformed Dyck-prefix word."""


@dataclass(frozen=True)
class PeakSet:
    """A candidate face: ascending elements inside an ambient [n].

    May be constructed invalid; is_valid decides realizability.
    """

    n: int
    elements: tuple[int, ...]

    def __init__(self, n: int, elements=()):
        elems = tuple(sorted(set(int(v) for v in elements)))
        if n < 1:
            raise ValueError("ambient size must be >= 1")
        if elems and (elems[0] < 1 or elems[-1] > n):
            raise ValueError(f"elements {elems} not inside [{n}]")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "elements", elems)

    @property
    def dimension(self) -> int:
        return len(self.elements) - 1

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.elements)


@dataclass(frozen=True)
class DyckPrefix:
    """A word over {U, D} whose every prefix has #U >= #D."""

    letters: str

    def __init__(self, letters: str):
        height = 0
        for ch in letters:
            if ch == "U":
                height += 1
            elif ch == "D":
                height -= 1
            else:
                raise DyckFormatError(f"letter {ch!r} is not U or D")
            if height < 0:
                raise DyckFormatError(f"{letters!r} is not a left factor (dips below 0)")
        object.__setattr__(self, "letters", letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def height(self) -> int:
        """End height: #U - #D."""
        return self.letters.count("U") - self.letters.count("D")


def first_violation(elements) -> tuple[int, int, int] | None:
    """(j, i_j, 2j+1) for the smallest violating index, or None if valid."""
    for j, e in enumerate(sorted(elements), start=1):
        if e < 2 * j + 1:
            return j, e, 2 * j + 1
    return None


def is_valid(n: int, s: PeakSet | object) -> bool:
    """True iff i_j >= 2j+1 for every j, i.e. CP_n(s) is nonempty."""
    elems = s.elements if isinstance(s, PeakSet) else tuple(sorted(set(s)))
    if elems and elems[-1] > n:
        return False
    return first_violation(elems) is None


def _require_valid(s: PeakSet) -> None:
    if s.elements and s.elements[-1] > s.n:
        raise InvalidPeakSetError(s.n, s.elements, len(s.elements),
                                  s.elements[-1], s.n + 1)
    v = first_violation(s.elements)
    if v is not None:
        raise InvalidPeakSetError(s.n, s.elements, *v)


def max_peak_count(n: int) -> int:
    """floor((n-1)/2), the largest possible circular-peak set size."""
    if n < 3:
        raise ValueError("n must be >= 3")
    return (n - 1) // 2


def witness(n: int, s: PeakSet) -> Permutation:
    """A permutation whose circular peak set is exactly s.

    Interleaves the non-peak values below i_k with the peaks, then appends
    i_k+1, ..., n; the empty set yields the identity.
    """
    if isinstance(s, PeakSet) and s.n != n:
        s = PeakSet(n, s.elements)
    _require_valid(s)
    if not s.elements:
        return Permutation.identity(n)
    peaks = s.elements
    top = peaks[-1]
    rest = [v for v in range(1, top + 1) if v not in set(peaks)]
    vals: list[int] = []
    for j, p in enumerate(peaks):
        vals.append(rest[j])
        vals.append(p)
    vals.extend(rest[len(peaks):])
    vals.extend(range(top + 1, n + 1))
    return Permutation(vals)


def to_dyck(s: PeakSet) -> DyckPrefix:
    """The length n-1 word with w_i = D iff i+1 in s."""
    _require_valid(s)
    members = set(s.elements)
    return DyckPrefix("".join("D" if i + 1 in members else "U"
                              for i in range(1, s.n)))


def from_dyck(n: int, w: DyckPrefix | str) -> PeakSet:
    """Inverse of to_dyck; the word must have length n-1."""
    if not isinstance(w, DyckPrefix):
        w = DyckPrefix(w)
    if w.length != n - 1:
        raise DyckFormatError(f"word length {w.length} != n-1 = {n - 1}")
    return PeakSet(n, (i + 1 for i, ch in enumerate(w.letters, start=1)
                       if ch == "D"))


def count_valid(n: int) -> int:
    """|P_n| = C(n-1, floor((n-1)/2)), the central binomial number."""
    if n < 3:
        raise ValueError("n must be >= 3")
    return comb(n - 1, (n - 1) // 2)


# ---------------------------------------------------------------------------
# brute-force left-factor helpers (test oracles)

LEFT_FACTOR_LENGTH_CAP = 20


def enumerate_left_factors(length: int) -> list[str]:
    """All left factors of the given length, lexicographic (D < U)."""
    if length > LEFT_FACTOR_LENGTH_CAP:
        raise ResourceLimitError(
            f"left-factor enumeration capped at length {LEFT_FACTOR_LENGTH_CAP}"
        )
    words = [("", 0)]
    for _ in range(length):
        nxt = []
        for w, h in words:
            if h > 0:
                nxt.append((w + "D", h - 1))
            nxt.append((w + "U", h + 1))
        words = nxt
    return [w for w, _ in words]


def count_left_factors_to(length: int, height: int) -> int:
    """Brute-force count of left factors of a given length ending at height."""
    if height < 0 or (length - height) % 2:
        return 0
    return sum(1 for w in enumerate_left_factors(length)
               if w.count("U") - w.count("D") == height)
