from fractions import Fraction
from itertools import combinations

import pytest

from circpeaks.complex_poset import (
    FaceTable,
    euler_characteristic,
    f_generating_series,
    f_polynomial,
    f_polynomial_by_recurrence,
    face_count,
    face_counts_by_recurrence,
    face_table,
    faces,
    moebius,
    moebius_recursive_oracle,
    printed_f_series_discrepancy,
    verify_product_structure,
)
from circpeaks.exact_algebra import ExactPoly
from circpeaks.peak_sets import PeakSet, count_valid, is_valid, max_peak_count
from circpeaks.perm_core import ResourceLimitError


def test_faces_examples():
    assert [f.elements for f in faces(5, 0)] == [(3,), (4,), (5,)]
    assert [f.elements for f in faces(5, 1)] == [(3, 5), (4, 5)]
    assert [f.elements for f in faces(7, -1)] == [()]
    assert faces(5, 2) == []
    assert faces(5, -2) == []


def test_face_count_examples():
    assert face_count(5, 1) == 2
    assert face_count(6, 1) == 5
    assert face_count(9, -1) == 1
    assert face_count(5, 2) == 0


def test_face_table_and_recurrence():
    assert face_counts_by_recurrence(3) == FaceTable(3, (1, 1))
    assert face_counts_by_recurrence(4) == FaceTable(4, (1, 2))
    assert face_counts_by_recurrence(6) == FaceTable(6, (1, 4, 5))
    for n in range(3, 41):
        assert face_counts_by_recurrence(n) == face_table(n)


@pytest.mark.parametrize("n", range(3, 15))
def test_face_count_matches_enumeration(n):
    for dim in range(-1, max_peak_count(n) + 1):
        assert face_count(n, dim) == len(faces(n, dim))
    assert sum(face_count(n, i) for i in range(-1, max_peak_count(n))) == count_valid(n)


@pytest.mark.parametrize("n", range(3, 15))
def test_downward_closure_and_vertices(n):
    for d in range(0, max_peak_count(n)):
        for f in faces(n, d):
            for t in combinations(f.elements, len(f.elements) - 1):
                assert is_valid(n, t)
    for x in range(1, n + 1):
        assert is_valid(n, (x,)) == (3 <= x <= n)


def test_f_polynomial_examples():
    assert f_polynomial(3) == ExactPoly((1, 1))
    assert f_polynomial(4) == ExactPoly((2, 1))
    assert f_polynomial(5) == ExactPoly((2, 3, 1))
    for n in range(3, 41):
        assert f_polynomial_by_recurrence(n) == f_polynomial(n)


def test_f_generating_series():
    series = f_generating_series(20)
    assert series.y_coefficient(2).is_zero()
    assert series.y_coefficient(3) == ExactPoly((1, 1))
    assert series.y_coefficient(4) == ExactPoly((2, 1))
    for n in range(3, 21):
        assert series.y_coefficient(n) == f_polynomial(n)


def test_printed_form_discrepancy_is_documented():
    report = printed_f_series_discrepancy(12)
    assert report is not None
    assert report["first_mismatch_y_order"] == 4
    assert "corrected" in report["note"]


def test_moebius_examples():
    empty3 = PeakSet(3, ())
    assert moebius(3, empty3, PeakSet(3, (3,))) == -1
    assert moebius(5, PeakSet(5, (4, 5)), PeakSet(5, (4, 5))) == 1
    assert moebius(5, PeakSet(5, ()), PeakSet(5, (4, 5))) == 1
    assert moebius_recursive_oracle(3, empty3, PeakSet(3, (3,))) == -1
    assert moebius_recursive_oracle(5, PeakSet(5, ()), PeakSet(5, (3, 5))) == 1


def test_moebius_rejects_bad_intervals():
    with pytest.raises(ValueError):
        moebius(5, PeakSet(5, (3,)), PeakSet(5, (4, 5)))  # not nested
    with pytest.raises(ValueError):
        moebius(5, PeakSet(5, ()), PeakSet(5, (3, 4)))  # invalid face


@pytest.mark.parametrize("n", range(3, 11))
def test_moebius_matches_recursive_oracle(n):
    all_fs = [PeakSet(n, c)
              for k in range(0, max_peak_count(n) + 1)
              for c in combinations(range(3, n + 1), k)
              if is_valid(n, c)]
    for s in all_fs:
        for t in all_fs:
            if set(s.elements) <= set(t.elements):
                assert moebius(n, s, t) == moebius_recursive_oracle(n, s, t)


def test_euler_characteristic():
    assert euler_characteristic(5) == 0
    assert euler_characteristic(4) == 1
    assert euler_characteristic(6) == -2
    for n in range(3, 41):
        chi = euler_characteristic(n)
        assert chi.denominator == 1
        if n % 2:
            assert chi == 0


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13])
def test_product_structure(n):
    assert verify_product_structure(n)


def test_caps():
    with pytest.raises(ResourceLimitError):
        faces(15, 1)
    with pytest.raises(ResourceLimitError):
        verify_product_structure(14)


def test_face_table_serialization():
    table = face_table(5)
    assert table.to_json_dict() == {"n": 5, "f": [1, 3, 2]}
    assert table.csv_rows() == [(5, -1, 1), (5, 0, 3), (5, 1, 2)]
