from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from patavoid.seqanalysis import (
    classify,
    detect_eventual_polynomial,
    detect_fib_like,
    eval_poly,
)

FIB_DRIFT = [1, 2, 6, 12, 18, 26, 39, 60, 94, 149, 238, 382, 615]

coeff_lists = st.lists(
    st.integers(min_value=-20, max_value=20), min_size=1, max_size=8
).filter(lambda c: c[-1] != 0)


def sample_poly(coeffs, start, length):
    return [int(eval_poly([Fraction(c) for c in coeffs], x)) for x in range(start, start + length)]


class TestPolynomialDetection:
    def test_constant(self):
        fit = detect_eventual_polynomial([5, 5, 5, 5, 5, 5, 5], 3)
        assert (fit.degree, fit.threshold) == (0, 0)
        assert fit.coefficients == (Fraction(5),)

    def test_known_degree_four_row(self):
        row = [1, 2, 6, 20, 58, 141, 297, 561, 975, 1588]
        fit = detect_eventual_polynomial(row, 7)
        assert (fit.degree, fit.threshold) == (4, 0)

    def test_requires_three_difference_values(self):
        # degree 2 on 5 terms leaves only 3 second differences: accepted;
        # on 4 terms only 2: rejected
        quad = sample_poly([1, 2, 3], 1, 5)
        assert detect_eventual_polynomial(quad, 7).degree == 2
        with_fewer = sample_poly([1, 2, 3], 1, 4)
        assert detect_eventual_polynomial(with_fewer, 7) is None

    def test_no_fit_on_exponential(self):
        assert detect_eventual_polynomial([2**n for n in range(12)], 7) is None

    def test_max_degree_respected(self):
        cubic = sample_poly([0, 0, 0, 1], 1, 10)
        assert detect_eventual_polynomial(cubic, 2) is None
        assert detect_eventual_polynomial(cubic, 3).degree == 3

    def test_preconditions(self):
        with pytest.raises(ValueError):
            detect_eventual_polynomial([1, 2, 3], 2)
        with pytest.raises(ValueError):
            detect_eventual_polynomial([1, 2, 3, 4], -1)

    @given(coeff_lists)
    def test_round_trip(self, coeffs):
        degree = len(coeffs) - 1
        seq = sample_poly(coeffs, 1, degree + 6)
        fit = detect_eventual_polynomial(seq, 7)
        assert fit is not None
        assert fit.degree == degree
        # reported coefficients are in the 0-based term index; term k = p(k+1)
        poly = [Fraction(c) for c in coeffs]
        assert all(
            eval_poly(fit.coefficients, k) == eval_poly(poly, k + 1)
            for k in range(len(seq))
        )

    @given(coeff_lists, st.integers(min_value=1, max_value=3))
    def test_shift_robustness(self, coeffs, k):
        degree = len(coeffs) - 1
        seq = sample_poly(coeffs, 1, degree + 6 + k)
        for i in range(k):
            seq[i] += 1 + i + seq[i] % 7  # knock the prefix off the polynomial
        fit = detect_eventual_polynomial(seq, 7)
        assert fit is not None
        assert fit.degree == degree
        assert fit.threshold <= k + 1

    @given(coeff_lists)
    def test_degree_minimality(self, coeffs):
        degree = len(coeffs) - 1
        seq = sample_poly(coeffs, 1, degree + 8)
        fit = detect_eventual_polynomial(seq, 7)
        assert fit is not None and fit.degree <= degree


class TestFibLike:
    def test_known_drift_sequence(self):
        fit = detect_fib_like(FIB_DRIFT)
        assert (fit.a, fit.b, fit.threshold) == (0, -5, 6)

    def test_pure_fibonacci(self):
        fit = detect_fib_like([1, 1, 2, 3, 5, 8, 13, 21, 34])
        assert (fit.a, fit.b, fit.threshold) == (0, 0, 2)

    def test_quadratic_is_not_fib_like(self):
        seq = sample_poly([3, 1, 2], 1, 13)
        assert detect_fib_like(seq) is None

    def test_needs_nine_terms(self):
        with pytest.raises(ValueError):
            detect_fib_like([1, 2, 3, 5, 8, 13, 21, 34])

    @given(
        st.integers(min_value=-10, max_value=10),
        st.integers(min_value=-10, max_value=10),
        st.integers(min_value=0, max_value=20),
        st.integers(min_value=0, max_value=20),
        st.integers(min_value=9, max_value=16),
    )
    def test_synthesized_recurrences_recovered(self, a, b, f0, f1, length):
        seq = [f0, f1]
        for n in range(2, length):
            seq.append(seq[-1] + seq[-2] + a * n + b)
        fit = detect_fib_like(seq)
        assert fit is not None
        assert (fit.a, fit.b) == (a, b)
        assert fit.threshold == 2


class TestClassify:
    def test_zero_precedence(self):
        report = classify([1, 2, 2, 0, 0, 0, 0])
        assert report.verdict == "zero"
        assert report.threshold == 3
        assert report.evidence == 4

    def test_zero_beats_constant(self):
        assert classify([1, 1, 0, 0, 0, 0, 0]).verdict == "zero"

    def test_arithmetic_tail(self):
        report = classify([1, 2, 4, 6, 8, 10, 12, 14])
        assert report.verdict == "polynomial"
        assert report.degree == 1

    def test_drift_recurrence(self):
        report = classify(FIB_DRIFT)
        assert report.verdict == "fib_like"
        assert (report.a, report.b, report.threshold) == (0, -5, 6)

    def test_unclassified(self):
        assert classify([2**n + n % 3 for n in range(13)]).verdict == "unclassified"

    def test_two_trailing_zeros_not_zero_verdict(self):
        assert classify([1, 2, 6, 0, 0]).verdict != "zero"

    def test_json_dict(self):
        data = classify(FIB_DRIFT).to_json_dict()
        assert data == {"verdict": "fib_like", "threshold": 6, "a": 0, "b": -5}

    def test_short_sequence_rejected(self):
        with pytest.raises(ValueError):
            classify([1, 2, 3])
