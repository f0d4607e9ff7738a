"""Exact constants: kernel integrals, closed forms, and limit structure."""

from fractions import Fraction
from math import comb

import mpmath as mp
import pytest

from hookcensus.exactconst import (
    ConstantsRecord,
    Log2Number,
    binomial_log_sum,
    constants_record,
    diagonal_binomial_closed,
    diagonal_binomial_sum,
    distinct_hook_constant,
    distinct_hook_constant_from_integrals,
    harmonic,
    harmonic_tail,
    harmonic_tail_from_double_sum,
    hook_ratio,
    hook_ratio_exact,
    incomplete_beta_closed,
    incomplete_beta_sum,
    kernel_distinct_integral,
    kernel_odd_integral,
    limit_diagnostics,
    numeric_value,
    odd_hook_constant,
    odd_hook_constant_from_integrals,
)

QUAD_TOL = mp.mpf("1e-12")


class TestHarmonic:
    def test_values(self):
        assert harmonic(0) == 0
        assert harmonic(1) == 1
        assert harmonic(3) == Fraction(11, 6)

    def test_increments(self):
        for n in range(1, 30):
            assert harmonic(n) - harmonic(n - 1) == Fraction(1, n)


class TestLog2Number:
    def test_equality_is_formal(self):
        assert Log2Number(Fraction(1, 2)) == Log2Number(Fraction(1, 2), Fraction(0))
        assert Log2Number(0, 1) != Log2Number(Fraction(693147, 1000000))

    def test_algebra(self):
        x = Log2Number(Fraction(1, 3), Fraction(2))
        y = Log2Number(Fraction(1, 6), Fraction(-1))
        assert x + y == Log2Number(Fraction(1, 2), Fraction(1))
        assert x - y == Log2Number(Fraction(1, 6), Fraction(3))
        assert -(x * 3) == Log2Number(-1, -6)
        assert (x / 2).s == 1

    def test_product_of_two_irrationals_rejected(self):
        with pytest.raises(TypeError):
            Log2Number(0, 1) * Log2Number(0, 1)

    def test_numeric_value(self):
        val = Log2Number(Fraction(-1, 8), Fraction(1)).value(120)
        with mp.workprec(120):
            assert abs(val - (mp.log(2) - mp.mpf(1) / 8)) < mp.mpf("1e-30")

    def test_rationality_flag(self):
        assert Log2Number(Fraction(3, 4)).is_rational
        assert not Log2Number(Fraction(3, 4), Fraction(1, 2)).is_rational


class TestKernelIntegrals:
    def test_odd_kernel_values(self):
        assert kernel_odd_integral(0, 2) == Fraction(1, 2)
        assert kernel_odd_integral(1, 2) == Fraction(1, 4)

    def test_odd_l_rejected(self):
        with pytest.raises(ValueError):
            kernel_odd_integral(1, 3)

    @pytest.mark.parametrize("j,l", [(0, 2), (1, 2), (1, 4), (2, 4), (3, 6), (2, 8)])
    def test_odd_kernel_against_quadrature(self, j, l):
        quad = mp.quad(lambda x: (1 - mp.e ** (-2 * x)) ** j * mp.e ** (-l * x), [0, mp.inf])
        assert abs(quad - numeric_value(kernel_odd_integral(j, l))) < QUAD_TOL

    def test_distinct_kernel_values(self):
        assert kernel_distinct_integral(1, 1) == Log2Number(0, 1)
        assert kernel_distinct_integral(1, 2) == Log2Number(Fraction(1, 2))
        assert kernel_distinct_integral(1, 0) == Log2Number(1)

    @pytest.mark.parametrize("j,k", [(1, 1), (1, 2), (2, 2), (3, 2), (2, 5), (4, 3)])
    def test_distinct_kernel_against_quadrature(self, j, k):
        quad = mp.quad(lambda x: mp.e ** (-j * x) / (1 + mp.e ** (-x)) ** k, [0, mp.inf])
        assert abs(quad - kernel_distinct_integral(j, k).value()) < QUAD_TOL


class TestConstants:
    def test_pinned_odd_values(self):
        assert odd_hook_constant(1) == Fraction(1, 2)
        assert odd_hook_constant(2) == Fraction(3, 4)
        assert odd_hook_constant(3) == Fraction(2, 3)
        assert odd_hook_constant(4) == Fraction(17, 24)

    def test_pinned_distinct_values(self):
        assert distinct_hook_constant(1) == Log2Number(0, 1)
        assert distinct_hook_constant(2) == Log2Number(Fraction(1, 2))
        assert distinct_hook_constant(3) == Log2Number(Fraction(-1, 8), Fraction(1))
        assert distinct_hook_constant(4) == Log2Number(Fraction(13, 24))

    @pytest.mark.parametrize("h", range(1, 17))
    def test_integral_and_closed_forms_agree(self, h):
        assert odd_hook_constant(h) == odd_hook_constant_from_integrals(h)
        assert distinct_hook_constant(h) == distinct_hook_constant_from_integrals(h)

    @pytest.mark.parametrize("h", range(1, 17))
    def test_harmonic_tail_forms_agree(self, h):
        assert harmonic_tail(h) == harmonic_tail_from_double_sum(h)

    def test_harmonic_tail_values(self):
        assert harmonic_tail(1) == 1
        assert harmonic_tail(2) == Fraction(1, 2)
        assert harmonic_tail(4) == harmonic(4) - harmonic(2) == Fraction(7, 12)

    def test_rational_exactly_for_even_h(self):
        for h in range(1, 41):
            assert distinct_hook_constant(h).is_rational == (h % 2 == 0)

    def test_recurrence_of_odd_index_values(self):
        for n in range(1, 21):
            delta = distinct_hook_constant(2 * n + 1) - distinct_hook_constant(2 * n - 1)
            assert delta == Log2Number(Fraction(-1, n * 2 ** (2 * n + 1)))

    def test_alpha_alternates_instead_of_increasing(self):
        # consecutive difference is (1/h - 1/(h+1))/2 > 0 for odd h and
        # (1/(h+1) - 1/h)/2 < 0 for even h; the sequence is not monotone
        for h in range(1, 40):
            delta = odd_hook_constant(h + 1) - odd_hook_constant(h)
            expected = (Fraction(1, h) - Fraction(1, h + 1)) / 2
            if h % 2 == 0:
                expected = -expected
            assert delta == expected


class TestRatio:
    def test_exact_even_values(self):
        assert hook_ratio_exact(2) == Fraction(3, 2)
        assert hook_ratio_exact(4) == Fraction(17, 13)
        assert hook_ratio_exact(3) is None

    def test_reference_values(self):
        with mp.workprec(120):
            assert abs(hook_ratio(1) - 1 / (2 * mp.log(2))) < mp.mpf("1e-25")
            assert abs(hook_ratio(2) - mp.mpf(3) / 2) < mp.mpf("1e-25")
            assert abs(hook_ratio(3) - 2 / (3 * (mp.log(2) - mp.mpf(1) / 8))) < mp.mpf("1e-25")

    def test_record_serialization(self):
        record = constants_record(2)
        assert isinstance(record, ConstantsRecord)
        doc = record.to_json_dict()
        assert doc == {"h": 2, "alpha": "3/4", "beta": {"r": "1/2", "s": "0/1"},
                       "gamma": "1.5"}
        assert set(record.provenance) == {"alpha", "beta", "gamma"}


class TestPolynomialHelpers:
    def test_incomplete_beta_at_one(self):
        for n in range(13):
            for m in range(1, 13):
                assert incomplete_beta_sum(n, m, Fraction(1)) == \
                    Fraction(1, m * comb(n + m, m))

    def test_incomplete_beta_example(self):
        assert incomplete_beta_sum(1, 1, Fraction(1)) == Fraction(1, 2)

    @pytest.mark.parametrize("x", [Fraction(1), Fraction(1, 2), Fraction(2, 3), Fraction(1, 7)])
    def test_incomplete_beta_closed_form(self, x):
        for n in range(7):
            for m in range(1, 7):
                assert incomplete_beta_sum(n, m, x) == incomplete_beta_closed(n, m, x)

    @pytest.mark.parametrize("n,m", [(2, 1), (3, 2), (5, 3)])
    def test_incomplete_beta_against_quadrature(self, n, m):
        x = Fraction(3, 5)
        quad = mp.quad(lambda t: t ** (m - 1) * (1 - t) ** n, [0, mp.mpf(3) / 5])
        assert abs(quad - numeric_value(incomplete_beta_sum(n, m, x))) < QUAD_TOL

    def test_binomial_log_sum_at_zero(self):
        for n in range(9):
            assert binomial_log_sum(n, Fraction(0)) == 0

    @pytest.mark.parametrize("n", [1, 2, 5, 8])
    def test_tail_log_integral_against_quadrature(self, n):
        # log 2 + R(1) - R(1/2) equals integral_{1/2}^1 (1-x)^n / x dx
        exact = Log2Number(
            binomial_log_sum(n, Fraction(1)) - binomial_log_sum(n, Fraction(1, 2)),
            Fraction(1))
        quad = mp.quad(lambda x: (1 - x) ** n / x, [mp.mpf(1) / 2, 1])
        assert abs(quad - exact.value()) < QUAD_TOL

    def test_diagonal_binomial_values(self):
        assert diagonal_binomial_sum(0) == 1
        assert diagonal_binomial_sum(2) == Fraction(7, 3)
        assert diagonal_binomial_sum(3) == Fraction(9, 4)

    def test_diagonal_binomial_closed_forms(self):
        for n in range(61):
            assert diagonal_binomial_sum(n) == diagonal_binomial_closed(n)


class TestLimitDiagnostics:
    def test_structure_at_small_height(self):
        report = limit_diagnostics(24)
        assert report.alpha_exceeds_beta
        assert report.beta_recurrence_exact
        # the odd-class constant zigzags, so strict monotonicity fails
        assert not report.alpha_increasing
        assert report.first_violation == "alpha not strictly increasing"
        assert report.alpha_gap < 0.01
        assert report.beta_gap < 1e-6
        assert report.gamma_gap < 0.01

    def test_recurrence_magnitude_example(self):
        delta = distinct_hook_constant(5) - distinct_hook_constant(3)
        assert delta == Log2Number(Fraction(-1, 64))

    def test_minimum_height_enforced(self):
        with pytest.raises(ValueError):
            limit_diagnostics(3)
