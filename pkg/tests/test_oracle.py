import math
from fractions import Fraction

import numpy as np
import pytest
from mpmath import mp

from quadstab.oracle import (
    DEFAULT_PRECISION,
    MIN_PRECISION,
    InfiniteRelativeError,
    oracle_roots,
    oracle_roots_from_coeffs,
    recompose,
    rel_error,
    to_extended,
)
from quadstab.solver import DegenerateLeadingCoefficient, Quadratic

TWO = mp.mpf(2)


class TestToExtended:
    def test_float_is_exact(self):
        assert to_extended(0.1) == mp.mpf(0.1)

    def test_real_complex_collapses_to_mpf(self):
        v = to_extended(complex(3.5, 0.0))
        assert isinstance(v, mp.mpf) and v == 3.5

    def test_complex_keeps_both_parts(self):
        v = to_extended(1.5 - 2.5j)
        assert isinstance(v, mp.mpc)
        assert v.real == 1.5 and v.imag == -2.5

    def test_mp_values_pass_through(self):
        x = mp.mpf("1.25")
        assert to_extended(x) is x


class TestOracleRoots:
    def test_integer_factorization_is_exact(self):
        x1, x2 = oracle_roots(Quadratic(1, -3, 2))
        assert x1 == 2 and x2 == 1

    def test_complex_coefficients_exact_case(self):
        x1, x2 = oracle_roots(Quadratic(1, -3j, -2))
        assert x1 == mp.mpc(0, 2) and x2 == mp.mpc(0, 1)

    def test_negative_discriminant_returns_exact_conjugates(self):
        x1, x2 = oracle_roots(Quadratic(1, -1.2, 1))
        assert isinstance(x1, mp.mpc)
        assert x1.imag > 0
        # Negate inside a wide-precision block: mpmath arithmetic (unary
        # minus included) rounds to the ambient precision, which would
        # truncate these 128-bit values.
        with mp.workprec(200):
            assert x2.real == x1.real and x2.imag == -x1.imag

    def test_zero_c_keeps_zero_root_exact(self):
        x1, x2 = oracle_roots(Quadratic(1, 4, 0))
        assert x1 == -4 and x2 == 0

    def test_all_roots_zero(self):
        x1, x2 = oracle_roots(Quadratic(1, 0, 0))
        assert x1 == 0 and x2 == 0

    def test_ordering_over_random_corpus(self):
        rng = np.random.default_rng(31)
        for _ in range(50):
            a, b, c = (float(v) for v in rng.standard_normal(3))
            if a == 0.0:
                continue
            x1, x2 = oracle_roots_from_coeffs(a, b, c)
            assert mp.fabs(x1) >= mp.fabs(x2)

    def test_rejects_degenerate_leading_coefficient(self):
        with pytest.raises(DegenerateLeadingCoefficient):
            oracle_roots_from_coeffs(0.0, 1.0, 1.0)

    @pytest.mark.parametrize("bad", [105, 0, -128, 128.0, True])
    def test_rejects_bad_precision(self, bad):
        with pytest.raises(ValueError):
            oracle_roots(Quadratic(1, -3, 2), bad)

    def test_minimum_precision_is_enough_for_double_products(self):
        assert MIN_PRECISION == 106
        x1, x2 = oracle_roots(Quadratic(1, -3, 2), MIN_PRECISION)
        assert x1 == 2 and x2 == 1

    def test_precision_convergence(self):
        # Doubling the working precision moves each root by far less than
        # 2**-100 relative, i.e. the default answers are converged at the
        # tolerance every consumer in this package uses.
        for q in (Quadratic(3, 1, 1), Quadratic(1, -1e8, 1), Quadratic(2, -6, 4)):
            lo = oracle_roots(q, MIN_PRECISION)
            hi = oracle_roots(q, 2 * MIN_PRECISION)
            for approx, exact in zip(lo, hi):
                assert rel_error(approx, exact, 2 * MIN_PRECISION) <= 2.0**-100

    def test_tiny_offset_root_matches_series_expansion(self):
        # For x^2 - 2*beta*x - 1 the large root is beta + sqrt(beta^2 + 1)
        # = 1 + beta + beta^2/2 - beta^4/8 + O(beta^6); with beta ~ 2**-27
        # the dropped term is ~2**-165, far below the 2**-100 gate.
        beta = TWO**-27 + TWO**-54
        x1, x2 = oracle_roots_from_coeffs(1.0, float(-2 * beta), -1.0)
        with mp.workprec(300):
            series = 1 + beta + beta**2 / 2 - beta**4 / 8
            assert mp.fabs(x1 - series) <= TWO**-100
            assert mp.fabs(x2 + 1 / series) <= TWO**-100


class TestRecompose:
    def test_exact_cancellation_preserved(self):
        # x1 + x2 = 2**-26 and x1*x2 = 2**-54 - 1 are exact in 106 bits, so
        # the recomposed coefficients must match them to the last bit.
        bhat, chat = recompose(1 + 2.0**-27, -1 + 2.0**-27, 1.0)
        with mp.workprec(200):
            assert bhat == -(TWO**-26)
            assert chat == TWO**-54 - 1

    def test_scales_with_leading_coefficient(self):
        bhat, chat = recompose(2.0, 1.0, 3.0)
        assert bhat == -9 and chat == 6

    def test_matches_exact_rational_arithmetic(self):
        rng = np.random.default_rng(17)
        for _ in range(50):
            x1, x2, a = (float(v) for v in rng.uniform(-1, 1, size=3))
            bhat, chat = recompose(x1, x2, a)
            eb = -Fraction(a) * (Fraction(x1) + Fraction(x2))
            ec = Fraction(a) * Fraction(x1) * Fraction(x2)
            with mp.workprec(400):
                for got, want in ((bhat, eb), (chat, ec)):
                    ref = mp.mpf(want.numerator) / mp.mpf(want.denominator)
                    if ref == 0:
                        assert got == 0
                    else:
                        assert mp.fabs(got - ref) <= TWO**-100 * mp.fabs(ref)

    def test_rejects_bad_precision(self):
        with pytest.raises(ValueError):
            recompose(1.0, 1.0, 1.0, 64)


class TestVietaResidual:
    def test_oracle_roots_reproduce_coefficients(self):
        # Push the oracle roots back through b = -a*(x1+x2), c = a*x1*x2 at
        # twice the precision: the residual must stay below a small multiple
        # of 2**-160 times the natural magnitude of each coefficient.
        rng = np.random.default_rng(23)
        for _ in range(40):
            a, b, c = (float(v) for v in rng.standard_normal(3))
            if a == 0.0 or c == 0.0:
                continue
            x1, x2 = oracle_roots_from_coeffs(a, b, c, 160)
            bhat, chat = recompose(x1, x2, a, 320)
            with mp.workprec(320):
                scale_b = mp.fabs(a) * (mp.fabs(x1) + mp.fabs(x2))
                scale_c = mp.fabs(a) * mp.fabs(x1) * mp.fabs(x2)
                assert mp.fabs(bhat - to_extended(b)) <= 16 * TWO**-160 * scale_b
                assert mp.fabs(chat - to_extended(c)) <= 16 * TWO**-160 * scale_c


class TestRelError:
    def test_zero_against_zero_is_perfect(self):
        assert rel_error(0.0, 0.0) == 0.0
        assert rel_error(0j, mp.mpf(0)) == 0.0

    def test_simple_value(self):
        assert rel_error(1.5, 1.0) == 0.5

    def test_complex_distance(self):
        assert rel_error(1 + 1j, 1j) == 1.0

    def test_tiny_but_nonzero_against_zero_raises(self):
        with pytest.raises(InfiniteRelativeError):
            rel_error(1e-300, 0.0)

    def test_rejects_bad_precision(self):
        with pytest.raises(ValueError):
            rel_error(1.0, 1.0, 105)

    def test_default_precision_constant(self):
        assert DEFAULT_PRECISION == 128
