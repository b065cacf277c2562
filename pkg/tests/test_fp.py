import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quadstab.fp import U, complex_phase, gamma_n, real_sign, ulp_neighbors, unit_roundoff


class TestUnitRoundoff:
    def test_value(self):
        assert unit_roundoff() == 2.0**-53
        assert U == 2.0**-53

    def test_is_the_rounding_boundary_at_one(self):
        # u is exactly the largest perturbation of 1.0 that ties-to-even absorbs.
        assert 1.0 + U == 1.0
        assert 1.0 + 2.0 * U > 1.0
        assert (1.0 + 2.0 * U) - 1.0 == 2.0 * U


class TestGammaN:
    def test_gamma_1(self):
        assert gamma_n(1) == U / (1.0 - U)

    def test_gamma_3_frozen(self):
        # Frozen from one evaluation of 3u/(1 - 3u); pins the rounding of the
        # denominator fl(1 - 3u) = 0.9999999999999997.
        assert gamma_n(3) == 3.3306690738754706e-16

    @given(st.integers(min_value=1, max_value=10**6))
    def test_positive_and_barely_above_nu(self, n):
        g = gamma_n(n)
        assert g > 0.0
        assert g >= n * U

    @given(st.integers(min_value=1, max_value=10**6))
    def test_monotone(self, n):
        assert gamma_n(n + 1) > gamma_n(n)

    @pytest.mark.parametrize("bad", [0, -1, -(2**60)])
    def test_rejects_nonpositive(self, bad):
        with pytest.raises(ValueError):
            gamma_n(bad)

    def test_rejects_saturated_n(self):
        with pytest.raises(ValueError):
            gamma_n(2**53)

    @pytest.mark.parametrize("bad", [1.5, "3", True])
    def test_rejects_non_integers(self, bad):
        with pytest.raises(ValueError):
            gamma_n(bad)


class TestRealSign:
    @pytest.mark.parametrize(
        "x,expected",
        [(2.5, 1.0), (-0.25, -1.0), (5e-324, 1.0), (-5e-324, -1.0), (math.inf, 1.0)],
    )
    def test_values(self, x, expected):
        assert real_sign(x) == expected

    @pytest.mark.parametrize("zero", [0.0, -0.0])
    def test_rejects_zero(self, zero):
        with pytest.raises(ValueError):
            real_sign(zero)

    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            real_sign(math.nan)

    @given(
        st.floats(
            allow_nan=False, allow_infinity=False, allow_subnormal=True
        ).filter(lambda x: x != 0.0)
    )
    def test_sign_times_abs_recovers_x(self, x):
        assert real_sign(x) * abs(x) == x


class TestComplexPhase:
    def test_pythagorean_exact(self):
        assert complex_phase(complex(3.0, 4.0)) == complex(0.6, 0.8)

    def test_negative_real_axis(self):
        assert complex_phase(complex(-2.0, 0.0)) == complex(-1.0, 0.0)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            complex_phase(0j)

    def test_huge_components_do_not_overflow(self):
        w = complex_phase(complex(1e308, 1e308))
        assert math.isfinite(w.real) and math.isfinite(w.imag)
        assert abs(abs(w) - 1.0) <= 4.0 * U

    def test_subnormal_input(self):
        assert complex_phase(complex(0.0, 5e-324)) == 1j

    @given(
        st.complex_numbers(
            min_magnitude=1e-150, max_magnitude=1e150, allow_nan=False, allow_infinity=False
        )
    )
    def test_modulus_within_4u(self, z):
        assert abs(abs(complex_phase(z)) - 1.0) <= 4.0 * U


class TestUlpNeighbors:
    def test_single_steps_at_one(self):
        assert ulp_neighbors(1.0, 1) == 1.0 + 2.0**-52
        assert ulp_neighbors(1.0, -1) == 1.0 - 2.0**-53

    def test_zero_steps_is_identity(self):
        assert ulp_neighbors(1.5, 0) == 1.5

    def test_crosses_zero(self):
        assert ulp_neighbors(5e-324, -1) == 0.0
        assert ulp_neighbors(5e-324, -2) == -5e-324

    def test_overflow_raises(self):
        top = math.nextafter(math.inf, 0.0)
        assert ulp_neighbors(top, -1) < top
        with pytest.raises(OverflowError):
            ulp_neighbors(top, 1)

    @pytest.mark.parametrize("bad", [math.inf, -math.inf, math.nan])
    def test_rejects_non_finite(self, bad):
        with pytest.raises(ValueError):
            ulp_neighbors(bad, 1)

    @pytest.mark.parametrize("bad_k", [0.5, "1", True])
    def test_rejects_non_integer_k(self, bad_k):
        with pytest.raises(ValueError):
            ulp_neighbors(1.0, bad_k)

    @given(
        st.floats(min_value=-1e300, max_value=1e300, allow_nan=False),
        st.integers(min_value=-100, max_value=100),
    )
    def test_round_trip(self, x, k):
        assert ulp_neighbors(ulp_neighbors(x, k), -k) == x

    @given(
        st.floats(min_value=-1e300, max_value=1e300, allow_nan=False),
        st.integers(min_value=-100, max_value=100),
    )
    def test_strictly_ordered(self, x, k):
        y = ulp_neighbors(x, k)
        if k > 0:
            assert y > x
        elif k < 0:
            assert y < x
        else:
            assert y == x
