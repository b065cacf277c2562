"""Extended-precision reference computations backed by mpmath.

Results labelled "extended" are mpmath values carrying precision_bits bits of
mantissa. Conversion from binary64 is exact, so oracle answers differ from the
true mathematical quantities only by extended-precision rounding: relative
error at most a few units in 2**-precision_bits.
"""

from __future__ import annotations

from mpmath import mp

from .solver import DegenerateLeadingCoefficient, Quadratic

__all__ = [
    "DEFAULT_PRECISION",
    "MIN_PRECISION",
    "InfiniteRelativeError",
    "to_extended",
    "oracle_roots",
    "oracle_roots_from_coeffs",
    "recompose",
    "rel_error",
]

DEFAULT_PRECISION = 128
# Below twice the binary64 mantissa the oracle could not even represent an
# exact product of two doubles; refuse to run there.
MIN_PRECISION = 106


class InfiniteRelativeError(ArithmeticError):
    """Relative error against an exactly-zero reference is undefined."""


def _check_precision(precision_bits: int) -> None:
    if not isinstance(precision_bits, int) or isinstance(precision_bits, bool):
        raise ValueError("precision_bits must be an integer")
    if precision_bits < MIN_PRECISION:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION}")


def to_extended(z):
    """Convert a float/complex (or pass through an mpmath value) exactly."""
    if isinstance(z, (mp.mpf, mp.mpc)):
        return z
    if isinstance(z, complex):
        if z.imag == 0.0:
            return mp.mpf(z.real)
        return mp.mpc(z.real, z.imag)
    return mp.mpf(z)


def _as_real(z):
    """Return the real mpf when z has exactly zero imaginary part, else None."""
    if isinstance(z, mp.mpc):
        return mp.mpf(z.real) if z.imag == 0 else None
    return z


def oracle_roots(q: Quadratic, precision_bits: int = DEFAULT_PRECISION):
    """Reference roots of q at extended precision, ordered |x1| >= |x2|."""
    return oracle_roots_from_coeffs(q.a, q.b, q.c, precision_bits)


def oracle_roots_from_coeffs(a, b, c, precision_bits: int = DEFAULT_PRECISION):
    """Reference roots of a*x^2 + b*x + c = 0 from raw coefficient values.

    Accepts floats, complex, or mpmath values; a must be nonzero. The large
    root uses the sign-matched quadratic formula (the +- branch is chosen so
    |b + sigma*s| = |b| + |s| and nothing cancels); the small root comes from
    the product relation x2 = (c/a)/x1. Real coefficients with negative
    discriminant return an exactly conjugate pair, x2 = conj(x1) bit for bit.
    """
    _check_precision(precision_bits)
    with mp.workprec(precision_bits):
        A, B, C = to_extended(a), to_extended(b), to_extended(c)
        if A == 0:
            raise DegenerateLeadingCoefficient("oracle roots: a must be nonzero")

        ra, rb, rc = _as_real(A), _as_real(B), _as_real(C)
        if ra is not None and rb is not None and rc is not None:
            disc = rb * rb - 4 * ra * rc
            if disc < 0:
                re = -rb / (2 * ra)
                im = mp.fabs(mp.sqrt(-disc) / (2 * ra))
                return mp.mpc(re, im), mp.mpc(re, -im)
            s = mp.sqrt(disc)
            sigma = 1 if rb >= 0 else -1
            x1 = -(rb + sigma * s) / (2 * ra)
            if x1 == 0:
                return mp.mpf(0), mp.mpf(0)
            x2 = (rc / ra) / x1
        else:
            disc = B * B - 4 * A * C
            s = mp.sqrt(mp.mpc(disc))
            # sigma matches s against B: Re(conj(B)*s) >= 0 means the moduli add.
            sigma = -1 if mp.re(mp.conj(B) * s) < 0 else 1
            x1 = -(B + sigma * s) / (2 * A)
            if x1 == 0:
                return mp.mpc(0), mp.mpc(0)
            x2 = (C / A) / x1

        if mp.fabs(x2) > mp.fabs(x1):
            x1, x2 = x2, x1
        return x1, x2


def recompose(x1, x2, a, precision_bits: int = DEFAULT_PRECISION):
    """Extended-precision coefficients (b_hat, c_hat) of the quadratic with
    leading coefficient a whose exact roots are x1 and x2:
    b_hat = -a*(x1 + x2), c_hat = a*x1*x2."""
    _check_precision(precision_bits)
    with mp.workprec(precision_bits):
        X1, X2, A = to_extended(x1), to_extended(x2), to_extended(a)
        return -(A * (X1 + X2)), A * X1 * X2


def rel_error(approx, exact, precision_bits: int = DEFAULT_PRECISION) -> float:
    """|approx - exact| / |exact| as a float, computed at extended precision.

    Both values zero is a perfect match (0.0). A nonzero approx against an
    exactly-zero exact value raises InfiniteRelativeError.
    """
    _check_precision(precision_bits)
    with mp.workprec(precision_bits):
        ap, ex = to_extended(approx), to_extended(exact)
        if ex == 0:
            if ap == 0:
                return 0.0
            raise InfiniteRelativeError("rel_error: exact value is zero")
        return float(mp.fabs(ap - ex) / mp.fabs(ex))
