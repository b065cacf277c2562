"""Scalar floating-point primitives used throughout the package.

Everything here is phrased for IEEE-754 binary64 ("double") arithmetic with
round-to-nearest, ties to even. The unit roundoff is u = 2**-53, i.e. half the
distance between 1.0 and the next representable number.
"""

from __future__ import annotations

import math

__all__ = [
    "U",
    "unit_roundoff",
    "gamma_n",
    "real_sign",
    "complex_phase",
    "ulp_neighbors",
]

# Unit roundoff for binary64. Note sys.float_info.epsilon is 2*U.
U: float = 2.0 ** -53


def unit_roundoff() -> float:
    """Return the unit roundoff u = 2**-53 of binary64 arithmetic.

    A single rounding of a real result x to the nearest double yields
    fl(x) = x * (1 + d) with |d| <= u.
    """
    return U


def gamma_n(n: int) -> float:
    """Return gamma_n = n*u / (1 - n*u), the standard n-rounding error bound.

    A chain of n multiplications/divisions/square roots accumulates a relative
    error of at most gamma_n. Requires n >= 1 and n*u < 1; outside that range
    the quantity is meaningless and a ValueError is raised.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("gamma_n: n must be an integer")
    if n < 1:
        raise ValueError("gamma_n: n must be >= 1")
    nu = n * U
    if nu >= 1.0:
        raise ValueError("gamma_n: n*u must be < 1")
    return nu / (1.0 - nu)


def real_sign(x: float) -> float:
    """Return +1.0 or -1.0 matching the sign of a nonzero real.

    Zero (either signed zero) is rejected: callers that can see a zero must
    decide its sign convention themselves, explicitly.
    """
    x = float(x)
    if x == 0.0:
        raise ValueError("real_sign: x must be nonzero")
    if math.isnan(x):
        raise ValueError("real_sign: x must not be NaN")
    return math.copysign(1.0, x)


def complex_phase(z: complex) -> complex:
    """Return z/|z|, the unit-modulus phase of a nonzero complex number.

    The result's modulus is 1 up to a few roundings (| |w| - 1 | <= 4u).
    abs() uses an overflow-safe hypot, so huge components are fine.
    """
    z = complex(z)
    if z == 0:
        raise ValueError("complex_phase: z must be nonzero")
    r = abs(z)
    if math.isinf(r):
        # Componentwise overflow guard: halve first, |z| unchanged in phase.
        z = complex(z.real / 2.0, z.imag / 2.0)
        r = abs(z)
    if not math.isfinite(r) or r == 0.0:
        raise ValueError("complex_phase: z must be finite and nonzero")
    return complex(z.real / r, z.imag / r)


def ulp_neighbors(x: float, k: int) -> float:
    """Step x by k positions on the binary64 grid (k may be negative).

    Each step moves to the adjacent representable double (math.nextafter),
    so the result is exactly the k-th neighbor of x, crossing zero and
    entering the subnormal range as needed. Stepping past the largest finite
    double raises OverflowError rather than returning an infinity.
    """
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        raise ValueError("ulp_neighbors: x must be finite")
    if not isinstance(k, int) or isinstance(k, bool):
        raise ValueError("ulp_neighbors: k must be an integer")
    target = math.inf if k > 0 else -math.inf
    for _ in range(abs(k)):
        x = math.nextafter(x, target)
        if math.isinf(x):
            raise OverflowError("ulp_neighbors: stepped past the finite range")
    return x
