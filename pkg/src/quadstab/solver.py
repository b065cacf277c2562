"""Scalar quadratic root solver, organized around a scaled variable.

For a*x^2 + b*x + c with a != 0 and b, c != 0, the equation is reduced to a
monic form, then rescaled by x = -alpha*y so that the working equation is

    real coefficients:     y^2 - 2*beta*y + e = 0,     e in {-1, +1}
    complex coefficients:  y^2 - 2*beta*y + f^2 = 0,   |f| = 1

with beta = |b1| / (2*sqrt(|c1|)) >= 0. Every root of the scaled equation has
modulus in [1/2, 2+...] territory regardless of how wild the original
coefficients were, which is what makes the element-wise error analysis of the
formulas below go through. The three real cases and the complex case each use
an explicit formula chosen so that no subtraction of nearly equal quantities
occurs; small roots come from the exact product relation (y1*y2 = e or f^2)
rather than from the quadratic formula's cancelling branch.

Zero coefficients never enter the scaling: b == 0 and c == 0 are dispatched
to dedicated exact paths first, on the original coefficients.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .fp import complex_phase, real_sign

__all__ = [
    "CASE_C_ZERO",
    "CASE_B_ZERO",
    "CASE_REAL_1",
    "CASE_REAL_2",
    "CASE_REAL_3",
    "CASE_COMPLEX",
    "ALL_CASES",
    "DegenerateLeadingCoefficient",
    "ScalingRangeError",
    "Quadratic",
    "MonicQuadratic",
    "ScaledFormReal",
    "ScaledFormComplex",
    "RootPair",
    "SolveOutcome",
    "to_monic",
    "scale_variable_real",
    "scale_variable_complex",
    "roots_scaled_real",
    "roots_scaled_complex",
    "unscale_roots",
    "solve_b_zero",
    "solve_c_zero",
    "solve_full",
    "solve",
]

CASE_C_ZERO = "CZero"
CASE_B_ZERO = "BZero"
CASE_REAL_1 = "Real1"
CASE_REAL_2 = "Real2"
CASE_REAL_3 = "Real3"
CASE_COMPLEX = "Complex"

ALL_CASES = (
    CASE_C_ZERO,
    CASE_B_ZERO,
    CASE_REAL_1,
    CASE_REAL_2,
    CASE_REAL_3,
    CASE_COMPLEX,
)


class DegenerateLeadingCoefficient(ValueError):
    """Raised when a == 0: the input is not a quadratic."""


class ScalingRangeError(ArithmeticError):
    """Raised when an intermediate quantity leaves the finite double range.

    The solver does no silent pre-scaling; coefficient combinations whose
    monic or scaled forms overflow, or underflow to an exact zero, are
    reported instead of being mangled.
    """


def _is_finite_c(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


@dataclass(frozen=True)
class Quadratic:
    """Coefficients (a, b, c) of a*x^2 + b*x + c, stored as complex.

    The kind is Real exactly when all three imaginary parts are exactly
    zero. a == 0 is accepted at construction and rejected by solve(), so a
    Quadratic can also carry data that is about to be validated.
    """

    a: complex
    b: complex
    c: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        object.__setattr__(self, "c", complex(self.c))
        for name in ("a", "b", "c"):
            if not _is_finite_c(getattr(self, name)):
                raise ValueError(f"Quadratic: coefficient {name} must be finite")

    @property
    def is_real(self) -> bool:
        return self.a.imag == 0.0 and self.b.imag == 0.0 and self.c.imag == 0.0


@dataclass(frozen=True)
class MonicQuadratic:
    """Coefficients (b1, c1) of y^2 + b1*y + c1 after dividing out a."""

    b1: complex
    c1: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "b1", complex(self.b1))
        object.__setattr__(self, "c1", complex(self.c1))
        if not (_is_finite_c(self.b1) and _is_finite_c(self.c1)):
            raise ValueError("MonicQuadratic: coefficients must be finite")

    @property
    def is_real(self) -> bool:
        return self.b1.imag == 0.0 and self.c1.imag == 0.0


@dataclass(frozen=True)
class ScaledFormReal:
    """Real scaled form: x = -alpha*y turns the monic equation into
    y^2 - 2*beta*y + e = 0 with beta >= 0 and e in {-1.0, +1.0} exact."""

    alpha: float
    beta: float
    e: float

    def __post_init__(self) -> None:
        if self.alpha == 0.0 or not math.isfinite(self.alpha):
            raise ValueError("ScaledFormReal: alpha must be finite and nonzero")
        if not (self.beta >= 0.0 and math.isfinite(self.beta)):
            raise ValueError("ScaledFormReal: beta must be finite and >= 0")
        if self.e not in (-1.0, 1.0):
            raise ValueError("ScaledFormReal: e must be exactly -1 or +1")


@dataclass(frozen=True)
class ScaledFormComplex:
    """Complex scaled form: y^2 - 2*beta*y + f^2 = 0 with |f| = 1 up to
    a few roundings (| |f| - 1 | <= 8u)."""

    alpha: complex
    beta: float
    f: complex

    def __post_init__(self) -> None:
        if self.alpha == 0 or not _is_finite_c(complex(self.alpha)):
            raise ValueError("ScaledFormComplex: alpha must be finite and nonzero")
        if not (self.beta >= 0.0 and math.isfinite(self.beta)):
            raise ValueError("ScaledFormComplex: beta must be finite and >= 0")
        if not _is_finite_c(complex(self.f)):
            raise ValueError("ScaledFormComplex: f must be finite")


@dataclass(frozen=True)
class RootPair:
    """The two roots, ordered by modulus: |x1| >= |x2|.

    When a real-kind input lands in the complex-conjugate case, x2 is the
    bit-exact conjugate of x1 (same component magnitudes, negated imag).
    """

    x1: complex
    x2: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "x1", complex(self.x1))
        object.__setattr__(self, "x2", complex(self.x2))
        if not (_is_finite_c(self.x1) and _is_finite_c(self.x2)):
            raise ValueError("RootPair: roots must be finite")


@dataclass(frozen=True)
class SolveOutcome:
    """Roots plus the case tag and the intermediate forms that produced them.

    monic and scaled are None on the zero-coefficient fast paths, which never
    build them.
    """

    roots: RootPair
    case: str
    monic: MonicQuadratic | None = None
    scaled: ScaledFormReal | ScaledFormComplex | None = None


def to_monic(q: Quadratic) -> MonicQuadratic:
    """Divide through by a. Raises DegenerateLeadingCoefficient on a == 0,
    ScalingRangeError if either quotient overflows or a nonzero coefficient
    underflows to an exact zero (complete loss of the coefficient)."""
    if q.a == 0:
        raise DegenerateLeadingCoefficient("to_monic: a must be nonzero")
    if q.is_real:
        # Real inputs stay on the real axis; divide componentwise so the
        # result is the correctly rounded float quotient.
        ar = q.a.real
        b1 = complex(q.b.real / ar, 0.0)
        c1 = complex(q.c.real / ar, 0.0)
    else:
        b1 = q.b / q.a
        c1 = q.c / q.a
    for name, quotient, num in (("b1", b1, q.b), ("c1", c1, q.c)):
        if not _is_finite_c(quotient):
            raise ScalingRangeError(f"to_monic: {name} overflows")
        if quotient == 0 and num != 0:
            raise ScalingRangeError(f"to_monic: {name} underflows to zero")
    return MonicQuadratic(b1, c1)


def scale_variable_real(m: MonicQuadratic) -> ScaledFormReal:
    """Build the real scaled form from a real-kind monic with b1, c1 != 0.

    alpha = sign(b1)*sqrt(|c1|) carries one rounding; beta = |b1|/(2*sqrt(|c1|))
    carries two (the factor 2 is exact); e = sign(c1) is exact.
    """
    if not m.is_real:
        raise ValueError("scale_variable_real: monic form must be real")
    b1, c1 = m.b1.real, m.c1.real
    if b1 == 0.0 or c1 == 0.0:
        raise ValueError("scale_variable_real: b1 and c1 must be nonzero")
    sq = math.sqrt(abs(c1))
    alpha = real_sign(b1) * sq
    beta = abs(b1) / (2.0 * sq)
    if not math.isfinite(beta) or alpha == 0.0:
        raise ScalingRangeError("scale_variable_real: scaled form out of range")
    return ScaledFormReal(alpha=alpha, beta=beta, e=real_sign(c1))


def scale_variable_complex(m: MonicQuadratic) -> ScaledFormComplex:
    """Build the complex scaled form from a monic with b1, c1 != 0.

    alpha = phase(b1)*sqrt(|c1|), and f = sqrt(phase(c1))/phase(b1) (principal
    square root) satisfies f^2 ~ c1/alpha^2 with |f| = 1 up to a few ulps.
    """
    if m.b1 == 0 or m.c1 == 0:
        raise ValueError("scale_variable_complex: b1 and c1 must be nonzero")
    phase_b = complex_phase(m.b1)
    sq = math.sqrt(abs(m.c1))
    alpha = phase_b * sq
    beta = abs(m.b1) / (2.0 * sq)
    if not math.isfinite(beta) or alpha == 0:
        raise ScalingRangeError("scale_variable_complex: scaled form out of range")
    f = cmath.sqrt(complex_phase(m.c1)) / phase_b
    return ScaledFormComplex(alpha=alpha, beta=beta, f=f)


def roots_scaled_real(s: ScaledFormReal) -> tuple[complex, complex, str]:
    """Roots of y^2 - 2*beta*y + e = 0 and the case tag that produced them.

    Case 1 (e = -1): y1 = beta + sqrt(beta^2 + 1), y2 = -1/y1.
    Case 2 (e = +1, beta >= 1): y1 = beta + sqrt((beta+1)*(beta-1)), y2 = 1/y1.
    Case 3 (e = +1, beta < 1): y = beta +- i*sqrt((beta+1)*(1-beta)).

    All additions join same-sign terms, so no cancellation occurs anywhere;
    the small root of cases 1 and 2 comes from the product relation
    y1*y2 = e. Case 3 returns an exactly conjugate pair whose floating-point
    sum is exactly 2*beta.
    """
    beta, e = s.beta, s.e
    if e == -1.0:
        y1 = beta + math.sqrt(beta * beta + 1.0)
        return complex(y1, 0.0), complex(-1.0 / y1, 0.0), CASE_REAL_1
    if beta >= 1.0:
        # (beta+1)*(beta-1), never beta*beta - 1: the latter cancels
        # catastrophically for beta near 1, the former never does.
        y1 = beta + math.sqrt((beta + 1.0) * (beta - 1.0))
        return complex(y1, 0.0), complex(1.0 / y1, 0.0), CASE_REAL_2
    im = math.sqrt((beta + 1.0) * (1.0 - beta))
    return complex(beta, im), complex(beta, -im), CASE_REAL_3


def roots_scaled_complex(s: ScaledFormComplex) -> tuple[complex, complex]:
    """Roots of y^2 - 2*beta*y + f^2 = 0, larger modulus first.

    gamma = sqrt((beta - f)*(beta + f)) on the principal branch; the root
    y1 = beta + sign(Re gamma)*gamma (sign(0) taken as +1) adds constructively,
    and y2 = f^2/y1 comes from the product relation.
    """
    beta, f = s.beta, s.f
    gamma = cmath.sqrt((beta - f) * (beta + f))
    sg = 1.0 if gamma.real >= 0.0 else -1.0
    y1 = beta + sg * gamma
    if y1 == 0:
        raise ScalingRangeError("roots_scaled_complex: degenerate scaled root")
    y2 = (f * f) / y1
    if abs(y2) > abs(y1):
        y1, y2 = y2, y1
    return y1, y2


def unscale_roots(y1: complex, y2: complex, alpha: complex | float) -> RootPair:
    """Map scaled roots back through x = fl(-alpha*y).

    A real alpha multiplies componentwise, which keeps conjugate pairs
    bit-exact conjugates and leaves exact zeros clean (+0.0 imag). Results
    that leave the finite range raise ScalingRangeError.
    """
    a = complex(alpha)
    if a == 0:
        raise ValueError("unscale_roots: alpha must be nonzero")

    if a.imag == 0.0:
        ar = a.real

        def back(y: complex) -> complex:
            re = -(ar * y.real)
            im = 0.0 if y.imag == 0.0 else -(ar * y.imag)
            return complex(re, im)

    else:

        def back(y: complex) -> complex:
            w = a * complex(y)
            return complex(-w.real, -w.imag)

    x1 = back(complex(y1))
    x2 = back(complex(y2))
    if not (_is_finite_c(x1) and _is_finite_c(x2)):
        raise ScalingRangeError("unscale_roots: root overflows")
    if abs(x2) > abs(x1):
        x1, x2 = x2, x1
    return RootPair(x1, x2)


def solve_b_zero(q: Quadratic) -> RootPair:
    """Roots of a*x^2 + c = 0 (b == 0, c != 0): x1 = sqrt(-c/a), x2 = -x1."""
    if q.a == 0:
        raise DegenerateLeadingCoefficient("solve_b_zero: a must be nonzero")
    if q.b != 0 or q.c == 0:
        raise ValueError("solve_b_zero: requires b == 0 and c != 0")
    if q.is_real:
        c1 = q.c.real / q.a.real
        if not math.isfinite(c1) or c1 == 0.0:
            raise ScalingRangeError("solve_b_zero: c/a out of range")
        if c1 < 0.0:
            x1 = complex(math.sqrt(-c1), 0.0)
        else:
            x1 = complex(0.0, math.sqrt(c1))
    else:
        ratio = q.c / q.a
        if not _is_finite_c(ratio) or ratio == 0:
            raise ScalingRangeError("solve_b_zero: c/a out of range")
        x1 = cmath.sqrt(-ratio)
    x2 = complex(-x1.real, -x1.imag)
    return RootPair(x1, x2)


def solve_c_zero(q: Quadratic) -> RootPair:
    """Roots of a*x^2 + b*x = 0 (c == 0, b != 0): x1 = -b/a, x2 = 0."""
    if q.a == 0:
        raise DegenerateLeadingCoefficient("solve_c_zero: a must be nonzero")
    if q.c != 0 or q.b == 0:
        raise ValueError("solve_c_zero: requires c == 0 and b != 0")
    if q.is_real:
        x1 = complex(-(q.b.real / q.a.real), 0.0)
    else:
        w = q.b / q.a
        x1 = complex(-w.real, -w.imag)
    if not _is_finite_c(x1) or x1 == 0:
        raise ScalingRangeError("solve_c_zero: b/a out of range")
    return RootPair(x1, complex(0.0, 0.0))


def solve_full(q: Quadratic) -> SolveOutcome:
    """Solve a*x^2 + b*x + c = 0 and report how it was solved.

    Dispatch order: a == 0 is an error; b == 0 and c == 0 are exact fast
    paths on the original coefficients (b tested first); otherwise the monic
    coefficients route to the real scaled form when both computed quotients
    have exactly zero imaginary part, and to the complex form when not.
    """
    if q.a == 0:
        raise DegenerateLeadingCoefficient("solve: a must be nonzero")
    if q.b == 0:
        if q.c == 0:
            return SolveOutcome(RootPair(0j, 0j), CASE_B_ZERO)
        return SolveOutcome(solve_b_zero(q), CASE_B_ZERO)
    if q.c == 0:
        return SolveOutcome(solve_c_zero(q), CASE_C_ZERO)

    m = to_monic(q)
    if m.is_real:
        s: ScaledFormReal | ScaledFormComplex = scale_variable_real(m)
        y1, y2, case = roots_scaled_real(s)
    else:
        s = scale_variable_complex(m)
        y1, y2 = roots_scaled_complex(s)
        case = CASE_COMPLEX
    return SolveOutcome(unscale_roots(y1, y2, s.alpha), case, m, s)


def solve(q: Quadratic) -> RootPair:
    """Roots of a*x^2 + b*x + c = 0, ordered |x1| >= |x2|."""
    return solve_full(q).roots
