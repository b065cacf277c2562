"""Stability assessment of computed quadratic roots.

Three nested notions, strongest first, all element-wise unless said
otherwise. Write (b_hat, c_hat) for the recomposed coefficients of the
quadratic whose exact roots are the computed pair.

- EBS (element-wise backward stable): b_hat and c_hat each sit within a
  relative delta of b and c. The computed roots then solve a coefficient-wise
  nearby quadratic exactly.
- EMS (element-wise mixed stable): the computed roots sit within delta of the
  exact roots of some coefficient-wise delta-perturbed quadratic. Here the
  witness polynomial is (a, b_hat, c_hat) itself, so the root-space residual
  is measured against the oracle roots of the recomposition.
- NBS (normwise backward stable): the coefficient perturbation is small
  relative to the whole coefficient vector, threshold 3*delta.

EBS implies EMS (same witness polynomial, root residual ~ 0) and EMS implies
NBS with constant 3; assess() measures all three so the implications can be
checked empirically, and ebs_impossibility_search() quantifies how far from
EBS any rounding of the roots must be on a hard sum-dominated instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from mpmath import mp

from .fp import ulp_neighbors
from .oracle import (
    DEFAULT_PRECISION,
    InfiniteRelativeError,
    oracle_roots,
    oracle_roots_from_coeffs,
    recompose,
    rel_error,
    to_extended,
)
from .solver import DegenerateLeadingCoefficient, Quadratic, RootPair

__all__ = [
    "StabilityReport",
    "CounterexampleResult",
    "root_pairing",
    "assess",
    "check_nbs_bound",
    "lemma4_inequality",
    "lemma4_norm_form",
    "count_norm_form_violations",
    "ebs_impossibility_search",
]


@dataclass(frozen=True)
class StabilityReport:
    """Error measurements for one (quadratic, computed roots) pair.

    fwd_err_* are relative distances to the oracle roots of the input;
    sum_backward_err = |b_hat - b|/|b| and prod_backward_err = |c_hat - c|/|c|
    are the element-wise backward errors; ems_fwd_err_* are the relative
    distances to the exact roots of the recomposed quadratic; nbs_ratio is
    ||(0, b - b_hat, c - c_hat)||_2 / ||(a, b_hat, c_hat)||_2. delta records
    the threshold the pass flags were judged at.
    """

    fwd_err_1: float
    fwd_err_2: float
    sum_backward_err: float
    prod_backward_err: float
    ems_fwd_err_1: float
    ems_fwd_err_2: float
    nbs_ratio: float
    delta: float
    ebs_pass: bool
    ems_pass: bool
    nbs_pass: bool


@dataclass(frozen=True)
class CounterexampleResult:
    """Outcome of the grid search over rounded-root perturbations."""

    t: int
    beta: float
    search_radius: int
    min_sum_err: float
    min_prod_err: float
    argmin_offsets: tuple[int, int]


def _rel_or_inf(approx, exact, precision_bits: int) -> float:
    try:
        return rel_error(approx, exact, precision_bits)
    except InfiniteRelativeError:
        return math.inf


def root_pairing(computed, reference, precision_bits: int = DEFAULT_PRECISION):
    """Reorder the reference pair against the computed pair.

    Of the two possible assignments, returns the reference pair in the order
    that minimizes the maximum relative error, so a solver that swapped two
    near-equal roots is not charged an O(1) forward error for the swap.
    """
    c1, c2 = computed
    r1, r2 = reference
    straight = max(_rel_or_inf(c1, r1, precision_bits), _rel_or_inf(c2, r2, precision_bits))
    crossed = max(_rel_or_inf(c1, r2, precision_bits), _rel_or_inf(c2, r1, precision_bits))
    return (r1, r2) if straight <= crossed else (r2, r1)


def assess(
    q: Quadratic,
    roots: RootPair,
    delta: float,
    precision_bits: int = DEFAULT_PRECISION,
) -> StabilityReport:
    """Measure forward, element-wise backward, mixed, and normwise errors.

    Requires a, b, c all nonzero: the backward errors are relative to |b| and
    |c|, and the zero-coefficient solve paths are exact anyway. A zero oracle
    root against a nonzero computed root propagates InfiniteRelativeError.
    """
    if q.a == 0:
        raise DegenerateLeadingCoefficient("assess: a must be nonzero")
    if q.b == 0 or q.c == 0:
        raise ValueError("assess: requires b != 0 and c != 0")
    if not (delta > 0.0 and math.isfinite(delta)):
        raise ValueError("assess: delta must be positive and finite")

    ref1, ref2 = root_pairing(
        (roots.x1, roots.x2), oracle_roots(q, precision_bits), precision_bits
    )
    fwd1 = rel_error(roots.x1, ref1, precision_bits)
    fwd2 = rel_error(roots.x2, ref2, precision_bits)

    b_hat, c_hat = recompose(roots.x1, roots.x2, q.a, precision_bits)
    sum_err = rel_error(b_hat, q.b, precision_bits)
    prod_err = rel_error(c_hat, q.c, precision_bits)

    wit1, wit2 = root_pairing(
        (roots.x1, roots.x2),
        oracle_roots_from_coeffs(q.a, b_hat, c_hat, precision_bits),
        precision_bits,
    )
    ems1 = rel_error(roots.x1, wit1, precision_bits)
    ems2 = rel_error(roots.x2, wit2, precision_bits)

    with mp.workprec(precision_bits):
        bb, cc = to_extended(q.b), to_extended(q.c)
        db, dc = mp.fabs(bb - b_hat), mp.fabs(cc - c_hat)
        num = mp.sqrt(db * db + dc * dc)
        den = mp.sqrt(
            mp.fabs(to_extended(q.a)) ** 2 + mp.fabs(b_hat) ** 2 + mp.fabs(c_hat) ** 2
        )
        nbs = float(num / den)

    ebs = sum_err <= delta and prod_err <= delta
    ems = ebs and max(ems1, ems2) <= delta
    return StabilityReport(
        fwd_err_1=fwd1,
        fwd_err_2=fwd2,
        sum_backward_err=sum_err,
        prod_backward_err=prod_err,
        ems_fwd_err_1=ems1,
        ems_fwd_err_2=ems2,
        nbs_ratio=nbs,
        delta=delta,
        ebs_pass=ebs,
        ems_pass=ems,
        nbs_pass=nbs <= 3.0 * delta,
    )


def check_nbs_bound(q: Quadratic, report: StabilityReport, delta: float) -> bool:
    """True when the normwise ratio honors the 3*delta bound.

    Whenever the report is EMS-stable at delta, this must come back True:
    the numerator of nbs_ratio is built from the same coefficient residuals
    the element-wise check bounded, and the Euclidean norm only shrinks them
    relative to the full coefficient vector.
    """
    if q.a == 0:
        raise DegenerateLeadingCoefficient("check_nbs_bound: a must be nonzero")
    return report.nbs_ratio <= 3.0 * delta


def _exact(x: float) -> Fraction:
    if not math.isfinite(x):
        raise ValueError("lemma inputs must be finite")
    return Fraction(x)


def lemma4_inequality(a: float, b: float, c_param: float) -> bool:
    """(|a|+|b|)^2 + (ab)^2 <= 2c^2 + (a+b)^2 + (1 + 2/c^2)(ab)^2, any c != 0.

    Evaluated in exact rational arithmetic, so the verdict is the
    mathematical truth, equality cases included (ties sit at c^2 = |ab| with
    ab < 0). Holds for every real a, b.
    """
    fc = _exact(c_param)
    if fc == 0:
        raise ValueError("lemma4_inequality: c_param must be nonzero")
    fa, fb = _exact(a), _exact(b)
    p = fa * fb
    lhs = (abs(fa) + abs(fb)) ** 2 + p * p
    rhs = 2 * fc * fc + (fa + fb) ** 2 + (1 + 2 / (fc * fc)) * (p * p)
    return lhs <= rhs


def lemma4_norm_form(a: float, b: float) -> bool:
    """(|a|+|b|)^2 + (ab)^2 <= 3*(1 + (a+b)^2 + (ab)^2), exact arithmetic.

    The c^2 = 3/2 instance of the general inequality. Holds for every real
    pair; the slack never drops below 1.
    """
    fa, fb = _exact(a), _exact(b)
    p = fa * fb
    s = fa + fb
    lhs = (abs(fa) + abs(fb)) ** 2 + p * p
    rhs = 3 * (1 + s * s + p * p)
    return lhs <= rhs


def count_norm_form_violations(a_values, b_values) -> int:
    """Vectorized sweep of lemma4_norm_form; returns how many pairs violate.

    Runs in 80-bit extended precision. That is sound here: over the reals
    the slack rhs - lhs equals 3 + 2s^2 + 2p^2 + 2p - 2|p| >= 1, which is at
    least rhs/6, while the evaluation error of these few operations stays
    below ~20 units in 2**-64 relative. No rounding can flip a verdict, so a
    nonzero count is a genuine counterexample (and the exact scalar check
    above will confirm it).
    """
    a = np.asarray(a_values, dtype=np.longdouble)
    b = np.asarray(b_values, dtype=np.longdouble)
    if a.shape != b.shape:
        raise ValueError("count_norm_form_violations: shape mismatch")
    p = a * b
    s = a + b
    lhs = (np.abs(a) + np.abs(b)) ** 2 + p * p
    rhs = 3.0 * (1.0 + s * s + p * p)
    return int(np.count_nonzero(lhs > rhs))


def ebs_impossibility_search(t: int = 27, radius: int = 100) -> CounterexampleResult:
    """Exhaustive search for an EBS-compatible rounding of the roots of
    y^2 - 2*beta*y - 1 with beta = 2**-t + 2**-2t.

    The correctly rounded roots y1_hat, y2_hat are perturbed by every offset
    pair (i, j) with |i|, |j| <= radius ulps, and the element-wise backward
    errors of each candidate pair are evaluated in exact rational arithmetic:
    sum error |u1 + u2 - 2*beta| / (2*beta), product error |u1*u2 + 1|.
    min_sum_err is the grid minimum of the sum error; min_prod_err is the
    (independent) grid minimum of the product error. argmin_offsets reports
    the first sum-error minimizer in row-major scan order (i ascending, then
    j ascending).

    t >= 27 keeps the 2**-2t term of beta at or below half an ulp of the
    unit-magnitude roots, which is what makes the sum so hard to match from
    the root grid. Radius 0 measures the correctly rounded pair itself.
    """
    if not isinstance(t, int) or isinstance(t, bool):
        raise ValueError("ebs_impossibility_search: t must be an integer")
    if t < 27:
        raise ValueError("ebs_impossibility_search: t must be >= 27")
    if not isinstance(radius, int) or isinstance(radius, bool):
        raise ValueError("ebs_impossibility_search: radius must be an integer")
    if radius < 0:
        raise ValueError("ebs_impossibility_search: radius must be >= 0")

    beta = 2.0 ** (-t) + 2.0 ** (-2 * t)
    with mp.workprec(220):
        yb = to_extended(beta)
        root = mp.sqrt(yb * yb + 1)
        y1_hat = float(yb + root)
        y2_hat = float(yb - root)

    offsets = range(-radius, radius + 1)
    grid1 = [Fraction(ulp_neighbors(y1_hat, i)) for i in offsets]
    grid2 = [Fraction(ulp_neighbors(y2_hat, j)) for j in offsets]

    target_sum = 2 * Fraction(beta)
    best_sum: Fraction | None = None
    best_prod: Fraction | None = None
    arg = (0, 0)
    for i, u1 in zip(offsets, grid1):
        for j, u2 in zip(offsets, grid2):
            serr = abs(u1 + u2 - target_sum) / target_sum
            if best_sum is None or serr < best_sum:
                best_sum = serr
                arg = (i, j)
            perr = abs(u1 * u2 + 1)
            if best_prod is None or perr < best_prod:
                best_prod = perr
    assert best_sum is not None and best_prod is not None
    return CounterexampleResult(
        t=t,
        beta=beta,
        search_radius=radius,
        min_sum_err=float(best_sum),
        min_prod_err=float(best_prod),
        argmin_offsets=arg,
    )
