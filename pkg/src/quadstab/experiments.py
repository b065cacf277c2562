"""Randomized trial corpora and the experiment driver.

Determinism contract: every generator is a pure function of (seed, n). Draws
come from numpy's default_rng (PCG64) sequentially, one trial at a time, in
the documented per-trial order, so a given (set, seed, n) always produces the
same coefficients, the same roots, and byte-identical CSV output.
"""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass

import numpy as np

from .fp import U
from .solver import Quadratic, solve_full
from .stability import assess

__all__ = [
    "SET_REAL_RANDOM",
    "SET_COMPLEX_RANDOM",
    "SET_SMALL_SUM",
    "ALL_SETS",
    "DEFAULT_DELTA",
    "SMALL_SUM_FLOOR",
    "CSV_COLUMNS",
    "ExperimentConfig",
    "TrialRecord",
    "ExperimentResult",
    "gen_real_random",
    "gen_complex_random",
    "gen_small_sum",
    "run_experiment",
    "csv_text",
]

SET_REAL_RANDOM = "RealRandom"
SET_COMPLEX_RANDOM = "ComplexRandom"
SET_SMALL_SUM = "SmallSum"
ALL_SETS = (SET_REAL_RANDOM, SET_COMPLEX_RANDOM, SET_SMALL_SUM)

DEFAULT_DELTA = 64.0 * U

# The small-sum set must exhibit a large sum backward error somewhere:
# the pass predicate demands max sum_backward_err >= sqrt(u)/64.
SMALL_SUM_FLOOR = math.sqrt(U) / 64.0

CSV_COLUMNS = (
    "trial",
    "a_re",
    "a_im",
    "b_re",
    "b_im",
    "c_re",
    "c_im",
    "x1_re",
    "x1_im",
    "x2_re",
    "x2_im",
    "fwd_err_1",
    "fwd_err_2",
    "sum_backward_err",
    "prod_backward_err",
    "nbs_ratio",
    "case_tag",
)


@dataclass(frozen=True)
class ExperimentConfig:
    """Parameters of one experiment run.

    set: corpus name, one of ALL_SETS. delta_threshold is the absolute
    relative-error threshold (already multiplied out from ulps).
    """

    set: str
    n_trials: int = 1000
    seed: int = 0
    delta_threshold: float = DEFAULT_DELTA
    output_path: str | None = None

    def __post_init__(self) -> None:
        if self.set not in ALL_SETS:
            raise ValueError(f"ExperimentConfig: unknown set {self.set!r}")
        if not isinstance(self.n_trials, int) or self.n_trials < 1:
            raise ValueError("ExperimentConfig: n_trials must be a positive integer")
        if not (self.delta_threshold > 0.0 and math.isfinite(self.delta_threshold)):
            raise ValueError("ExperimentConfig: delta_threshold must be positive")


@dataclass(frozen=True)
class TrialRecord:
    """One solved trial with its error measurements."""

    trial: int
    a: complex
    b: complex
    c: complex
    x1: complex
    x2: complex
    fwd_err_1: float
    fwd_err_2: float
    sum_backward_err: float
    prod_backward_err: float
    nbs_ratio: float
    case_tag: str

    def csv_row(self) -> list[str]:
        return [
            str(self.trial),
            repr(self.a.real),
            repr(self.a.imag),
            repr(self.b.real),
            repr(self.b.imag),
            repr(self.c.real),
            repr(self.c.imag),
            repr(self.x1.real),
            repr(self.x1.imag),
            repr(self.x2.real),
            repr(self.x2.imag),
            repr(self.fwd_err_1),
            repr(self.fwd_err_2),
            repr(self.sum_backward_err),
            repr(self.prod_backward_err),
            repr(self.nbs_ratio),
            self.case_tag,
        ]


@dataclass(frozen=True)
class ExperimentResult:
    config: ExperimentConfig
    records: tuple[TrialRecord, ...]
    summary: dict[str, float]
    passed: bool


def _nonzero_normal(rng) -> float:
    x = float(rng.standard_normal())
    while x == 0.0:
        x = float(rng.standard_normal())
    return x


def _nonzero_complex_normal(rng) -> complex:
    while True:
        re = float(rng.standard_normal())
        im = float(rng.standard_normal())
        if re != 0.0 or im != 0.0:
            return complex(re, im)


def gen_real_random(seed: int, n: int) -> list[Quadratic]:
    """n real quadratics, coefficients iid standard normal.

    Per trial the draw order is a, b, c; a draw of exactly 0.0 is redrawn so
    every coefficient is nonzero.
    """
    rng = np.random.default_rng(seed)
    return [
        Quadratic(_nonzero_normal(rng), _nonzero_normal(rng), _nonzero_normal(rng))
        for _ in range(n)
    ]


def gen_complex_random(seed: int, n: int) -> list[Quadratic]:
    """n complex quadratics, all six components iid standard normal.

    Per trial the draw order is a, b, c, real part before imaginary part.
    A coefficient whose two components are both exactly 0.0 is redrawn.
    """
    rng = np.random.default_rng(seed)
    return [
        Quadratic(
            _nonzero_complex_normal(rng),
            _nonzero_complex_normal(rng),
            _nonzero_complex_normal(rng),
        )
        for _ in range(n)
    ]


def gen_small_sum(seed: int, n: int) -> list[Quadratic]:
    """n monic quadratics x^2 - 2*beta*x - 1 with tiny root sum.

    beta = fl(sqrt(u) * m * 2**g) with g uniform on {-2..2} (drawn first) and
    m uniform on [0.5, 1), so beta ranges over [2**-29.5, 2**-24.5). b = -2*beta
    is exact, and the roots sit near +-1 with sum 2*beta far below their own
    ulp scale: the regime where no rounding of the roots can represent the
    sum accurately.
    """
    rng = np.random.default_rng(seed)
    sqrt_u = math.sqrt(U)
    out = []
    for _ in range(n):
        g = int(rng.integers(-2, 3))
        m = float(rng.uniform(0.5, 1.0))
        beta = sqrt_u * math.ldexp(m, g)
        out.append(Quadratic(1.0, -2.0 * beta, -1.0))
    return out


_GENERATORS = {
    SET_REAL_RANDOM: gen_real_random,
    SET_COMPLEX_RANDOM: gen_complex_random,
    SET_SMALL_SUM: gen_small_sum,
}

_ERROR_COLUMNS = (
    "fwd_err_1",
    "fwd_err_2",
    "sum_backward_err",
    "prod_backward_err",
    "nbs_ratio",
)


def _summarize(records, delta: float, elapsed: float) -> dict[str, float]:
    summary: dict[str, float] = {"n_trials": float(len(records))}
    for name in _ERROR_COLUMNS:
        values = [getattr(r, name) for r in records]
        summary[f"max_{name}"] = max(values)
        summary[f"median_{name}"] = float(statistics.median(values))
    summary["n_exceed_fwd"] = float(
        sum(1 for r in records if max(r.fwd_err_1, r.fwd_err_2) > delta)
    )
    summary["n_exceed_sum"] = float(
        sum(1 for r in records if r.sum_backward_err > delta)
    )
    summary["n_exceed_prod"] = float(
        sum(1 for r in records if r.prod_backward_err > delta)
    )
    summary["n_exceed_nbs"] = float(
        sum(1 for r in records if r.nbs_ratio > 3.0 * delta)
    )
    summary["elapsed_seconds"] = elapsed
    return summary


def _passed(cfg: ExperimentConfig, summary: dict[str, float]) -> bool:
    max_sum = summary["max_sum_backward_err"]
    max_prod = summary["max_prod_backward_err"]
    if cfg.set == SET_SMALL_SUM:
        # The hard corpus must stay element-wise stable in the product while
        # provably failing to be so in the sum.
        return max_prod <= cfg.delta_threshold and max_sum >= SMALL_SUM_FLOOR
    return max_sum <= cfg.delta_threshold and max_prod <= cfg.delta_threshold


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    """Generate the corpus, solve every trial, assess, and summarize.

    Writes CSV to cfg.output_path when set. The summary holds max and median
    of each error column, threshold exceedance counts (nbs counted against
    3*delta), trial count, and wall-clock seconds.
    """
    start = time.perf_counter()
    quads = _GENERATORS[cfg.set](cfg.seed, cfg.n_trials)
    records = []
    for idx, q in enumerate(quads):
        outcome = solve_full(q)
        report = assess(q, outcome.roots, cfg.delta_threshold)
        records.append(
            TrialRecord(
                trial=idx,
                a=q.a,
                b=q.b,
                c=q.c,
                x1=outcome.roots.x1,
                x2=outcome.roots.x2,
                fwd_err_1=report.fwd_err_1,
                fwd_err_2=report.fwd_err_2,
                sum_backward_err=report.sum_backward_err,
                prod_backward_err=report.prod_backward_err,
                nbs_ratio=report.nbs_ratio,
                case_tag=outcome.case,
            )
        )
    elapsed = time.perf_counter() - start
    summary = _summarize(records, cfg.delta_threshold, elapsed)
    result = ExperimentResult(cfg, tuple(records), summary, _passed(cfg, summary))
    if cfg.output_path is not None:
        with open(cfg.output_path, "w", newline="") as fh:
            fh.write(csv_text(result))
    return result


def csv_text(result: ExperimentResult) -> str:
    """Render a result as CSV: one comment line with the run parameters,
    the header row, then one row per trial. repr() float formatting keeps
    the output byte-identical across runs and round-trippable."""
    cfg = result.config
    lines = [
        f"# quadstab experiment set={cfg.set} n={cfg.n_trials} seed={cfg.seed}"
        f" delta={cfg.delta_threshold!r} u={U!r}",
        ",".join(CSV_COLUMNS),
    ]
    lines.extend(",".join(r.csv_row()) for r in result.records)
    return "\n".join(lines) + "\n"
