"""quadstab: scalar quadratic roots with element-wise stability reporting.

The solver (solve, solve_full) computes both roots of a*x^2 + b*x + c = 0
for real or complex coefficients through a scaled variable that keeps every
intermediate quantity O(1), with dedicated exact paths for b == 0 and c == 0.
The bench (assess, run_experiment) measures forward errors against an
extended-precision oracle and element-wise/normwise backward errors, and
ebs_impossibility_search demonstrates the regime where no rounding of the
roots is element-wise backward stable.
"""

from .fp import U, complex_phase, gamma_n, real_sign, ulp_neighbors, unit_roundoff
from .solver import (
    ALL_CASES,
    CASE_B_ZERO,
    CASE_C_ZERO,
    CASE_COMPLEX,
    CASE_REAL_1,
    CASE_REAL_2,
    CASE_REAL_3,
    DegenerateLeadingCoefficient,
    MonicQuadratic,
    Quadratic,
    RootPair,
    ScaledFormComplex,
    ScaledFormReal,
    ScalingRangeError,
    SolveOutcome,
    roots_scaled_complex,
    roots_scaled_real,
    scale_variable_complex,
    scale_variable_real,
    solve,
    solve_b_zero,
    solve_c_zero,
    solve_full,
    to_monic,
    unscale_roots,
)
from .oracle import (
    DEFAULT_PRECISION,
    MIN_PRECISION,
    InfiniteRelativeError,
    oracle_roots,
    oracle_roots_from_coeffs,
    recompose,
    rel_error,
    to_extended,
)
from .stability import (
    CounterexampleResult,
    StabilityReport,
    assess,
    check_nbs_bound,
    count_norm_form_violations,
    ebs_impossibility_search,
    lemma4_inequality,
    lemma4_norm_form,
    root_pairing,
)
from .experiments import (
    ALL_SETS,
    CSV_COLUMNS,
    DEFAULT_DELTA,
    SET_COMPLEX_RANDOM,
    SET_REAL_RANDOM,
    SET_SMALL_SUM,
    SMALL_SUM_FLOOR,
    ExperimentConfig,
    ExperimentResult,
    TrialRecord,
    csv_text,
    gen_complex_random,
    gen_real_random,
    gen_small_sum,
    run_experiment,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "U",
    "unit_roundoff",
    "gamma_n",
    "real_sign",
    "complex_phase",
    "ulp_neighbors",
    "ALL_CASES",
    "CASE_C_ZERO",
    "CASE_B_ZERO",
    "CASE_REAL_1",
    "CASE_REAL_2",
    "CASE_REAL_3",
    "CASE_COMPLEX",
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
    "DEFAULT_PRECISION",
    "MIN_PRECISION",
    "InfiniteRelativeError",
    "to_extended",
    "oracle_roots",
    "oracle_roots_from_coeffs",
    "recompose",
    "rel_error",
    "StabilityReport",
    "CounterexampleResult",
    "root_pairing",
    "assess",
    "check_nbs_bound",
    "lemma4_inequality",
    "lemma4_norm_form",
    "count_norm_form_violations",
    "ebs_impossibility_search",
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
