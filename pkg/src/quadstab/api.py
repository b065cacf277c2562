"""HTTP service exposing the solver and the stability bench.

Domain validation failures (a == 0, unknown set, t < 27, zero coefficients
where nonzero ones are required) map to 422; finite-range failures during
computation (overflowing monic or scaled forms, undefined relative errors)
map to 400.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .experiments import ExperimentConfig, ExperimentResult, csv_text, run_experiment
from .fp import U
from .oracle import InfiniteRelativeError
from .solver import (
    DegenerateLeadingCoefficient,
    Quadratic,
    ScaledFormReal,
    ScalingRangeError,
    solve_full,
)
from .stability import assess, ebs_impossibility_search

__all__ = ["app"]

app = FastAPI(
    title="quadstab",
    version="0.1.0",
    description="Scalar quadratic roots with element-wise stability reporting",
)


class ComplexValue(BaseModel):
    re: float = 0.0
    im: float = 0.0

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    @classmethod
    def of(cls, z: complex) -> "ComplexValue":
        z = complex(z)
        return cls(re=z.real, im=z.imag)


class SolveRequest(BaseModel):
    a: ComplexValue
    b: ComplexValue
    c: ComplexValue
    diagnostics: bool = False


class Diagnostics(BaseModel):
    alpha: ComplexValue
    beta: float
    e: float | None = None
    f: ComplexValue | None = None


class SolveResponse(BaseModel):
    x1: ComplexValue
    x2: ComplexValue
    case: str
    diagnostics: Diagnostics | None = None


class CheckRequest(BaseModel):
    a: ComplexValue
    b: ComplexValue
    c: ComplexValue
    delta_ulps: float = Field(default=64.0, gt=0)


class CheckResponse(BaseModel):
    x1: ComplexValue
    x2: ComplexValue
    case: str
    delta: float
    fwd_err_1: float
    fwd_err_2: float
    sum_backward_err: float
    prod_backward_err: float
    ems_fwd_err_1: float
    ems_fwd_err_2: float
    nbs_ratio: float
    ebs_pass: bool
    ems_pass: bool
    nbs_pass: bool


class ExperimentRequest(BaseModel):
    set: str
    n_trials: int = Field(default=1000, ge=1, le=100_000)
    seed: int = 0
    delta_ulps: float = Field(default=64.0, gt=0)
    include_csv: bool = False


class ExperimentResponse(BaseModel):
    passed: bool
    summary: dict[str, float]
    csv: str | None = None


class CounterexampleRequest(BaseModel):
    t: int = 27
    radius: int = Field(default=100, ge=0, le=1000)


class CounterexampleResponse(BaseModel):
    t: int
    beta: float
    search_radius: int
    min_sum_err: float
    min_sum_err_ulps: float
    min_prod_err: float
    min_prod_err_ulps: float
    argmin_i: int
    argmin_j: int


def _quadratic(a: ComplexValue, b: ComplexValue, c: ComplexValue) -> Quadratic:
    return Quadratic(a.to_complex(), b.to_complex(), c.to_complex())


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok", "version": app.version}


@app.post("/solve", response_model=SolveResponse)
def post_solve(req: SolveRequest) -> SolveResponse:
    try:
        outcome = solve_full(_quadratic(req.a, req.b, req.c))
    except (DegenerateLeadingCoefficient, ValueError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except ScalingRangeError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    diag = None
    if req.diagnostics and outcome.scaled is not None:
        s = outcome.scaled
        if isinstance(s, ScaledFormReal):
            diag = Diagnostics(
                alpha=ComplexValue(re=s.alpha), beta=s.beta, e=s.e
            )
        else:
            diag = Diagnostics(
                alpha=ComplexValue.of(s.alpha), beta=s.beta, f=ComplexValue.of(s.f)
            )
    return SolveResponse(
        x1=ComplexValue.of(outcome.roots.x1),
        x2=ComplexValue.of(outcome.roots.x2),
        case=outcome.case,
        diagnostics=diag,
    )


@app.post("/check", response_model=CheckResponse)
def post_check(req: CheckRequest) -> CheckResponse:
    delta = req.delta_ulps * U
    try:
        q = _quadratic(req.a, req.b, req.c)
        outcome = solve_full(q)
        report = assess(q, outcome.roots, delta)
    except (DegenerateLeadingCoefficient, ValueError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except (ScalingRangeError, InfiniteRelativeError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return CheckResponse(
        x1=ComplexValue.of(outcome.roots.x1),
        x2=ComplexValue.of(outcome.roots.x2),
        case=outcome.case,
        delta=delta,
        fwd_err_1=report.fwd_err_1,
        fwd_err_2=report.fwd_err_2,
        sum_backward_err=report.sum_backward_err,
        prod_backward_err=report.prod_backward_err,
        ems_fwd_err_1=report.ems_fwd_err_1,
        ems_fwd_err_2=report.ems_fwd_err_2,
        nbs_ratio=report.nbs_ratio,
        ebs_pass=report.ebs_pass,
        ems_pass=report.ems_pass,
        nbs_pass=report.nbs_pass,
    )


@app.post("/experiment", response_model=ExperimentResponse)
def post_experiment(req: ExperimentRequest) -> ExperimentResponse:
    try:
        cfg = ExperimentConfig(
            set=req.set,
            n_trials=req.n_trials,
            seed=req.seed,
            delta_threshold=req.delta_ulps * U,
        )
        result: ExperimentResult = run_experiment(cfg)
    except (DegenerateLeadingCoefficient, ValueError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except (ScalingRangeError, InfiniteRelativeError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return ExperimentResponse(
        passed=result.passed,
        summary=result.summary,
        csv=csv_text(result) if req.include_csv else None,
    )


@app.post("/counterexample", response_model=CounterexampleResponse)
def post_counterexample(req: CounterexampleRequest) -> CounterexampleResponse:
    try:
        res = ebs_impossibility_search(t=req.t, radius=req.radius)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return CounterexampleResponse(
        t=res.t,
        beta=res.beta,
        search_radius=res.search_radius,
        min_sum_err=res.min_sum_err,
        min_sum_err_ulps=res.min_sum_err / U,
        min_prod_err=res.min_prod_err,
        min_prod_err_ulps=res.min_prod_err / U,
        argmin_i=res.argmin_offsets[0],
        argmin_j=res.argmin_offsets[1],
    )
