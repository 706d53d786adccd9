"""Alpha-grid orchestration: many solves from one start point.

Different derivative orders land on different roots, so sweeping alpha
from a single real x0 recovers much of the root set. The report keeps
every converged run as a row and clusters the roots into distinct ones.
"""

import math
from dataclasses import dataclass

from .errors import Divergence, InvalidConfig
from .poly import Polynomial
from .solver import SolverConfig, Termination, solve


@dataclass(frozen=True)
class SweepConfig:
    """Grid bounds plus the solver settings applied at every alpha."""

    x0: complex
    alpha_min: float = 0.7
    alpha_max: float = 1.3
    alpha_step: float = 0.0005
    dedup_eps: float = 1e-4
    tol_res: float = 1e-10
    tol_step: float = 1e-12
    max_iter: int = 200
    accelerate: bool = True
    eps_div: float = 1e-14

    def __post_init__(self):
        object.__setattr__(self, "x0", complex(self.x0))
        for name in ("alpha_min", "alpha_max", "alpha_step", "dedup_eps",
                     "tol_res", "tol_step", "eps_div"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not (0.0 < self.alpha_min < self.alpha_max < 2.0):
            raise InvalidConfig(
                "need 0 < alpha_min < alpha_max < 2, got "
                f"[{self.alpha_min!r}, {self.alpha_max!r}]"
            )
        if not (self.alpha_step > 0.0 and math.isfinite(self.alpha_step)):
            raise InvalidConfig("alpha_step must be a positive number")
        if not (self.dedup_eps > 0.0 and math.isfinite(self.dedup_eps)):
            raise InvalidConfig("dedup_eps must be a positive number")
        if not (math.isfinite(self.x0.real) and math.isfinite(self.x0.imag)):
            raise InvalidConfig("x0 must be finite")
        if self.x0 == 0:
            raise InvalidConfig("x0 must be nonzero; the grid crosses "
                                "fractional orders")
        if not isinstance(self.max_iter, int) or self.max_iter < 1:
            raise InvalidConfig("max_iter must be an integer >= 1")


@dataclass(frozen=True)
class DistinctRoot:
    """A clustered root with its discovery count and best residual."""

    root: complex
    multiplicity: int
    best_residual: float


@dataclass(frozen=True)
class SweepReport:
    """All converged rows, the clustered distinct roots, failure count."""

    records: tuple
    distinct_roots: tuple
    failures: int


def alpha_grid(alpha_min: float, alpha_max: float, alpha_step: float) -> list:
    """Inclusive arithmetic grid, rounded to 12 decimals.

    The rounding pins values like 0.7 + 887*0.0005 to exactly 1.1435, so
    a sweep value and the same alpha typed literally solve identically.
    """
    out = []
    k = 0
    while True:
        v = round(alpha_min + k * alpha_step, 12)
        if v > alpha_max + 1e-12:
            return out
        out.append(v)
        k += 1


def cluster_roots(records, eps: float):
    """Greedy clustering of record roots in discovery order.

    A root joins the first cluster whose representative lies within eps
    in both components; the representative is the member with smallest
    residual_norm.
    """
    if not eps > 0.0:
        raise InvalidConfig("eps must be positive")
    reps = []   # [root, best_residual, count]
    for rec in records:
        r = rec.root
        for cl in reps:
            if (abs(r.real - cl[0].real) <= eps
                    and abs(r.imag - cl[0].imag) <= eps):
                cl[2] += 1
                if rec.residual_norm < cl[1]:
                    cl[0] = r
                    cl[1] = rec.residual_norm
                break
        else:
            reps.append([r, rec.residual_norm, 1])
    return tuple(DistinctRoot(root=c[0], multiplicity=c[2], best_residual=c[1])
                 for c in reps)


def run_sweep(p: Polynomial, cfg: SweepConfig) -> SweepReport:
    """One solve per grid alpha; converged runs become records.

    Non-convergence at a grid point is a counted outcome, not an error.
    Distinct roots keep only clusters whose best residual meets tol_res,
    so a run that stalled on a plateau (step converged, residual large)
    cannot put a false root in the summary.
    """
    if p.degree < 1:
        raise InvalidConfig("sweeping requires degree >= 1")
    records = []
    failures = 0
    for alpha in alpha_grid(cfg.alpha_min, cfg.alpha_max, cfg.alpha_step):
        scfg = SolverConfig(
            alpha=alpha,
            x0=cfg.x0,
            tol_res=cfg.tol_res,
            tol_step=cfg.tol_step,
            max_iter=cfg.max_iter,
            accelerate=cfg.accelerate,
            eps_div=cfg.eps_div,
        )
        try:
            rec, _ = solve(p, scfg)
        except Divergence:
            failures += 1
            continue
        if rec.termination is Termination.CONVERGED:
            records.append(rec)
        else:
            failures += 1
    clusters = cluster_roots(records, cfg.dedup_eps)
    distinct = tuple(c for c in clusters if c.best_residual <= cfg.tol_res)
    return SweepReport(
        records=tuple(records),
        distinct_roots=distinct,
        failures=failures,
    )


def unpaired_conjugates(distinct_roots, eps: float) -> tuple:
    """Non-real distinct roots whose conjugate partner was not found.

    For a real-coefficient polynomial every non-real root should appear
    with its mirror; anything returned here is a reportable gap in the
    sweep's coverage.
    """
    roots = [getattr(d, "root", d) for d in distinct_roots]
    missing = []
    for r in roots:
        if abs(r.imag) <= eps:
            continue
        if not any(abs(o.real - r.real) <= eps
                   and abs(o.imag + r.imag) <= eps for o in roots):
            missing.append(r)
    return tuple(missing)
