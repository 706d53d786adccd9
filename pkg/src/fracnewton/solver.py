"""Fractional Newton iteration, Aitken acceleration, and order estimation.

The iteration is x_{n+1} = x_n - f(x_n)/D^alpha f(x_n) with the order-alpha
derivative replacing the classical one; for non-integer alpha the
derivative of the constant term carries x**(-alpha), which is what lets a
real starting point leave the real axis and reach complex roots. With
alpha=1 the loop is plain Newton-Raphson.
"""

import math
from dataclasses import dataclass
from enum import Enum

from . import _backend
from .errors import (
    DegenerateDifference,
    DerivativeVanished,
    Divergence,
    DomainAlpha,
    InsufficientData,
    InvalidConfig,
)
from .poly import FractionalDerivative, Polynomial

# Errors below this are treated as floating-point floor noise and
# excluded from order estimation.
ERROR_FLOOR = 1e-13


class Termination(Enum):
    CONVERGED = "converged"
    MAX_ITERATIONS = "max_iterations"
    DERIVATIVE_VANISHED = "derivative_vanished"
    DIVERGED = "diverged"


_CODE_TO_TERMINATION = (
    Termination.CONVERGED,
    Termination.MAX_ITERATIONS,
    Termination.DERIVATIVE_VANISHED,
    Termination.DIVERGED,
)


@dataclass(frozen=True)
class SolverConfig:
    """Settings for one solve: order, start point, stops, caps."""

    alpha: float
    x0: complex
    tol_res: float = 1e-10
    tol_step: float = 1e-12
    max_iter: int = 200
    accelerate: bool = True
    eps_div: float = 1e-14

    def __post_init__(self):
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "x0", complex(self.x0))
        if not (math.isfinite(self.alpha) and 0.0 < self.alpha < 2.0):
            raise DomainAlpha(
                f"derivative order {self.alpha!r} outside (0, 2)"
            )
        if not (math.isfinite(self.x0.real) and math.isfinite(self.x0.imag)):
            raise InvalidConfig("x0 must be finite")
        if self.x0 == 0 and self.alpha != math.floor(self.alpha):
            raise InvalidConfig(
                "x0 must be nonzero for non-integer alpha (the constant "
                "term's derivative is singular at 0)"
            )
        for name in ("tol_res", "tol_step", "eps_div"):
            v = float(getattr(self, name))
            object.__setattr__(self, name, v)
            if not (v > 0.0 and math.isfinite(v)):
                raise InvalidConfig(f"{name} must be a positive number")
        if not isinstance(self.max_iter, int) or self.max_iter < 1:
            raise InvalidConfig("max_iter must be an integer >= 1")


@dataclass(frozen=True)
class IterationTrace:
    """Everything one run produced: points, residuals, how it stopped."""

    iterates: tuple
    residuals: tuple
    termination: Termination
    accelerated_steps: tuple


@dataclass(frozen=True)
class RootRecord:
    """One result row: order, root, recomputed residual, cost."""

    alpha: float
    root: complex
    residual_norm: float
    iterations: int
    termination: Termination


def phi_step(p: Polynomial, alpha: float, z, eps_div: float = 1e-14) -> complex:
    """Single update z - f(z)/D^alpha f(z).

    Raises DerivativeVanished when the derivative modulus falls below
    eps_div, SingularPoint at z=0 with fractional alpha, DomainAlpha for
    alpha outside (0, 2).
    """
    alpha = float(alpha)
    if not (math.isfinite(alpha) and 0.0 < alpha < 2.0):
        raise DomainAlpha(f"derivative order {alpha!r} outside (0, 2)")
    z = complex(z)
    d = FractionalDerivative(p, alpha).eval(z)
    if _backend.cmod(d.real, d.imag) < eps_div:
        raise DerivativeVanished(
            f"|D^{alpha} f({z!r})| below eps_div={eps_div:g}"
        )
    return z - p.eval(z) / d


def aitken(x0, x1, x2) -> complex:
    """Delta-squared extrapolation x0 - (x1-x0)**2 / (x2 - 2*x1 + x0).

    Exact on geometric sequences. Raises DegenerateDifference when the
    second difference is too small to divide by; the caller falls back
    to x2.
    """
    x0 = complex(x0)
    x1 = complex(x1)
    x2 = complex(x2)
    den = x2 - 2.0 * x1 + x0
    if _backend.cmod(den.real, den.imag) < _backend.AITKEN_FLOOR:
        raise DegenerateDifference("second difference vanishes")
    return x0 - (x1 - x0) ** 2 / den


def _run(p: Polynomial, cfg: SolverConfig, accelerate: bool) -> IterationTrace:
    if p.degree < 1:
        raise InvalidConfig("solving requires degree >= 1")
    fd = FractionalDerivative(p, cfg.alpha)
    r_hi = min(p._r_hi, fd.r_hi)
    r_lo = fd.r_lo
    x0 = cfg.x0
    rho0 = _backend.cmod(x0.real, x0.imag)
    if rho0 > r_hi or (0.0 < rho0 < r_lo):
        raise Divergence(
            f"|x0|={rho0:.3e} outside the evaluable window "
            f"[{r_lo:.3e}, {r_hi:.3e}]"
        )
    xs, rs, acc, code = _backend.run_newton(
        p._carr, fd._warr, cfg.alpha, x0.real, x0.imag,
        cfg.tol_res, cfg.tol_step, cfg.max_iter, cfg.eps_div,
        accelerate, r_lo, r_hi,
    )
    return IterationTrace(
        iterates=tuple(xs),
        residuals=tuple(rs),
        termination=_CODE_TO_TERMINATION[code],
        accelerated_steps=tuple(acc),
    )


def iterate(p: Polynomial, cfg: SolverConfig) -> IterationTrace:
    """Plain (unaccelerated) iteration, whatever cfg.accelerate says.

    Kept separate so order-estimation experiments always see the raw
    sequence.
    """
    return _run(p, cfg, accelerate=False)


def solve(p: Polynomial, cfg: SolverConfig):
    """Run the iteration and summarize it as (RootRecord, IterationTrace).

    With cfg.accelerate, two base steps are followed by one Aitken
    extrapolation and the loop restarts from the extrapolated point (a
    disjoint-triple Steffensen scheme). The record's residual_norm is
    recomputed from the final iterate, not carried over from the trace.
    """
    trace = _run(p, cfg, accelerate=cfg.accelerate)
    root = trace.iterates[-1]
    record = RootRecord(
        alpha=cfg.alpha,
        root=root,
        residual_norm=abs(p.eval(root)),
        iterations=len(trace.iterates) - 1,
        termination=trace.termination,
    )
    return record, trace


def estimate_order(trace: IterationTrace, root) -> float:
    """Empirical convergence order from a converged trace.

    Fits the slope of log e_{n+1} against log e_n by least squares over
    the trailing strictly-decreasing error window, after dropping
    errors below 1e-13 (floor noise). Raises InsufficientData with fewer
    than 3 usable pairs, a non-converged trace, or fewer than 5 iterates.
    """
    root = complex(root)
    if trace.termination is not Termination.CONVERGED:
        raise InsufficientData("order estimation needs a converged trace")
    if len(trace.iterates) < 5:
        raise InsufficientData("order estimation needs at least 5 iterates")
    errs = [abs(x - root) for x in trace.iterates]
    while errs and errs[-1] < ERROR_FLOOR:
        errs.pop()
    cut = len(errs) - 1
    while cut > 0 and errs[cut - 1] > errs[cut]:
        cut -= 1
    window = errs[cut:]
    if len(window) < 4:
        raise InsufficientData(
            f"only {max(len(window) - 1, 0)} usable error pairs, need 3"
        )
    logs = [math.log(e) for e in window]
    xs = logs[:-1]
    ys = logs[1:]
    n = len(xs)
    mx = math.fsum(xs) / n
    my = math.fsum(ys) / n
    sxy = math.fsum((x - mx) * (y - my) for x, y in zip(xs, ys))
    sxx = math.fsum((x - mx) ** 2 for x in xs)
    return sxy / sxx
