"""Polynomial representation and its derivatives, classical and fractional.

Coefficients are stored ascending by power (coeffs[m] multiplies x**m),
so the storage index is the monomial exponent. The fractional derivative
of order alpha maps each monomial c*x**m to
c * Gamma(m+1)/Gamma(m-alpha+1) * x**(m-alpha); routing the coefficient
through rgamma makes Gamma-poles produce a zero term instead of an
error, which at alpha=1 exactly recovers the classical derivative.
"""

import math
from array import array
from dataclasses import dataclass

from . import _backend
from .errors import (
    DegenerateLeadingCoefficient,
    Divergence,
    DomainAlpha,
    InvalidConfig,
    SingularPoint,
)
from .specialfn import rgamma

# Any single term whose magnitude would exceed this makes the evaluation
# report Divergence instead of returning inf/nan.
OVERFLOW_LIMIT = 1e300
_LOG_LIMIT = math.log(OVERFLOW_LIMIT)


def _term_radius(coeffs):
    # Largest |z| at which every |c_m * z**m| stays within the overflow
    # budget (m >= 1; the constant term cannot overflow on its own).
    r = math.inf
    for m in range(1, len(coeffs)):
        cm = abs(coeffs[m])
        if cm > 0.0:
            r = min(r, math.exp((_LOG_LIMIT - math.log(cm)) / m))
    return r


@dataclass(frozen=True, init=False)
class Polynomial:
    """Real-coefficient polynomial, coefficients ascending by power."""

    coeffs: tuple

    def __init__(self, coeffs):
        cs = tuple(float(c) for c in coeffs)
        if not cs:
            raise InvalidConfig("a polynomial needs at least one coefficient")
        if any(not math.isfinite(c) for c in cs):
            raise InvalidConfig("polynomial coefficients must be finite")
        if len(cs) > 1 and cs[-1] == 0.0:
            raise DegenerateLeadingCoefficient(
                "highest-power coefficient is zero; drop the trailing zeros"
            )
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "_carr", array("d", cs))
        object.__setattr__(self, "_r_hi", _term_radius(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval(self, z) -> complex:
        """Horner evaluation at a complex point.

        Raises Divergence when |z| is large enough that a term would
        overflow; escaped iterates are reported, not propagated as inf.
        """
        z = complex(z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise Divergence("polynomial evaluated at a non-finite point")
        if _backend.cmod(z.real, z.imag) > self._r_hi:
            raise Divergence(f"|z|={abs(z):.3e} exceeds the overflow radius")
        re, im = _backend.eval_poly(self._carr, z.real, z.imag)
        return complex(re, im)

    def derivative(self) -> "Polynomial":
        """Classical first derivative; degree max(n-1, 0)."""
        if len(self.coeffs) == 1:
            return Polynomial((0.0,))
        return Polynomial(
            tuple(m * c for m, c in enumerate(self.coeffs) if m > 0)
        )


class FractionalDerivative:
    """Evaluator for the order-alpha derivative of a fixed polynomial.

    Precomputes the per-monomial weights c_m * Gamma(m+1) * rgamma(m-alpha+1)
    once, since a sweep evaluates the same (polynomial, alpha) pair at
    many points. alpha is accepted on [0, 2): the open upper end matches
    the iteration's domain, alpha=0 is the identity and alpha=1 the
    classical derivative (both needed by the derivative-table command).
    """

    def __init__(self, p: Polynomial, alpha: float):
        alpha = float(alpha)
        if not (0.0 <= alpha < 2.0) or not math.isfinite(alpha):
            raise DomainAlpha(
                f"derivative order {alpha!r} outside [0, 2)"
            )
        self.poly = p
        self.alpha = alpha
        self.weights = tuple(
            c * math.factorial(m) * rgamma(m - alpha + 1.0)
            for m, c in enumerate(p.coeffs)
        )
        self._warr = array("d", self.weights)
        self._integral = alpha == math.floor(alpha)
        # Factored evaluation z**(-alpha) * Horner(weights, z): the
        # positive-power half is safe inside r_hi, the z**(-alpha)
        # factor inside r_lo. Between the two every partial stays below
        # OVERFLOW_LIMIT.
        wsum = sum(abs(w) for w in self.weights)
        self.r_hi = _term_radius(self.weights)
        self.r_lo = 0.0 if alpha == 0.0 else (wsum / OVERFLOW_LIMIT) ** (1.0 / alpha)

    def eval(self, z) -> complex:
        """Value at a complex point on the principal branch.

        Raises SingularPoint at z=0 with fractional alpha (the constant
        term carries z**(-alpha)), Divergence outside the safe radius
        window.
        """
        z = complex(z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise Divergence("fractional derivative at a non-finite point")
        if z == 0:
            if self._integral:
                return complex(self.weights[int(self.alpha)], 0.0)
            raise SingularPoint(
                f"order-{self.alpha} derivative undefined at z=0"
            )
        rho = _backend.cmod(z.real, z.imag)
        if rho > self.r_hi:
            raise Divergence(f"|z|={rho:.3e} exceeds the overflow radius")
        if rho < self.r_lo:
            raise Divergence(
                f"|z|={rho:.3e} inside the z**(-alpha) overflow radius"
            )
        re, im = _backend.frac_eval(self._warr, self.alpha, z.real, z.imag)
        return complex(re, im)

    __call__ = eval


def frac_derivative_eval(p: Polynomial, alpha: float, z) -> complex:
    """One-off fractional derivative value; see FractionalDerivative."""
    return FractionalDerivative(p, alpha).eval(z)


@dataclass(frozen=True)
class TableRow:
    """One (alpha, z) grid cell; error carries the failure name if any."""

    alpha: float
    z: float
    value: complex | None
    error: str | None = None


def frac_derivative_table(p: Polynomial, alphas, zs) -> list:
    """Evaluate the fractional derivative over a (alpha, z) grid.

    Rows are ordered by (alpha, z). A cell whose evaluation fails gets
    the error name in the row instead of aborting the whole table.
    """
    rows = []
    for alpha in sorted(float(a) for a in alphas):
        try:
            d = FractionalDerivative(p, alpha)
        except DomainAlpha as exc:
            for z in sorted(float(z) for z in zs):
                rows.append(TableRow(alpha, z, None, type(exc).__name__))
            continue
        for z in sorted(float(z) for z in zs):
            try:
                rows.append(TableRow(alpha, z, d.eval(z)))
            except (SingularPoint, Divergence) as exc:
                rows.append(TableRow(alpha, z, None, type(exc).__name__))
    return rows
