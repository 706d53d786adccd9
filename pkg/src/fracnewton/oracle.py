"""Independent all-roots finder used to cross-check the solver.

Weierstrass (Durand-Kerner) simultaneous iteration shares nothing with
the fractional Newton machinery: no special functions, no fractional
powers, no acceleration. Agreement between the two is therefore real
evidence rather than a shared bug.
"""

import math
from dataclasses import dataclass

from ._backend import cmod
from .errors import Divergence, InvalidConfig
from .poly import Polynomial


@dataclass(frozen=True)
class OracleResult:
    roots: tuple
    max_residual: float
    converged: bool


def _horner(c, z):
    b = complex(c[-1])
    for m in range(len(c) - 2, -1, -1):
        b = b * z + c[m]
    return b


def durand_kerner(p: Polynomial, tol: float = 1e-10,
                  max_iter: int = 500) -> OracleResult:
    """All complex roots of p by simultaneous Weierstrass updates.

    Works on the monic rescale of p, seeds the ring (0.4+0.9j)**k, and
    stops when the largest update falls to tol. Roots come back sorted
    by (real, imag); max_residual is measured against the original p.
    """
    if p.degree < 1:
        raise InvalidConfig("root finding requires degree >= 1")
    if not (tol > 0.0 and math.isfinite(tol)):
        raise InvalidConfig("tol must be a positive number")
    if not isinstance(max_iter, int) or max_iter < 1:
        raise InvalidConfig("max_iter must be an integer >= 1")
    lead = p.coeffs[-1]
    monic = [c / lead for c in p.coeffs]
    n = p.degree
    zs = [(0.4 + 0.9j) ** k for k in range(n)]
    converged = False
    for _ in range(max_iter):
        worst = 0.0
        new = []
        for i in range(n):
            den = 1.0 + 0.0j
            for j in range(n):
                if j != i:
                    den *= zs[i] - zs[j]
            if den == 0:
                # collided points cannot be separated this round
                new.append(zs[i])
                worst = math.inf
                continue
            w = _horner(monic, zs[i]) / den
            new.append(zs[i] - w)
            step = cmod(w.real, w.imag)
            if step > worst:
                worst = step
        zs = new
        if worst <= tol:
            converged = True
            break
    zs.sort(key=lambda z: (z.real, z.imag))
    max_residual = 0.0
    for z in zs:
        try:
            r = abs(p.eval(z))
        except Divergence:
            r = math.inf
        if r > max_residual:
            max_residual = r
    return OracleResult(roots=tuple(zs), max_residual=max_residual,
                        converged=converged)
