"""Pure-Python iteration kernels.

Reference implementation of the numeric hot loops. The compiled module
_kernels mirrors this file statement for statement; any semantic change
here must be ported there. Complex arithmetic is written out on (re, im)
double pairs with the same formulas in both backends so that, given the
same libm, the two produce identical trajectories.
"""

import math

CONVERGED = 0
MAX_ITERATIONS = 1
DERIVATIVE_VANISHED = 2
DIVERGED = 3

# _phi status codes: OK continues, TERMINAL points may enter the trace
# but cannot be iterated from (z=0 with fractional order, or inside the
# derivative-overflow radius).
_OK = 0
_VANISHED = 2
_DIVERGED = 3
_TERMINAL = 4

_INF = math.inf

# Aitken denominator floor; below this the second difference carries no
# usable information.
AITKEN_FLOOR = 1e-300


def cmod(re, im):
    """Overflow-safe |re + i*im| without libm hypot.

    Scaled so intermediate squares cannot overflow; both backends use
    this exact formula, bit for bit.
    """
    a = abs(re)
    b = abs(im)
    if a != a or b != b:
        return math.nan
    m = a if a > b else b
    if m == 0.0:
        return 0.0
    if m == _INF:
        return _INF
    a /= m
    b /= m
    return m * math.sqrt(a * a + b * b)


def eval_poly(c, zr, zi):
    """Horner evaluation of a real-coefficient polynomial at zr + i*zi."""
    n = len(c)
    br = c[n - 1]
    bi = 0.0
    for m in range(n - 2, -1, -1):
        tr = br * zr - bi * zi + c[m]
        bi = br * zi + bi * zr
        br = tr
    return br, bi


def frac_eval(w, alpha, zr, zi):
    """Sum of w[m] * z**(m - alpha), factored as z**(-alpha) * Horner(w, z).

    The power uses the principal branch (Arg in (-pi, pi]). The caller
    must keep z away from 0 unless alpha is a nonnegative integer; in
    that case only the m = alpha monomial survives at 0 and the value is
    w[alpha] exactly.
    """
    if zr == 0.0 and zi == 0.0:
        return w[int(alpha)], 0.0
    hr, hi = eval_poly(w, zr, zi)
    rho = cmod(zr, zi)
    theta = math.atan2(zi, zr)
    mag = math.exp(-alpha * math.log(rho))
    ang = -alpha * theta
    pr = mag * math.cos(ang)
    ps = mag * math.sin(ang)
    return pr * hr - ps * hi, pr * hi + ps * hr


def _cdiv(ar, ai, br, bi):
    # Smith's algorithm; caller guarantees the divisor is not zero.
    if abs(br) >= abs(bi):
        r = bi / br
        den = br + bi * r
        return (ar + ai * r) / den, (ai - ar * r) / den
    r = br / bi
    den = bi + br * r
    return (ar * r + ai) / den, (ai * r - ar) / den


def _phi(c, w, alpha, alpha_integral, zr, zi, eps_div, r_lo, r_hi):
    """One Newton step from a vetted point z.

    Returns (status, xr, xi, res). On _OK and _TERMINAL the candidate and
    its residual are valid; _TERMINAL means the point must not be
    iterated from again.
    """
    dr, di = frac_eval(w, alpha, zr, zi)
    dm = cmod(dr, di)
    if not (dm == dm and dm != _INF):
        return _DIVERGED, 0.0, 0.0, 0.0
    if dm < eps_div:
        return _VANISHED, 0.0, 0.0, 0.0
    fr, fi = eval_poly(c, zr, zi)
    sr, si = _cdiv(fr, fi, dr, di)
    xr = zr - sr
    xi_ = zi - si
    if not (math.isfinite(xr) and math.isfinite(xi_)):
        return _DIVERGED, 0.0, 0.0, 0.0
    rho = cmod(xr, xi_)
    if rho > r_hi:
        # Escaped: polynomial terms would exceed the overflow budget.
        return _DIVERGED, 0.0, 0.0, 0.0
    fr, fi = eval_poly(c, xr, xi_)
    res = cmod(fr, fi)
    if not math.isfinite(res):
        return _DIVERGED, 0.0, 0.0, 0.0
    if rho < r_lo and not (rho == 0.0 and alpha_integral):
        return _TERMINAL, xr, xi_, res
    return _OK, xr, xi_, res


def run_newton(c, w, alpha, x0r, x0i, tol_res, tol_step, max_iter,
               eps_div, accelerate, r_lo, r_hi):
    """Fractional Newton iteration from one starting point.

    Acceleration is a disjoint-triple Steffensen scheme without an
    acceptance guard: two base steps, one Aitken extrapolation, restart
    from the extrapolated point whenever it and its residual are finite.

    Returns (iterates, residuals, accelerated_indices, code) with the
    iterates as complex objects and code one of the four termination
    constants. The caller pre-vets x0 (finite, inside the radius window,
    residual finite).
    """
    alpha_integral = alpha == math.floor(alpha)
    xr = x0r
    xi_ = x0i
    fr, fi = eval_poly(c, xr, xi_)
    res = cmod(fr, fi)
    xs = [complex(xr, xi_)]
    rs = [res]
    acc = []
    if res <= tol_res:
        return xs, rs, acc, CONVERGED
    n = 0
    while True:
        if n >= max_iter:
            return xs, rs, acc, MAX_ITERATIONS
        st, x1r, x1i, r1 = _phi(c, w, alpha, alpha_integral, xr, xi_,
                                eps_div, r_lo, r_hi)
        if st == _VANISHED:
            return xs, rs, acc, DERIVATIVE_VANISHED
        if st == _DIVERGED:
            return xs, rs, acc, DIVERGED
        xs.append(complex(x1r, x1i))
        rs.append(r1)
        n += 1
        if r1 <= tol_res:
            return xs, rs, acc, CONVERGED
        if cmod(x1r - xr, x1i - xi_) <= tol_step:
            return xs, rs, acc, CONVERGED
        if st == _TERMINAL:
            return xs, rs, acc, DIVERGED
        if n >= max_iter:
            return xs, rs, acc, MAX_ITERATIONS
        st, x2r, x2i, r2 = _phi(c, w, alpha, alpha_integral, x1r, x1i,
                                eps_div, r_lo, r_hi)
        if st == _VANISHED:
            return xs, rs, acc, DERIVATIVE_VANISHED
        if st == _DIVERGED:
            return xs, rs, acc, DIVERGED
        xs.append(complex(x2r, x2i))
        rs.append(r2)
        n += 1
        if r2 <= tol_res:
            return xs, rs, acc, CONVERGED
        if cmod(x2r - x1r, x2i - x1i) <= tol_step:
            return xs, rs, acc, CONVERGED
        if st == _TERMINAL:
            return xs, rs, acc, DIVERGED
        if accelerate and n < max_iter:
            denr = x2r - 2.0 * x1r + xr
            deni = x2i - 2.0 * x1i + xi_
            if cmod(denr, deni) >= AITKEN_FLOOR:
                d1r = x1r - xr
                d1i = x1i - xi_
                numr = d1r * d1r - d1i * d1i
                numi = 2.0 * d1r * d1i
                qr, qi = _cdiv(numr, numi, denr, deni)
                ar = xr - qr
                ai_ = xi_ - qi
                if math.isfinite(ar) and math.isfinite(ai_):
                    rho = cmod(ar, ai_)
                    if rho <= r_hi:
                        fr, fi = eval_poly(c, ar, ai_)
                        ra = cmod(fr, fi)
                        if math.isfinite(ra):
                            acc.append(len(xs))
                            xs.append(complex(ar, ai_))
                            rs.append(ra)
                            n += 1
                            if ra <= tol_res:
                                return xs, rs, acc, CONVERGED
                            if rho < r_lo and not (rho == 0.0
                                                   and alpha_integral):
                                return xs, rs, acc, DIVERGED
                            xr = ar
                            xi_ = ai_
                            continue
        xr = x2r
        xi_ = x2i
