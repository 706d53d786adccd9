# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled iteration kernels.

Statement-for-statement port of _kernels_py; see that module for the
commentary. Keep the two in sync: the pure version is the semantic
reference and the parity tests compare them directly.
"""

from libc.math cimport atan2, cos, exp, fabs, floor, isfinite, log, sin, sqrt
from libc.math cimport INFINITY, NAN

CONVERGED = 0
MAX_ITERATIONS = 1
DERIVATIVE_VANISHED = 2
DIVERGED = 3

cdef int _CONVERGED = 0
cdef int _MAX_ITERATIONS = 1
cdef int _DERIVATIVE_VANISHED = 2
cdef int _DIVERGED_CODE = 3

cdef int _OK = 0
cdef int _VANISHED = 2
cdef int _DIVERGED = 3
cdef int _TERMINAL = 4

AITKEN_FLOOR = 1e-300
cdef double _AITKEN_FLOOR = 1e-300


cdef inline double _cmod(double re, double im) noexcept:
    cdef double a = fabs(re)
    cdef double b = fabs(im)
    cdef double m
    if a != a or b != b:
        return NAN
    m = a if a > b else b
    if m == 0.0:
        return 0.0
    if m == INFINITY:
        return INFINITY
    a /= m
    b /= m
    return m * sqrt(a * a + b * b)


cdef inline (double, double) _eval_poly(double[::1] c, double zr, double zi) noexcept:
    cdef Py_ssize_t n = c.shape[0]
    cdef double br = c[n - 1]
    cdef double bi = 0.0
    cdef double tr
    cdef Py_ssize_t m
    for m in range(n - 2, -1, -1):
        tr = br * zr - bi * zi + c[m]
        bi = br * zi + bi * zr
        br = tr
    return br, bi


cdef inline (double, double) _frac_eval(double[::1] w, double alpha,
                                        double zr, double zi) noexcept:
    cdef double hr, hi, rho, theta, mag, ang, pr, ps
    if zr == 0.0 and zi == 0.0:
        return w[<int> alpha], 0.0
    hr, hi = _eval_poly(w, zr, zi)
    rho = _cmod(zr, zi)
    theta = atan2(zi, zr)
    mag = exp(-alpha * log(rho))
    ang = -alpha * theta
    pr = mag * cos(ang)
    ps = mag * sin(ang)
    return pr * hr - ps * hi, pr * hi + ps * hr


cdef inline (double, double) _cdiv(double ar, double ai,
                                   double br, double bi) noexcept:
    cdef double r, den
    if fabs(br) >= fabs(bi):
        r = bi / br
        den = br + bi * r
        return (ar + ai * r) / den, (ai - ar * r) / den
    r = br / bi
    den = bi + br * r
    return (ar * r + ai) / den, (ai * r - ar) / den


cdef inline (int, double, double, double) _phi(double[::1] c, double[::1] w,
                                               double alpha,
                                               bint alpha_integral,
                                               double zr, double zi,
                                               double eps_div,
                                               double r_lo,
                                               double r_hi) noexcept:
    cdef double dr, di, dm, fr, fi, sr, si, xr, xi_, rho, res
    dr, di = _frac_eval(w, alpha, zr, zi)
    dm = _cmod(dr, di)
    if not (dm == dm and dm != INFINITY):
        return _DIVERGED, 0.0, 0.0, 0.0
    if dm < eps_div:
        return _VANISHED, 0.0, 0.0, 0.0
    fr, fi = _eval_poly(c, zr, zi)
    sr, si = _cdiv(fr, fi, dr, di)
    xr = zr - sr
    xi_ = zi - si
    if not (isfinite(xr) and isfinite(xi_)):
        return _DIVERGED, 0.0, 0.0, 0.0
    rho = _cmod(xr, xi_)
    if rho > r_hi:
        return _DIVERGED, 0.0, 0.0, 0.0
    fr, fi = _eval_poly(c, xr, xi_)
    res = _cmod(fr, fi)
    if not isfinite(res):
        return _DIVERGED, 0.0, 0.0, 0.0
    if rho < r_lo and not (rho == 0.0 and alpha_integral):
        return _TERMINAL, xr, xi_, res
    return _OK, xr, xi_, res


def cmod(double re, double im):
    """Overflow-safe |re + i*im|; same formula as the pure backend."""
    return _cmod(re, im)


def eval_poly(double[::1] c, double zr, double zi):
    """Horner evaluation of a real-coefficient polynomial at zr + i*zi."""
    cdef double br, bi
    br, bi = _eval_poly(c, zr, zi)
    return br, bi


def frac_eval(double[::1] w, double alpha, double zr, double zi):
    """Sum of w[m] * z**(m - alpha) on the principal branch."""
    cdef double vr, vi
    vr, vi = _frac_eval(w, alpha, zr, zi)
    return vr, vi


def run_newton(double[::1] c, double[::1] w, double alpha,
               double x0r, double x0i, double tol_res, double tol_step,
               int max_iter, double eps_div, bint accelerate,
               double r_lo, double r_hi):
    """Fractional Newton iteration; see _kernels_py.run_newton."""
    cdef bint alpha_integral = alpha == floor(alpha)
    cdef double xr = x0r
    cdef double xi_ = x0i
    cdef double fr, fi, res
    cdef double x1r, x1i, r1, x2r, x2i, r2
    cdef double denr, deni, d1r, d1i, numr, numi, qr, qi, ar, ai_, rho, ra
    cdef int st
    cdef int n
    fr, fi = _eval_poly(c, xr, xi_)
    res = _cmod(fr, fi)
    xs = [complex(xr, xi_)]
    rs = [res]
    acc = []
    if res <= tol_res:
        return xs, rs, acc, _CONVERGED
    n = 0
    while True:
        if n >= max_iter:
            return xs, rs, acc, _MAX_ITERATIONS
        st, x1r, x1i, r1 = _phi(c, w, alpha, alpha_integral, xr, xi_,
                                eps_div, r_lo, r_hi)
        if st == _VANISHED:
            return xs, rs, acc, _DERIVATIVE_VANISHED
        if st == _DIVERGED:
            return xs, rs, acc, _DIVERGED_CODE
        xs.append(complex(x1r, x1i))
        rs.append(r1)
        n += 1
        if r1 <= tol_res:
            return xs, rs, acc, _CONVERGED
        if _cmod(x1r - xr, x1i - xi_) <= tol_step:
            return xs, rs, acc, _CONVERGED
        if st == _TERMINAL:
            return xs, rs, acc, _DIVERGED_CODE
        if n >= max_iter:
            return xs, rs, acc, _MAX_ITERATIONS
        st, x2r, x2i, r2 = _phi(c, w, alpha, alpha_integral, x1r, x1i,
                                eps_div, r_lo, r_hi)
        if st == _VANISHED:
            return xs, rs, acc, _DERIVATIVE_VANISHED
        if st == _DIVERGED:
            return xs, rs, acc, _DIVERGED_CODE
        xs.append(complex(x2r, x2i))
        rs.append(r2)
        n += 1
        if r2 <= tol_res:
            return xs, rs, acc, _CONVERGED
        if _cmod(x2r - x1r, x2i - x1i) <= tol_step:
            return xs, rs, acc, _CONVERGED
        if st == _TERMINAL:
            return xs, rs, acc, _DIVERGED_CODE
        if accelerate and n < max_iter:
            denr = x2r - 2.0 * x1r + xr
            deni = x2i - 2.0 * x1i + xi_
            if _cmod(denr, deni) >= _AITKEN_FLOOR:
                d1r = x1r - xr
                d1i = x1i - xi_
                numr = d1r * d1r - d1i * d1i
                numi = 2.0 * d1r * d1i
                qr, qi = _cdiv(numr, numi, denr, deni)
                ar = xr - qr
                ai_ = xi_ - qi
                if isfinite(ar) and isfinite(ai_):
                    rho = _cmod(ar, ai_)
                    if rho <= r_hi:
                        fr, fi = _eval_poly(c, ar, ai_)
                        ra = _cmod(fr, fi)
                        if isfinite(ra):
                            acc.append(len(xs))
                            xs.append(complex(ar, ai_))
                            rs.append(ra)
                            n += 1
                            if ra <= tol_res:
                                return xs, rs, acc, _CONVERGED
                            if rho < r_lo and not (rho == 0.0
                                                   and alpha_integral):
                                return xs, rs, acc, _DIVERGED_CODE
                            xr = ar
                            xi_ = ai_
                            continue
        xr = x2r
        xi_ = x2i
