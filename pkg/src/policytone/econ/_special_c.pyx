# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled backend for the statistical special functions.

Line-for-line transliteration of _special_py.py; compiled without FMA
contraction so results stay bit-identical to the pure-Python backend.
lgamma and erfc deliberately come from Python's math module (CPython
ships its own implementations that differ from libm in the last ulp);
only the iteration-heavy series/continued fractions run as C loops.
Keep the two files in sync.
"""

from libc.math cimport exp, fabs, log, sqrt

from math import erfc as _erfc, lgamma as _lgamma

cdef double _EPS = 1e-15
cdef double _FPMIN = 1e-300
cdef int _MAXIT = 500

cdef object erfc = _erfc
cdef object lgamma = _lgamma


def norm_cdf(double x):
    """Standard normal CDF via the complementary error function."""
    return 0.5 * <double>erfc(-x / sqrt(2.0))


cdef double _betacf(double a, double b, double x):
    cdef double qab = a + b
    cdef double qap = a + 1.0
    cdef double qam = a - 1.0
    cdef double c = 1.0
    cdef double d = 1.0 - qab * x / qap
    cdef double h, aa, de
    cdef int m, m2
    if fabs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _MAXIT + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if fabs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if fabs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if fabs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if fabs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        de = d * c
        h *= de
        if fabs(de - 1.0) < _EPS:
            break
    return h


def betainc(double a, double b, double x):
    """Regularized incomplete beta function I_x(a, b)."""
    cdef double lbeta, bt
    if a <= 0.0 or b <= 0.0:
        raise ValueError("betainc requires a > 0 and b > 0")
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    lbeta = <double>lgamma(a + b) - <double>lgamma(a) - <double>lgamma(b)
    bt = exp(lbeta + a * log(x) + b * log(1.0 - x))
    if x < (a + 1.0) / (a + b + 2.0):
        return bt * _betacf(a, b, x) / a
    return 1.0 - bt * _betacf(b, a, 1.0 - x) / b


def gammainc_p(double a, double x):
    """Regularized lower incomplete gamma function P(a, x)."""
    cdef double ap, s, term, b, c, d, h, an, de, q
    cdef int i
    if a <= 0.0:
        raise ValueError("gammainc_p requires a > 0")
    if x < 0.0:
        raise ValueError("gammainc_p requires x >= 0")
    if x == 0.0:
        return 0.0
    if x < a + 1.0:
        ap = a
        s = 1.0 / a
        term = s
        for i in range(_MAXIT):
            ap += 1.0
            term *= x / ap
            s += term
            if fabs(term) < fabs(s) * _EPS:
                break
        return s * exp(-x + a * log(x) - <double>lgamma(a))
    b = x + 1.0 - a
    c = 1.0 / _FPMIN
    d = 1.0 / b
    h = d
    for i in range(1, _MAXIT + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if fabs(d) < _FPMIN:
            d = _FPMIN
        c = b + an / c
        if fabs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        de = d * c
        h *= de
        if fabs(de - 1.0) < _EPS:
            break
    q = exp(-x + a * log(x) - <double>lgamma(a)) * h
    return 1.0 - q
