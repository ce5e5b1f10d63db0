"""Pure-Python backend for the statistical special functions.

Regularized incomplete beta and gamma functions evaluated with the
classic series / modified-Lentz continued-fraction algorithms in IEEE
double precision.  The Cython backend (_special_c.pyx) is a line-for-line
transliteration; both must produce bit-identical results, which the test
suite asserts.  Keep the two files in sync.
"""

from math import erfc, exp, lgamma, log, sqrt

_EPS = 1e-15
_FPMIN = 1e-300
_MAXIT = 500


def norm_cdf(x):
    """Standard normal CDF via the complementary error function."""
    return 0.5 * erfc(-x / sqrt(2.0))


def _betacf(a, b, x):
    """Continued fraction for the incomplete beta (modified Lentz)."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _MAXIT + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        de = d * c
        h *= de
        if abs(de - 1.0) < _EPS:
            break
    return h


def betainc(a, b, x):
    """Regularized incomplete beta function I_x(a, b)."""
    if a <= 0.0 or b <= 0.0:
        raise ValueError("betainc requires a > 0 and b > 0")
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    lbeta = lgamma(a + b) - lgamma(a) - lgamma(b)
    bt = exp(lbeta + a * log(x) + b * log(1.0 - x))
    # Continued fraction converges fastest on the side below the mean.
    if x < (a + 1.0) / (a + b + 2.0):
        return bt * _betacf(a, b, x) / a
    return 1.0 - bt * _betacf(b, a, 1.0 - x) / b


def gammainc_p(a, x):
    """Regularized lower incomplete gamma function P(a, x)."""
    if a <= 0.0:
        raise ValueError("gammainc_p requires a > 0")
    if x < 0.0:
        raise ValueError("gammainc_p requires x >= 0")
    if x == 0.0:
        return 0.0
    if x < a + 1.0:
        # Series representation.
        ap = a
        s = 1.0 / a
        term = s
        for _ in range(_MAXIT):
            ap += 1.0
            term *= x / ap
            s += term
            if abs(term) < abs(s) * _EPS:
                break
        return s * exp(-x + a * log(x) - lgamma(a))
    # Continued fraction for Q(a, x) = 1 - P(a, x) (modified Lentz).
    b = x + 1.0 - a
    c = 1.0 / _FPMIN
    d = 1.0 / b
    h = d
    for i in range(1, _MAXIT + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = b + an / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        de = d * c
        h *= de
        if abs(de - 1.0) < _EPS:
            break
    q = exp(-x + a * log(x) - lgamma(a)) * h
    return 1.0 - q
