"""Distribution CDFs used for every p-value in the package.

Student-t, Fisher-F, chi-square and normal CDFs are reduced to the
regularized incomplete beta/gamma functions, which exist in two
interchangeable backends: a Cython extension (fast path) and a pure
Python twin.  The compiled backend is preferred at import time; set
POLICYTONE_PURE=1 to force the pure backend.  Both produce bit-identical
values.
"""

from __future__ import annotations

import os

from ..errors import ValidationError

if os.environ.get("POLICYTONE_PURE") == "1":
    from . import _special_py as _backend

    BACKEND = "python"
else:
    try:
        from . import _special_c as _backend  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _special_py as _backend

        BACKEND = "python"

betainc = _backend.betainc
gammainc_p = _backend.gammainc_p


def normal_cdf(x: float, mean: float = 0.0, sd: float = 1.0) -> float:
    if sd <= 0.0:
        raise ValidationError(f"normal sd must be positive, got {sd}")
    return _backend.norm_cdf((x - mean) / sd)


def student_t_cdf(df: float, x: float) -> float:
    """P(T <= x) for Student-t with df degrees of freedom.

    Uses I_z(df/2, 1/2) with z = df/(df + x^2); the two tails share the
    same incomplete-beta value, so cdf(-x) == 1 - cdf(x) exactly.
    """
    if df <= 0.0:
        raise ValidationError(f"student_t df must be positive, got {df}")
    if x == 0.0:
        return 0.5
    z = df / (df + x * x)
    tail = 0.5 * betainc(0.5 * df, 0.5, z)
    return tail if x < 0.0 else 1.0 - tail


def chi_square_cdf(df: float, x: float) -> float:
    if df <= 0.0:
        raise ValidationError(f"chi_square df must be positive, got {df}")
    if x <= 0.0:
        return 0.0
    return gammainc_p(0.5 * df, 0.5 * x)


def fisher_f_cdf(df1: float, df2: float, x: float) -> float:
    if df1 <= 0.0 or df2 <= 0.0:
        raise ValidationError(f"fisher_f requires positive df, got ({df1}, {df2})")
    if x <= 0.0:
        return 0.0
    z = df1 * x / (df1 * x + df2)
    return betainc(0.5 * df1, 0.5 * df2, z)


def dist_cdf(family: str, params: tuple, x: float) -> float:
    """Dispatch CDF evaluation by family name.

    family is one of "student_t" (params: df), "fisher_f" (df1, df2),
    "chi_square" (df) or "normal" (optionally mean, sd).
    """
    if family == "student_t":
        (df,) = params
        return student_t_cdf(df, x)
    if family == "fisher_f":
        df1, df2 = params
        return fisher_f_cdf(df1, df2, x)
    if family == "chi_square":
        (df,) = params
        return chi_square_cdf(df, x)
    if family == "normal":
        if len(params) == 0:
            return normal_cdf(x)
        mean, sd = params
        return normal_cdf(x, mean, sd)
    raise ValidationError(f"unknown distribution family: {family!r}")


def student_t_sf(df: float, x: float) -> float:
    """Upper tail P(T > x); avoids 1 - cdf cancellation for large x."""
    return student_t_cdf(df, -x)


def chi_square_sf(df: float, x: float) -> float:
    return 1.0 - chi_square_cdf(df, x)


def fisher_f_sf(df1: float, df2: float, x: float) -> float:
    return 1.0 - fisher_f_cdf(df1, df2, x)
