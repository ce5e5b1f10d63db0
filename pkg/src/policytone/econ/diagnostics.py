"""Residual diagnostics: Breusch-Pagan-Godfrey and Ljung-Box.

BPG regresses the squared residuals on the original design and reports
the three usual statistics: the auxiliary F, Obs*R-squared against
chi-square(k-1), and the scaled explained sum of squares ESS/(2*sigma^4)
against the same chi-square, with sigma^2 = rss/n from the original fit.

Ljung-Box uses mean-subtracted sample autocorrelations:

    Q(m) = n*(n+2) * sum_{j=1..m} acf_j^2 / (n-j)

with p-values from chi-square(m) by default; pass ``df_model`` to apply
the fitted-parameter degrees-of-freedom correction instead.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ValidationError
from .regression import RegressionResult, ols
from .special import chi_square_sf, fisher_f_sf


@dataclass(frozen=True)
class LjungBoxRow:
    lag: int
    q_stat: float
    pvalue: float


@dataclass(frozen=True)
class BPGResult:
    f_stat: float
    f_pvalue: float
    obs_r2: float
    obs_r2_pvalue: float
    scaled_ess: float
    scaled_ess_pvalue: float
    df: int
    nobs: int


@dataclass(frozen=True)
class DiagnosticsReport:
    bpg: BPGResult
    ljung_box: tuple[LjungBoxRow, ...]


def breusch_pagan_godfrey(result: RegressionResult, X) -> BPGResult:
    """Heteroskedasticity test from a fitted regression and its design."""
    X = np.asarray(X, dtype=float)
    n, k = X.shape
    if n != result.nobs or k != result.k:
        raise ValidationError("result and design matrix shapes disagree")
    if k < 2:
        raise ValidationError("BPG needs at least one non-intercept regressor")
    sigma2 = result.rss / n
    if sigma2 == 0.0:
        raise ValidationError("BPG undefined for a perfect original fit")
    e2 = result.resid**2
    df = k - 1
    if np.ptp(e2) == 0.0:
        # Squared residuals exactly constant: nothing for the auxiliary
        # regression to explain.
        return BPGResult(
            f_stat=float("nan"), f_pvalue=float("nan"),
            obs_r2=0.0, obs_r2_pvalue=1.0,
            scaled_ess=0.0, scaled_ess_pvalue=1.0, df=df, nobs=n,
        )
    aux = ols(e2, X, result.names)

    obs_r2 = n * aux.r2
    ess = aux.tss - aux.rss
    scaled_ess = ess / (2.0 * sigma2 * sigma2)
    return BPGResult(
        f_stat=aux.fvalue,
        f_pvalue=aux.f_pvalue if not np.isnan(aux.fvalue) else float("nan"),
        obs_r2=obs_r2,
        obs_r2_pvalue=chi_square_sf(df, obs_r2) if obs_r2 > 0 else 1.0,
        scaled_ess=scaled_ess,
        scaled_ess_pvalue=chi_square_sf(df, scaled_ess) if scaled_ess > 0 else 1.0,
        df=df,
        nobs=n,
    )


def ljung_box(residuals, lags, df_model: int = 0) -> list[LjungBoxRow]:
    """Portmanteau Q statistics at each requested lag."""
    e = np.asarray(residuals, dtype=float)
    n = e.size
    lags = [int(m) for m in lags]
    if not lags:
        raise ValidationError("ljung_box needs at least one lag")
    max_m = max(lags)
    if min(lags) < 1:
        raise ValidationError("lags must be >= 1")
    if max_m >= n / 2:
        raise ValidationError(f"lag {max_m} too large for {n} residuals (needs < n/2)")

    centered = e - e.mean()
    denom = float(centered @ centered)
    if denom == 0.0:
        raise ValidationError("ljung_box undefined for constant residuals")
    acf = np.empty(max_m + 1)
    for j in range(1, max_m + 1):
        acf[j] = float(centered[j:] @ centered[:-j]) / denom

    rows = []
    cumulative = 0.0
    by_lag = {}
    for j in range(1, max_m + 1):
        cumulative += acf[j] ** 2 / (n - j)
        by_lag[j] = n * (n + 2.0) * cumulative
    for m in sorted(set(lags)):
        q = by_lag[m]
        df = m - df_model
        p = chi_square_sf(df, q) if df > 0 else float("nan")
        rows.append(LjungBoxRow(lag=m, q_stat=q, pvalue=p))
    return rows


def f_test_pvalue(fvalue: float, df1: int, df2: int) -> float:
    return fisher_f_sf(df1, df2, fvalue)
