"""OLS with full inference output.

Coefficients come from a column-pivoted QR factorization (rank-revealing,
stable on near-collinear lag matrices); the normal equations appear only
as an independent oracle in the test suite.  Log-likelihood and AIC use
the Gaussian per-observation convention

    aic = -2*ll/n + 2*k/n,   ll = -(n/2) * (1 + ln(2*pi) + ln(rss/n))

so a well-fitting daily-returns regression lands in the -6.x range.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from ..errors import ArithmeticDomainError, ValidationError
from .special import fisher_f_sf, student_t_cdf, student_t_sf


@dataclass
class RegressionResult:
    """Coefficients plus the inference block reported in the output tables."""

    names: list[str]
    params: np.ndarray
    bse: np.ndarray
    tvalues: np.ndarray
    pvalues: np.ndarray
    resid: np.ndarray
    fitted: np.ndarray
    rss: float
    tss: float
    r2: float
    r2_adj: float
    fvalue: float
    f_pvalue: float
    df_model: int
    df_resid: int
    dw: float
    loglik: float
    aic: float
    nobs: int
    k: int
    cov_params: np.ndarray = field(repr=False, default=None)

    def conf_int(self, name: str, level: float = 0.999) -> tuple[float, float]:
        """Two-sided confidence interval for one coefficient."""
        i = self.names.index(name)
        # Invert the t CDF by bisection; only used for reporting.
        target = 0.5 + level / 2.0
        lo, hi = 0.0, 1e3
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if student_t_cdf(self.df_resid, mid) < target:
                lo = mid
            else:
                hi = mid
        half = 0.5 * (lo + hi) * self.bse[i]
        return self.params[i] - half, self.params[i] + half


def ols(y, X, names: list[str] | None = None) -> RegressionResult:
    """Least squares of y on X; X must already contain its intercept column.

    Raises ValidationError when n <= k or when X is rank deficient (the
    message names the linearly dependent columns).
    """
    y = np.asarray(y, dtype=float)
    X = np.asarray(X, dtype=float)
    if X.ndim != 2:
        raise ValidationError("X must be a 2-d design matrix")
    n, k = X.shape
    if y.shape != (n,):
        raise ValidationError(f"y has length {y.shape}, X has {n} rows")
    if names is None:
        names = [f"x{j}" for j in range(k)]
    if len(names) != k:
        raise ValidationError("names length does not match design columns")
    if n <= k:
        raise ValidationError(f"need more observations than regressors (n={n}, k={k})")

    Q, R, piv = scipy.linalg.qr(X, mode="economic", pivoting=True)
    diag = np.abs(np.diag(R))
    tol = max(n, k) * np.finfo(float).eps * (diag[0] if diag.size else 0.0)
    rank = int(np.sum(diag > tol))
    if rank < k:
        dependent = sorted(names[j] for j in piv[rank:])
        raise ValidationError(
            "design matrix is rank deficient; dependent column(s): "
            + ", ".join(dependent)
        )

    qty = Q.T @ y
    beta_piv = scipy.linalg.solve_triangular(R, qty)
    beta = np.empty(k)
    beta[piv] = beta_piv

    fitted = X @ beta
    resid = y - fitted
    rss = float(resid @ resid)
    ybar = float(np.mean(y))
    tss = float(np.sum((y - ybar) ** 2))

    df_resid = n - k
    s2 = rss / df_resid
    # (X'X)^-1 = P (R'R)^-1 P' from the pivoted factorization.
    rinv = scipy.linalg.solve_triangular(R, np.eye(k))
    cov_piv = rinv @ rinv.T
    cov = np.empty((k, k))
    cov[np.ix_(piv, piv)] = cov_piv
    cov *= s2
    bse = np.sqrt(np.diag(cov))

    tvals = np.full(k, np.nan)
    pvals = np.full(k, np.nan)
    nz = bse > 0
    tvals[nz] = beta[nz] / bse[nz]
    for j in np.flatnonzero(nz):
        pvals[j] = 2.0 * student_t_sf(df_resid, abs(tvals[j]))

    if tss > 0.0:
        r2 = 1.0 - rss / tss
    else:
        r2 = 0.0
    df_model = k - 1
    if df_model > 0 and tss > 0.0:
        r2_adj = 1.0 - (1.0 - r2) * (n - 1) / df_resid
        if rss > 0.0:
            fvalue = ((tss - rss) / df_model) / (rss / df_resid)
            f_pvalue = fisher_f_sf(df_model, df_resid, fvalue)
        else:
            fvalue, f_pvalue = math.inf, 0.0
    else:
        r2_adj, fvalue, f_pvalue = r2, math.nan, math.nan

    dw = _durbin_watson_raw(resid)
    if rss > 0.0:
        loglik = -0.5 * n * (1.0 + math.log(2.0 * math.pi) + math.log(rss / n))
    else:
        loglik = math.inf
    aic_val = _aic_from(loglik, n, k)

    return RegressionResult(
        names=list(names),
        params=beta,
        bse=bse,
        tvalues=tvals,
        pvalues=pvals,
        resid=resid,
        fitted=fitted,
        rss=rss,
        tss=tss,
        r2=r2,
        r2_adj=r2_adj,
        fvalue=fvalue,
        f_pvalue=f_pvalue,
        df_model=df_model,
        df_resid=df_resid,
        dw=dw,
        loglik=loglik,
        aic=aic_val,
        nobs=n,
        k=k,
        cov_params=cov,
    )


def _aic_from(loglik: float, n: int, k: int) -> float:
    if math.isinf(loglik):
        return -math.inf
    return -2.0 * loglik / n + 2.0 * k / n


def aic(result: RegressionResult) -> float:
    """Per-observation Akaike criterion of a fitted regression.

    A perfect fit (rss == 0) returns -inf and emits a warning rather
    than raising, so a degenerate candidate cannot abort a lag search.
    """
    if result.rss == 0.0:
        warnings.warn("perfect fit: AIC is -inf", RuntimeWarning, stacklevel=2)
        return -math.inf
    return _aic_from(result.loglik, result.nobs, result.k)


def _durbin_watson_raw(resid: np.ndarray) -> float:
    denom = float(resid @ resid)
    if denom == 0.0:
        return math.nan
    diff = np.diff(resid)
    return float(diff @ diff) / denom


def durbin_watson(resid) -> float:
    """Durbin-Watson statistic sum((e_t - e_{t-1})^2) / sum(e_t^2)."""
    resid = np.asarray(resid, dtype=float)
    if resid.size < 2:
        raise ValidationError("durbin_watson needs at least 2 residuals")
    if float(resid @ resid) == 0.0:
        raise ArithmeticDomainError("durbin_watson undefined for all-zero residuals")
    return _durbin_watson_raw(resid)
