"""Augmented Dickey-Fuller unit-root test.

The regression is

    dy_t = [deterministics] + gamma * y_{t-1} + sum_{i=1..L} d_i * dy_{t-i} + e_t

with the augmentation order L chosen by minimizing AIC over 0..max_lag on
a common sample (all candidates trimmed at max_lag), then refit at the
chosen order on the longest sample that order allows.  The test statistic
is the t-ratio on gamma.  P-values and finite-sample critical values come
from the MacKinnon response surfaces shipped as a versioned data file
(data/mackinnon_v1.json); no interpolation beyond the published surfaces
is attempted, so p-values clamp to 0/1 outside the tabulated range.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources

import numpy as np

from ..errors import ValidationError
from .regression import ols
from .special import normal_cdf

MACKINNON_RESOURCE = "mackinnon_v1.json"

_SPEC_ALIASES = {
    "constant": "c",
    "c": "c",
    "trend": "ct",
    "constant+trend": "ct",
    "ct": "ct",
    "none": "n",
    "n": "n",
    "nc": "n",
}

_tables = None


def _mackinnon_tables():
    global _tables
    if _tables is None:
        text = resources.files("policytone.data").joinpath(MACKINNON_RESOURCE).read_text("utf-8")
        _tables = json.loads(text)
    return _tables


@dataclass(frozen=True)
class ADFResult:
    statistic: float
    used_lag: int
    pvalue: float
    critical_values: dict[str, float]
    spec: str
    nobs: int

    def __post_init__(self):
        cv = self.critical_values
        if not (cv["1%"] < cv["5%"] < cv["10%"]):
            raise ValidationError("critical values must be strictly ordered")


def mackinnon_pvalue(stat: float, spec: str = "c") -> float:
    """Approximate asymptotic p-value from the MacKinnon (1994) surface."""
    tab = _mackinnon_tables()["pvalue"][spec]
    tau_max = tab["tau_max"]
    if tau_max is not None and stat > tau_max:
        return 1.0
    if stat < tab["tau_min"]:
        return 0.0
    if stat <= tab["tau_star"]:
        scale = _mackinnon_tables()["pvalue_small_scaling"]
        coefs = [c * s for c, s in zip(tab["smallp"], scale)]
    else:
        scale = _mackinnon_tables()["pvalue_large_scaling"]
        coefs = [c * s for c, s in zip(tab["largep"], scale)]
    z = 0.0
    for c in reversed(coefs):
        z = z * stat + c
    return normal_cdf(z)


def mackinnon_crit(spec: str = "c", nobs: float = math.inf) -> dict[str, float]:
    """Finite-sample critical values from the MacKinnon (2010) surface."""
    tab = _mackinnon_tables()["critical"][spec]
    out = {}
    for level, coefs in tab.items():
        if math.isinf(nobs):
            out[level] = coefs[0]
        else:
            x = 1.0 / nobs
            out[level] = coefs[0] + x * (coefs[1] + x * (coefs[2] + x * coefs[3]))
    return out


def adf_test(series, max_lag: int | None = None, spec: str = "constant") -> ADFResult:
    """Run the ADF test on one series.

    max_lag defaults to the Schwert rule 12*(n/100)^(1/4).  spec selects
    the deterministic terms: "constant" (default), "trend" (constant plus
    linear trend) or "none".
    """
    key = _SPEC_ALIASES.get(str(spec).lower())
    if key is None:
        raise ValidationError(f"unknown ADF specification {spec!r}")
    y = np.asarray(series, dtype=float)
    if np.isnan(y).any():
        raise ValidationError("ADF input contains missing values")
    n = y.size
    if max_lag is None:
        max_lag = int(math.ceil(12.0 * (n / 100.0) ** 0.25))
        max_lag = min(max_lag, max(0, (n - 12) // 2))
    if max_lag < 0:
        raise ValidationError("max_lag must be >= 0")
    if n <= max_lag + 10:
        raise ValidationError(
            f"series too short for ADF: length {n} needs > max_lag + 10 = {max_lag + 10}"
        )
    if np.ptp(y) == 0.0:
        raise ValidationError("ADF undefined for a constant series")

    dy = np.diff(y)

    def fit(lag_order: int, start: int):
        # Rows start..len(dy)-1 of dy regressed on level and lagged diffs.
        rows = np.arange(start, dy.size)
        cols = [y[rows]]  # y_{t-1} relative to dy_t
        names = ["level"]
        for i in range(1, lag_order + 1):
            cols.append(dy[rows - i])
            names.append(f"ddep(-{i})")
        if key in ("c", "ct"):
            cols.append(np.ones(rows.size))
            names.append("const")
        if key == "ct":
            cols.append(rows.astype(float) + 1.0)
            names.append("trend")
        X = np.column_stack(cols)
        return ols(dy[rows], X, names)

    # Common-sample selection, then refit at the winner's own sample.
    best_lag = 0
    best_aic = math.inf
    for lag_order in range(max_lag + 1):
        candidate = fit(lag_order, max_lag)
        if candidate.aic < best_aic:
            best_aic = candidate.aic
            best_lag = lag_order
    final = fit(best_lag, best_lag)

    stat = float(final.tvalues[0])
    return ADFResult(
        statistic=stat,
        used_lag=best_lag,
        pvalue=mackinnon_pvalue(stat, key),
        critical_values=mackinnon_crit(key, final.nobs),
        spec=key,
        nobs=final.nobs,
    )
