"""Estimation and diagnostics: OLS, ARDL lag search, unit-root tests,
heteroskedasticity/autocorrelation diagnostics, and the distribution
functions backing their p-values."""

from .ardl import LagSpec, ardl_fit, ardl_search
from .diagnostics import DiagnosticsReport, breusch_pagan_godfrey, ljung_box
from .regression import RegressionResult, aic, durbin_watson, ols
from .special import (
    BACKEND,
    chi_square_cdf,
    dist_cdf,
    fisher_f_cdf,
    normal_cdf,
    student_t_cdf,
)
from .unitroot import ADFResult, adf_test

__all__ = [
    "ADFResult",
    "BACKEND",
    "DiagnosticsReport",
    "LagSpec",
    "RegressionResult",
    "adf_test",
    "aic",
    "ardl_fit",
    "ardl_search",
    "breusch_pagan_godfrey",
    "chi_square_cdf",
    "dist_cdf",
    "durbin_watson",
    "fisher_f_cdf",
    "ljung_box",
    "normal_cdf",
    "ols",
    "student_t_cdf",
]
