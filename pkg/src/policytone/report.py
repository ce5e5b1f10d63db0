"""Text/CSV rendering of the result tables.

Text tables carry 4-decimal figures (scientific notation below 1e-4, the
style used in econometrics printouts) with significance stars; CSVs keep
full precision for machine reuse.
"""

from __future__ import annotations

import csv
import math

from .econ.ardl import LagSpec
from .econ.diagnostics import BPGResult, LjungBoxRow
from .econ.regression import RegressionResult
from .econ.unitroot import ADFResult
from .timeseries import SummaryStats

FOOTNOTE = (
    "*, **, *** denote significance at the 10%, 5% and 1% levels; "
    "standard errors reported alongside."
)


def stars(pvalue: float, levels=(0.10, 0.05, 0.01)) -> str:
    if math.isnan(pvalue):
        return ""
    weak, mid, strong = levels
    if pvalue < strong:
        return "***"
    if pvalue < mid:
        return "**"
    if pvalue < weak:
        return "*"
    return ""


def fmt(v: float) -> str:
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return "NA"
    if isinstance(v, float) and math.isinf(v):
        return "-inf" if v < 0 else "inf"
    if v != 0.0 and abs(v) < 1e-4:
        return "%.2E" % v
    return "%.4f" % v


def render_table(title: str, header: list[str], rows: list[list[str]],
                 footer: list[str] | None = None) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for j, cell in enumerate(row):
            widths[j] = max(widths[j], len(cell))

    def line(cells):
        return "  ".join(c.ljust(w) if j == 0 else c.rjust(w)
                         for j, (c, w) in enumerate(zip(cells, widths)))

    sep = "-" * (sum(widths) + 2 * (len(widths) - 1))
    out = [title, sep, line(header), sep]
    out += [line(r) for r in rows]
    out.append(sep)
    if footer:
        out += footer
    return "\n".join(out) + "\n"


def regression_rows(result: RegressionResult, levels) -> list[list[str]]:
    rows = []
    for name, b, se, t, p in zip(result.names, result.params, result.bse,
                                 result.tvalues, result.pvalues):
        rows.append([name, fmt(b) + stars(p, levels), fmt(se), fmt(t), fmt(p)])
    return rows


def regression_table(title: str, result: RegressionResult, levels) -> str:
    rows = regression_rows(result, levels)
    footer = [
        f"R-squared           {fmt(result.r2)}",
        f"Adjusted R-squared  {fmt(result.r2_adj)}",
        f"F-statistic         {fmt(result.fvalue)}"
        f"   Prob(F-statistic) {fmt(result.f_pvalue)}",
        f"Durbin-Watson stat  {fmt(result.dw)}",
        f"Akaike criterion    {fmt(result.aic)}",
        f"Observations        {result.nobs}",
        FOOTNOTE,
    ]
    return render_table(
        title, ["Variable", "Coefficient", "Std. Error", "t-Statistic", "Prob."],
        rows, footer,
    )


def regression_csv(path, result: RegressionResult) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["variable", "coefficient", "std_error", "t_statistic", "p_value"])
        for name, b, se, t, p in zip(result.names, result.params, result.bse,
                                     result.tvalues, result.pvalues):
            w.writerow([name, "%.10g" % b, "%.10g" % se, "%.10g" % t, "%.10g" % p])
        w.writerow([])
        w.writerow(["r_squared", "%.10g" % result.r2])
        w.writerow(["adj_r_squared", "%.10g" % result.r2_adj])
        w.writerow(["f_statistic", "%.10g" % result.fvalue])
        w.writerow(["f_pvalue", "%.10g" % result.f_pvalue])
        w.writerow(["durbin_watson", "%.10g" % result.dw])
        w.writerow(["aic", "%.10g" % result.aic])
        w.writerow(["observations", result.nobs])


def summary_table(title: str, statistics: SummaryStats) -> str:
    rows = [
        [name, str(s.observations), fmt(s.mean), fmt(s.std), fmt(s.min), fmt(s.max)]
        for name, s in statistics.per_column.items()
    ]
    return render_table(
        title, ["Variable", "Obs", "Mean", "Std. Dev.", "Min", "Max"], rows
    )


def summary_csv(path, statistics: SummaryStats) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["variable", "observations", "mean", "std", "min", "max"])
        for name, s in statistics.per_column.items():
            w.writerow([name, s.observations, "%.10g" % s.mean, "%.10g" % s.std,
                        "%.10g" % s.min, "%.10g" % s.max])


def adf_table(title: str, results: dict[str, ADFResult | str]) -> str:
    rows = []
    for name, res in results.items():
        if isinstance(res, str):
            rows.append([name, "error", "", "", "", "", res])
            continue
        rows.append([
            name, fmt(res.statistic), fmt(res.pvalue),
            fmt(res.critical_values["1%"]), fmt(res.critical_values["5%"]),
            fmt(res.critical_values["10%"]), f"lag {res.used_lag}",
        ])
    return render_table(
        title,
        ["Variable", "t-Statistic", "Prob", "CV 1%", "CV 5%", "CV 10%", "Note"],
        rows,
    )


def adf_csv(path, results: dict[str, ADFResult | str]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["variable", "t_statistic", "p_value", "cv_1pct", "cv_5pct",
                    "cv_10pct", "used_lag", "nobs", "error"])
        for name, res in results.items():
            if isinstance(res, str):
                w.writerow([name, "", "", "", "", "", "", "", res])
            else:
                w.writerow([
                    name, "%.10g" % res.statistic, "%.10g" % res.pvalue,
                    "%.10g" % res.critical_values["1%"],
                    "%.10g" % res.critical_values["5%"],
                    "%.10g" % res.critical_values["10%"],
                    res.used_lag, res.nobs, "",
                ])


def bpg_table(title: str, bpg: BPGResult) -> str:
    rows = [
        ["F-statistic", fmt(bpg.f_stat)],
        [f"Prob. F({bpg.df}, {bpg.nobs - bpg.df - 1})", fmt(bpg.f_pvalue)],
        ["Obs*R-squared", fmt(bpg.obs_r2)],
        [f"Prob. Chi-Square({bpg.df})", fmt(bpg.obs_r2_pvalue)],
        ["Scaled explained SS", fmt(bpg.scaled_ess)],
        [f"Prob. Chi-Square({bpg.df})", fmt(bpg.scaled_ess_pvalue)],
    ]
    return render_table(title, ["Test Statistic", "Value"], rows)


def bpg_csv(path, bpg: BPGResult) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["statistic", "value", "p_value", "df"])
        w.writerow(["f", "%.10g" % bpg.f_stat, "%.10g" % bpg.f_pvalue, bpg.df])
        w.writerow(["obs_r2", "%.10g" % bpg.obs_r2, "%.10g" % bpg.obs_r2_pvalue, bpg.df])
        w.writerow(["scaled_ess", "%.10g" % bpg.scaled_ess,
                    "%.10g" % bpg.scaled_ess_pvalue, bpg.df])


def ljung_box_table(title: str, rows_in: list[LjungBoxRow]) -> str:
    rows = [[str(r.lag), fmt(r.q_stat), fmt(r.pvalue)] for r in rows_in]
    return render_table(title, ["Lag", "Q-Statistic", "P-Value"], rows)


def ljung_box_csv(path, rows_in: list[LjungBoxRow]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["lag", "q_statistic", "p_value"])
        for r in rows_in:
            w.writerow([r.lag, "%.10g" % r.q_stat, "%.10g" % r.pvalue])


def aic_ranking_table(title: str, ranking: list[tuple[LagSpec, float]]) -> str:
    rows = [
        [str(i + 1), str(spec), "%.6f" % aic_val]
        for i, (spec, aic_val) in enumerate(ranking)
    ]
    return render_table(title, ["Rank", "Lag orders", "AIC"], rows)


def aic_ranking_csv(path, ranking: list[tuple[LagSpec, float]]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["rank", "lag_orders", "aic"])
        for i, (spec, aic_val) in enumerate(ranking):
            w.writerow([i + 1, str(spec), "%.10g" % aic_val])


def horizon_table(title: str, rows_in: list[dict]) -> str:
    rows = []
    for r in rows_in:
        rows.append([
            f"n={r['horizon']}", r["variant"], fmt(r["const"]),
            fmt(r["tone"]) + stars(r["tone_p"], r["levels"]),
            fmt(r["tone_se"]), fmt(r["tone_p"]), fmt(r["r2"]), str(r["obs"]),
        ])
    return render_table(
        title,
        ["Day", "Variant", "Constant", "Tone", "SE(Tone)", "Prob.", "R2", "Obs."],
        rows,
    )


def horizon_csv(path, rows_in: list[dict]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["horizon", "variant", "const", "tone", "tone_se", "tone_p",
                    "r2", "obs"])
        for r in rows_in:
            w.writerow([r["horizon"], r["variant"], "%.10g" % r["const"],
                        "%.10g" % r["tone"], "%.10g" % r["tone_se"],
                        "%.10g" % r["tone_p"], "%.10g" % r["r2"], r["obs"]])
