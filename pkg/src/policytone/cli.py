"""Command-line front end: tone, adf, estimate, report.

Each command reads the run configuration (``--config``, or the
POLICYTONE_CONFIG environment variable), applies flag overrides, and
writes its artifacts into the output directory.  Exit codes: 0 success,
1 validation failure, 2 I/O failure.
"""

from __future__ import annotations

import csv
import sys
from dataclasses import dataclass
from pathlib import Path

import click
import numpy as np

from . import __version__, plots, report
from .config import CONFIG_ENV_VAR, RunConfig, load_config, parse_lag_spec
from .corpus import (
    default_stopwords,
    documents_per_year,
    load_corpus,
    load_stopwords,
    score_corpus,
)
from .econ.ardl import LagSpec, ardl_fit, ardl_search
from .econ.diagnostics import (
    DiagnosticsReport,
    breusch_pagan_godfrey,
    ljung_box,
)
from .econ.regression import ols
from .econ.unitroot import adf_test
from .errors import InputError, PolicytoneError, ValidationError
from .lexicon import corpus_polarity_shares, load_lexicon
from .timeseries import align_event_dataset, load_frame, summary_stats


def _stoplist(config: RunConfig):
    if config.stopwords:
        return load_stopwords(config.stopwords)
    return default_stopwords()


def _corpus_inputs(config: RunConfig):
    config.require("documents_dir", "lexicon_positive", "lexicon_negative")
    stoplist = _stoplist(config)
    lexicon = load_lexicon(config.lexicon_positive, config.lexicon_negative)
    docs = load_corpus(config.documents_dir, stoplist, config.manifest)
    if not docs:
        raise ValidationError(f"no documents found in {config.documents_dir}")
    return docs, lexicon


def _out_dir(config: RunConfig) -> Path:
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_tone(config: RunConfig):
    """Score the corpus; write tone series, per-document counts, plot."""
    docs, lexicon = _corpus_inputs(config)
    series = score_corpus(docs, lexicon)
    out = _out_dir(config)

    series.to_csv(out / "tone.csv")
    with open(out / "counts.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["id", "date", "positive", "negative", "total_tokens"])
        for doc in docs:
            w.writerow([doc.id, doc.publish_date.isoformat(), doc.counts.positive,
                        doc.counts.negative, doc.counts.total_tokens])

    try:
        shares = corpus_polarity_shares([d.counts for d in docs])
    except ValidationError:
        # A corpus with no sentiment-bearing tokens still gets its (all
        # undefined) tone series; only the share split is unavailable.
        shares = None
    plots.line_chart(
        out / "tone.svg", "Tone of policy communication",
        [e.publish_date.isoformat() for e in series.entries],
        [e.value for e in series.entries],
    )
    return series, shares, docs


def _load_market(config: RunConfig):
    config.require("prices", "controls")
    prices = load_frame(config.prices, "daily")
    controls = load_frame(config.controls, "monthly")
    return prices, controls


def _event_level_spec(max_spec: LagSpec) -> LagSpec:
    """Lag-0 alignment (dependent order 1) used for ADF rows and summaries."""
    return LagSpec([(max_spec.dependent[0], 1)] + [(n, 0) for n, _ in max_spec.exogenous])


def cmd_adf(config: RunConfig):
    """Unit-root table across returns, tone and the controls."""
    docs, lexicon = _corpus_inputs(config)
    series = score_corpus(docs, lexicon)
    prices, controls = _load_market(config)
    max_spec = config.lag_spec()
    aligned = align_event_dataset(series, controls, prices,
                                  _event_level_spec(max_spec), horizon=1)

    results: dict[str, object] = {}
    names = [max_spec.dependent[0]] + [n for n, _ in max_spec.exogenous]
    for name in names:
        col = aligned.frame.column(name) if name in aligned.frame.columns else None
        if col is None:
            results[name] = "column missing from aligned dataset"
            continue
        try:
            results[name] = adf_test(col, config.adf_max_lag, config.adf_spec)
        except PolicytoneError as exc:
            results[name] = str(exc)

    out = _out_dir(config)
    text = report.adf_table("Unit-root (ADF) test results", results)
    (out / "adf.txt").write_text(text, "utf-8")
    report.adf_csv(out / "adf.csv", results)
    return results


@dataclass
class EstimateArtifacts:
    baseline: object
    with_dep_lags: object
    with_controls: object
    ardl_spec: LagSpec
    ardl: object
    ranking: list
    diagnostics: DiagnosticsReport
    horizon_rows: list
    summary: object
    aligned_full: object
    dropped_note: str


def _fit_named(data, dep: str, regressors: list[str]):
    y = data.column(dep)
    X = np.column_stack([np.ones(len(data))] + [data.column(c) for c in regressors])
    return ols(y, X, ["const"] + regressors)


def cmd_estimate(config: RunConfig):
    """Estimate the model ladder and diagnostics; write the main report."""
    docs, lexicon = _corpus_inputs(config)
    series = score_corpus(docs, lexicon)
    prices, controls = _load_market(config)
    levels = config.levels()
    max_spec = config.lag_spec()
    dep = max_spec.dependent[0]
    p_base = max_spec.dependent[1]
    exo_names = [n for n, _ in max_spec.exogenous]
    control_names = [n for n in exo_names if n != "tone"]

    # Base tables share one sample trimmed at the dependent-lag depth.
    base_spec = LagSpec([(dep, p_base)] + [(n, 0) for n, _ in max_spec.exogenous])
    base = align_event_dataset(series, controls, prices, base_spec, horizon=1)
    dep_lags = [f"{dep}(-{k})" for k in range(1, p_base + 1)]
    baseline = _fit_named(base.frame, dep, ["tone"])
    with_dep = _fit_named(base.frame, dep, ["tone"] + dep_lags)
    with_controls = _fit_named(base.frame, dep, ["tone"] + control_names + dep_lags)

    # Full ARDL: align at the grid maxima, search, refit the winner.
    full = align_event_dataset(series, controls, prices, max_spec,
                               horizon=config.horizon)
    if len(full.frame) < max_spec.n_regressors() + 5:
        raise ValidationError(
            f"aligned dataset has {len(full.frame)} rows; need at least "
            f"{max_spec.n_regressors() + 5} for the ARDL grid"
        )
    ranking = ardl_search(full.frame, max_spec, config.top_k, config.grid_cap)
    best_spec = ranking[0][0]
    ardl_res = ardl_fit(full.frame, best_spec)

    X_best = np.column_stack(
        [np.ones(len(full.frame))]
        + [full.frame.column(c) for c in best_spec.design_columns()]
    )
    bpg = breusch_pagan_godfrey(ardl_res, X_best)
    feasible = [m for m in config.lb_lags() if m < ardl_res.resid.size / 2]
    lb_rows = ljung_box(ardl_res.resid, feasible)
    diagnostics = DiagnosticsReport(bpg=bpg, ljung_box=tuple(lb_rows))

    # Horizon comparison in the cumulative-return shape (n = 2, 3).
    horizon_rows = []
    for n in (2, 3):
        al = align_event_dataset(series, controls, prices,
                                 _event_level_spec(max_spec), horizon=n)
        for variant, regs in (
            ("without controls", ["tone"]),
            ("with controls", ["tone"] + control_names),
        ):
            res = _fit_named(al.frame, dep, regs)
            i = res.names.index("tone")
            horizon_rows.append({
                "horizon": n, "variant": variant,
                "const": float(res.params[0]),
                "tone": float(res.params[i]), "tone_se": float(res.bse[i]),
                "tone_p": float(res.pvalues[i]), "r2": res.r2,
                "obs": res.nobs, "levels": levels,
            })

    stats = summary_stats(base.frame.select([dep, "tone"] + control_names))
    dropped_note = (
        f"events={full.n_events} undefined_tone_excluded={full.n_undefined_tone} "
        f"rows_dropped_by_lags={full.n_dropped} rows_used={len(full.frame)}"
    )

    out = _out_dir(config)
    sections = [
        report.summary_table("Summary statistics (event sample)", stats),
        report.regression_table("OLS: returns on tone", baseline, levels),
        report.regression_table(
            f"OLS: returns on tone and {p_base} dependent lags", with_dep, levels),
        report.regression_table(
            "OLS: returns on tone, controls and dependent lags", with_controls,
            levels),
        report.aic_ranking_table(
            f"Top {len(ranking)} lag specifications by AIC", ranking),
        report.regression_table(
            f"ARDL ({best_spec}) on horizon-{config.horizon} returns",
            ardl_res, levels),
        report.bpg_table("Heteroskedasticity: Breusch-Pagan-Godfrey", bpg),
        report.ljung_box_table("Ljung-Box Q-test on ARDL residuals", lb_rows),
        report.horizon_table("Tone and cumulative returns (n = 2, 3)",
                             horizon_rows),
        "Sample assembly: " + dropped_note + "\n",
    ]
    (out / "estimate.txt").write_text("\n".join(sections), "utf-8")

    report.summary_csv(out / "summary_stats.csv", stats)
    report.regression_csv(out / "ols_baseline.csv", baseline)
    report.regression_csv(out / "ols_dep_lags.csv", with_dep)
    report.regression_csv(out / "ols_controls.csv", with_controls)
    report.regression_csv(out / "ardl_best.csv", ardl_res)
    report.aic_ranking_csv(out / "aic_top.csv", ranking)
    report.bpg_csv(out / "bpg.csv", bpg)
    report.ljung_box_csv(out / "ljung_box.csv", lb_rows)
    report.horizon_csv(out / "horizons.csv", horizon_rows)
    plots.rank_chart(out / "aic_top.svg", "Lag specifications ranked by AIC",
                     [a for _, a in ranking])

    return EstimateArtifacts(
        baseline=baseline, with_dep_lags=with_dep, with_controls=with_controls,
        ardl_spec=best_spec, ardl=ardl_res, ranking=ranking,
        diagnostics=diagnostics, horizon_rows=horizon_rows, summary=stats,
        aligned_full=full, dropped_note=dropped_note,
    )


def cmd_report(config: RunConfig):
    """Full pipeline: tone + adf + estimate + consolidated document."""
    series, shares, docs = cmd_tone(config)
    adf_results = cmd_adf(config)
    artifacts = cmd_estimate(config)
    out = _out_dir(config)

    per_year = documents_per_year(docs)
    plots.bar_chart(out / "docs_per_year.svg", "Documents per year",
                    [str(y) for y in per_year], list(per_year.values()))

    header = [
        "policy-tone analysis report",
        f"tool version: {__version__}",
        f"config hash: {config.config_hash()}",
        f"documents: {len(docs)}  tone entries: {len(series.entries)}",
        "documents per year: "
        + ", ".join(f"{y}:{c}" for y, c in per_year.items()),
        ("polarity shares: positive {:.2f}%  negative {:.2f}%".format(*shares)
         if shares else "polarity shares: undefined (no sentiment tokens)"),
        f"sample assembly: {artifacts.dropped_note}",
        "",
    ]
    body = (out / "estimate.txt").read_text("utf-8")
    adf_text = (out / "adf.txt").read_text("utf-8")
    (out / "report.txt").write_text(
        "\n".join(header) + adf_text + "\n" + body, "utf-8"
    )
    return artifacts


def _apply_overrides(config: RunConfig, out, seed, horizon, max_lags, top_k):
    if out is not None:
        config.output_dir = str(Path(out).resolve())
    if seed is not None:
        config.seed = seed
    if horizon is not None:
        config.horizon = horizon
    if max_lags is not None:
        parse_lag_spec(max_lags)
        config.max_lags = max_lags
    if top_k is not None:
        config.top_k = top_k
    return config


def _run(command, config_path, out, seed, horizon, max_lags, top_k):
    try:
        if config_path is None:
            raise ValidationError(
                f"no config given; pass --config or set {CONFIG_ENV_VAR}"
            )
        config = load_config(config_path)
        _apply_overrides(config, out, seed, horizon, max_lags, top_k)
        config.validate()
        command(config)
    except InputError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except PolicytoneError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


def _common_options(fn):
    fn = click.option("--config", "config_path", envvar=CONFIG_ENV_VAR,
                      type=click.Path(), help="Run configuration file.")(fn)
    fn = click.option("--out", type=click.Path(), help="Output directory.")(fn)
    fn = click.option("--seed", type=int, default=None)(fn)
    fn = click.option("--horizon", type=int, default=None)(fn)
    fn = click.option("--max-lags", type=str, default=None,
                      help="Lag spec, e.g. returns:4,tone:3,...")(fn)
    fn = click.option("--top-k", type=int, default=None)(fn)
    return fn


@click.group()
@click.version_option(__version__)
def main():
    """Quantify policy-document tone and estimate its market impact."""


@main.command("tone")
@_common_options
def tone_command(config_path, out, seed, horizon, max_lags, top_k):
    """Score the document corpus and write the tone series."""

    def run(config):
        series, shares, _ = cmd_tone(config)
        line = f"scored {len(series.entries)} dates"
        if shares:
            line += (f"; positive share {shares[0]:.2f}%, "
                     f"negative share {shares[1]:.2f}%")
        else:
            line += "; polarity shares undefined (no sentiment tokens)"
        click.echo(line)

    _run(run, config_path, out, seed, horizon, max_lags, top_k)


@main.command("adf")
@_common_options
def adf_command(config_path, out, seed, horizon, max_lags, top_k):
    """Run unit-root tests on every model variable."""

    def run(config):
        results = cmd_adf(config)
        click.echo((Path(config.output_dir) / "adf.txt").read_text("utf-8"))
        bad = sum(1 for r in results.values() if isinstance(r, str))
        if bad:
            click.echo(f"note: {bad} variable(s) could not be tested")

    _run(run, config_path, out, seed, horizon, max_lags, top_k)


@main.command("estimate")
@_common_options
def estimate_command(config_path, out, seed, horizon, max_lags, top_k):
    """Estimate the OLS/ARDL model ladder with diagnostics."""

    def run(config):
        artifacts = cmd_estimate(config)
        click.echo(
            f"ARDL winner: {artifacts.ardl_spec}  "
            f"AIC {artifacts.ranking[0][1]:.4f}  ({artifacts.dropped_note})"
        )

    _run(run, config_path, out, seed, horizon, max_lags, top_k)


@main.command("report")
@_common_options
def report_command(config_path, out, seed, horizon, max_lags, top_k):
    """Run the complete pipeline and write the consolidated report."""

    def run(config):
        cmd_report(config)
        click.echo(f"report written to {Path(config.output_dir) / 'report.txt'}")

    _run(run, config_path, out, seed, horizon, max_lags, top_k)


if __name__ == "__main__":
    main()
