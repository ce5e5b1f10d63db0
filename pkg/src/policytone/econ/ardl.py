"""ARDL estimation and exhaustive AIC lag search.

A LagSpec orders the model: the dependent variable first with lag order
p >= 1 (lags 1..p enter as regressors, the contemporaneous value is the
regressand) and each exogenous variable with order q >= 0 (lags 0..q all
enter).  ``ardl_search`` enumerates the full grid {1..p_max} x
prod{0..q_max,j}; every candidate is estimated on the same rows (the
caller aligns the data at the grid's maximum lags), so AIC values are
comparable.  Ranking is ascending AIC with ties broken by the
lexicographically smallest lag vector, which makes the result
deterministic and independent of evaluation order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from ..errors import ValidationError
from ..timeseries import Frame, lag_name
from .regression import RegressionResult, ols

DEFAULT_GRID_CAP = 100_000


@dataclass(frozen=True)
class LagSpec:
    """Per-variable lag orders, dependent variable first."""

    entries: tuple[tuple[str, int], ...]

    def __init__(self, entries):
        object.__setattr__(self, "entries", tuple((str(n), int(k)) for n, k in entries))
        if not self.entries:
            raise ValidationError("lag spec needs at least the dependent variable")
        names = [n for n, _ in self.entries]
        if len(set(names)) != len(names):
            raise ValidationError("lag spec has duplicate variable names")
        dep_name, dep_order = self.entries[0]
        if dep_order < 1:
            raise ValidationError(
                f"dependent variable {dep_name!r} needs lag order >= 1, got {dep_order}"
            )
        for name, order in self.entries[1:]:
            if order < 0:
                raise ValidationError(f"negative lag order for {name!r}")

    @property
    def dependent(self) -> tuple[str, int]:
        return self.entries[0]

    @property
    def exogenous(self) -> tuple[tuple[str, int], ...]:
        return self.entries[1:]

    def orders(self) -> tuple[int, ...]:
        return tuple(k for _, k in self.entries)

    def design_columns(self) -> list[str]:
        """Regressor column names (without the intercept)."""
        dep_name, p = self.dependent
        cols = [lag_name(dep_name, k) for k in range(1, p + 1)]
        for name, q in self.exogenous:
            cols.extend(lag_name(name, k) for k in range(q + 1))
        return cols

    def n_regressors(self) -> int:
        """Design width including the intercept."""
        return 1 + len(self.design_columns())

    def __str__(self) -> str:
        return ", ".join(f"{n}:{k}" for n, k in self.entries)


def ardl_fit(data: Frame, spec: LagSpec) -> RegressionResult:
    """OLS on [1, y(-1..p), x_j(-0..q_j)] taken from an aligned frame.

    The frame must already contain the lag columns (``name(-k)``); rows
    are used as-is so candidates sharing a frame share a sample.
    """
    dep_name, _ = spec.dependent
    y = data.column(dep_name)
    col_names = spec.design_columns()
    missing = [c for c in col_names if c not in data.columns]
    if missing:
        raise ValidationError(
            "aligned data lacks column(s): " + ", ".join(missing)
        )
    X = np.column_stack(
        [np.ones(len(data))] + [data.columns[c] for c in col_names]
    )
    if np.isnan(X).any() or np.isnan(y).any():
        raise ValidationError("aligned data contains missing cells")
    return ols(y, X, ["const"] + col_names)


def ardl_search(data: Frame, max_lags: LagSpec, top_k: int = 20,
                grid_cap: int = DEFAULT_GRID_CAP) -> list[tuple[LagSpec, float]]:
    """Exhaustively rank every lag combination by AIC.

    Returns the best ``top_k`` (LagSpec, AIC) pairs, ascending AIC, ties
    broken by the lexicographically smallest lag vector.
    """
    if top_k < 1:
        raise ValidationError("top_k must be >= 1")
    dep_name, p_max = max_lags.dependent
    grid_size = p_max
    for _, q in max_lags.exogenous:
        grid_size *= q + 1
    if grid_size > grid_cap:
        raise ValidationError(
            f"lag grid has {grid_size} candidates, exceeding the cap of "
            f"{grid_cap}; reduce the maximum lags or raise the cap"
        )

    exo_names = [n for n, _ in max_lags.exogenous]
    ranges = [range(1, p_max + 1)] + [range(q + 1) for _, q in max_lags.exogenous]
    scored: list[tuple[float, tuple[int, ...], LagSpec]] = []
    for orders in itertools.product(*ranges):
        spec = LagSpec(
            [(dep_name, orders[0])]
            + [(n, q) for n, q in zip(exo_names, orders[1:])]
        )
        try:
            result = ardl_fit(data, spec)
        except ValidationError as exc:
            # Deep lag combinations can be collinear (duplicated or
            # deterministic regressors); such candidates are not valid
            # models and drop out of the ranking.
            if "rank deficient" in str(exc):
                continue
            raise
        scored.append((result.aic, orders, spec))
    if not scored:
        raise ValidationError("every candidate in the lag grid is rank deficient")
    return [(spec, aic_val) for aic_val, _, spec in rank_candidates(scored)[:top_k]]


def rank_candidates(scored):
    """Sort (aic, lag-order vector, spec) triples: ascending AIC, ties
    broken by the lexicographically smallest lag vector."""
    return sorted(scored, key=lambda item: (item[0], item[1]))
