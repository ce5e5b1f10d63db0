"""Dated numeric series: frames, event-window returns, lag alignment.

A Frame is a strictly-date-ordered table of named float columns with NaN
for missing cells.  Returns are simple (not log) returns.  Publication
dates that fall on non-trading days roll forward to the next trading day
for the event close and backward for the baseline close; holidays are
whatever gaps the price file contains.

Lag column naming follows the ``name(-k)`` convention, so an aligned
dataset can be fed straight into the regression tables.
"""

from __future__ import annotations

import csv
import datetime
import math
from dataclasses import dataclass

import numpy as np

from .corpus import ToneSeries
from .errors import ArithmeticDomainError, DataRangeError, ValidationError

FREQUENCIES = ("daily", "monthly", "event")


def lag_name(name: str, k: int) -> str:
    return name if k == 0 else f"{name}(-{k})"


@dataclass
class Frame:
    index: list[datetime.date]
    columns: dict[str, np.ndarray]
    frequency: str = "daily"

    def __post_init__(self):
        if self.frequency not in FREQUENCIES:
            raise ValidationError(f"unknown frequency tag: {self.frequency!r}")
        n = len(self.index)
        if any(b <= a for a, b in zip(self.index, self.index[1:])):
            raise ValidationError("frame index must be strictly increasing")
        for name, col in self.columns.items():
            col = np.asarray(col, dtype=float)
            if col.shape != (n,):
                raise ValidationError(
                    f"column {name!r} has length {col.shape}, index has {n}"
                )
            self.columns[name] = col

    def __len__(self) -> int:
        return len(self.index)

    @property
    def names(self) -> list[str]:
        return list(self.columns)

    def column(self, name: str) -> np.ndarray:
        try:
            return self.columns[name]
        except KeyError:
            raise DataRangeError(f"frame has no column {name!r}") from None

    def select(self, names: list[str]) -> "Frame":
        return Frame(list(self.index), {n: self.column(n).copy() for n in names},
                     self.frequency)

    def to_csv(self, path) -> None:
        """Serialize with 10 significant digits; missing cells are blank."""
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["date"] + self.names)
            for i, date in enumerate(self.index):
                row = [date.isoformat()]
                for name in self.names:
                    v = self.columns[name][i]
                    row.append("" if math.isnan(v) else "%.10g" % v)
                w.writerow(row)


def load_frame(path, frequency: str) -> Frame:
    """Load a CSV whose first column is ISO dates and the rest numeric."""
    rows = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if not header or header[0].strip().lower() != "date":
            raise ValidationError(f"{path}: first column header must be 'date'")
        names = [h.strip() for h in header[1:]]
        if len(set(names)) != len(names):
            raise ValidationError(f"{path}: duplicate column names")
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                date = datetime.date.fromisoformat(row[0].strip())
            except ValueError as exc:
                raise ValidationError(f"{path}:{lineno}: bad date {row[0]!r}") from exc
            values = []
            for j, cell in enumerate(row[1:]):
                cell = cell.strip()
                if cell == "":
                    values.append(math.nan)
                    continue
                try:
                    values.append(float(cell))
                except ValueError as exc:
                    raise ValidationError(
                        f"{path}:{lineno}: column {names[j]!r}: "
                        f"cannot parse {cell!r}"
                    ) from exc
            if len(values) != len(names):
                raise ValidationError(f"{path}:{lineno}: expected {len(names)} values")
            rows.append((date, values))
    dates = [d for d, _ in rows]
    if len(set(dates)) != len(dates):
        dupes = sorted({d for d in dates if dates.count(d) > 1})
        raise ValidationError(f"{path}: duplicate dates: {dupes[0].isoformat()}")
    rows.sort(key=lambda r: r[0])
    data = np.array([v for _, v in rows], dtype=float).reshape(len(rows), len(names))
    return Frame([d for d, _ in rows], {n: data[:, j] for j, n in enumerate(names)},
                 frequency)


@dataclass(frozen=True)
class EventReturn:
    event_date: datetime.date
    horizon: int
    value: float


def lag(series: np.ndarray, k: int) -> np.ndarray:
    """Shift a column down by k observations; the first k become NaN."""
    series = np.asarray(series, dtype=float)
    if k < 0:
        raise DataRangeError("lag order must be >= 0")
    if k >= series.size:
        raise DataRangeError(f"lag {k} >= series length {series.size}")
    if k == 0:
        return series.copy()
    out = np.empty_like(series)
    out[:k] = np.nan
    out[k:] = series[:-k]
    return out


def _event_anchor(prices: Frame, close: np.ndarray, event_date: datetime.date):
    """Indices of the event close (first trading day >= date) and baseline
    close (last trading day before it)."""
    idx = prices.index
    lo, hi = 0, len(idx)
    while lo < hi:
        mid = (lo + hi) // 2
        if idx[mid] < event_date:
            lo = mid + 1
        else:
            hi = mid
    if lo >= len(idx):
        raise DataRangeError(
            f"event {event_date.isoformat()} is after the last price date"
        )
    if lo == 0:
        raise DataRangeError(
            f"no trading day before event {event_date.isoformat()}"
        )
    if math.isnan(close[lo]) or math.isnan(close[lo - 1]):
        raise ValidationError(
            f"missing close around event {event_date.isoformat()}"
        )
    return lo, lo - 1


def event_return(prices: Frame, event_date: datetime.date,
                 close_column: str = "close") -> EventReturn:
    """Same-day simple return around one publication date."""
    return cumulative_return(prices, event_date, 1, close_column)


def cumulative_return(prices: Frame, event_date: datetime.date, n: int,
                      close_column: str = "close") -> EventReturn:
    """Simple return from the pre-event close to the close n-1 trading
    days after the event day; n=1 is the same-day event return."""
    if n < 1:
        raise DataRangeError(f"horizon must be >= 1, got {n}")
    close = prices.column(close_column)
    i, i_prev = _event_anchor(prices, close, event_date)
    i_end = i + n - 1
    if i_end >= len(prices):
        raise DataRangeError(
            f"need {n} trading days at/after {event_date.isoformat()}, "
            f"have {len(prices) - i}"
        )
    if math.isnan(close[i_end]):
        raise ValidationError(f"missing close {prices.index[i_end].isoformat()}")
    base = close[i_prev]
    if base == 0.0:
        raise ArithmeticDomainError(
            f"zero close before event {event_date.isoformat()}"
        )
    return EventReturn(event_date, n, (close[i_end] - base) / base)


@dataclass(frozen=True)
class ColumnStats:
    observations: int
    mean: float
    std: float
    min: float
    max: float


@dataclass(frozen=True)
class SummaryStats:
    per_column: dict[str, ColumnStats]


def summary_stats(frame: Frame) -> SummaryStats:
    """Per-column n / mean / sample std / min / max over non-missing cells."""
    out = {}
    for name in frame.names:
        col = frame.columns[name]
        vals = col[~np.isnan(col)]
        if vals.size < 2:
            raise ValidationError(
                f"column {name!r} needs >= 2 non-missing values, has {vals.size}"
            )
        out[name] = ColumnStats(
            observations=int(vals.size),
            mean=float(np.mean(vals)),
            std=float(np.std(vals, ddof=1)),
            min=float(np.min(vals)),
            max=float(np.max(vals)),
        )
    return SummaryStats(out)


def lag_frame(frame: Frame, orders: list[tuple[str, int]]) -> Frame:
    """Materialize ``name(-k)`` columns by in-frame shifting and trim the
    rows lost to the deepest lag.  All listed variables stay at lag 0 too."""
    max_lag = max((k for _, k in orders), default=0)
    if max_lag >= len(frame):
        raise DataRangeError("maximum lag exceeds frame length")
    cols: dict[str, np.ndarray] = {}
    for name, order in orders:
        base = frame.column(name)
        for k in range(order + 1):
            cols[lag_name(name, k)] = lag(base, k)
    index = list(frame.index[max_lag:])
    trimmed = {n: c[max_lag:] for n, c in cols.items()}
    return Frame(index, trimmed, frame.frequency)


@dataclass
class AlignedDataset:
    """Event-frequency regression dataset plus assembly bookkeeping."""

    frame: Frame
    horizon: int
    n_events: int
    n_undefined_tone: int
    n_dropped: int
    dependent: str = "returns"


def _month_key(date: datetime.date) -> int:
    return date.year * 12 + date.month - 1


def align_event_dataset(tone_series: ToneSeries, controls: Frame, prices: Frame,
                        lag_spec, horizon: int = 1) -> AlignedDataset:
    """Assemble the per-event regression dataset.

    One row per publication event with a defined tone.  The dependent
    column is the horizon-n cumulative return.  Lags of tone and of the
    dependent are in event time (k publication events earlier); lags of a
    monthly control take the value k calendar months before the event
    month.  Rows with any missing cell are dropped and counted.
    """
    from .econ.ardl import LagSpec

    if not isinstance(lag_spec, LagSpec):
        lag_spec = LagSpec(lag_spec)
    if horizon < 1:
        raise DataRangeError(f"horizon must be >= 1, got {horizon}")

    defined = [e for e in tone_series.entries if e.defined]
    n_undefined = len(tone_series.entries) - len(defined)
    if not defined:
        raise ValidationError("tone series has no defined entries")

    dep_name = lag_spec.dependent[0]
    orders = dict(lag_spec.entries)
    control_names = [n for n, _ in lag_spec.exogenous if n != "tone"]
    for name in control_names:
        if name not in controls.columns:
            raise ValidationError(f"controls frame lacks column {name!r}")
    month_row = {}
    for i, d in enumerate(controls.index):
        key = _month_key(d)
        if key in month_row:
            raise ValidationError(
                f"controls frame has two rows in month {d.year}-{d.month:02d}"
            )
        month_row[key] = i

    dates = [e.publish_date for e in defined]
    tone_vals = np.array([e.value for e in defined])
    returns = np.array(
        [cumulative_return(prices, d, horizon).value for d in dates]
    )

    cols: dict[str, np.ndarray] = {}
    cols[dep_name] = returns
    for k in range(1, orders[dep_name] + 1):
        cols[lag_name(dep_name, k)] = lag(returns, k)
    if "tone" in orders:
        for k in range(orders["tone"] + 1):
            cols[lag_name("tone", k)] = lag(tone_vals, k)
    for name in control_names:
        base = controls.column(name)
        for k in range(orders[name] + 1):
            vals = np.empty(len(dates))
            for i, d in enumerate(dates):
                row = month_row.get(_month_key(d) - k)
                vals[i] = base[row] if row is not None else math.nan
            cols[lag_name(name, k)] = vals

    data = np.column_stack(list(cols.values()))
    keep = ~np.isnan(data).any(axis=1)
    n_dropped = int(np.sum(~keep))
    if not np.any(keep):
        raise ValidationError("no complete rows after lag construction")
    index = [d for d, k in zip(dates, keep) if k]
    frame = Frame(index, {n: c[keep] for n, c in cols.items()}, "event")
    return AlignedDataset(
        frame=frame,
        horizon=horizon,
        n_events=len(defined),
        n_undefined_tone=n_undefined,
        n_dropped=n_dropped,
        dependent=dep_name,
    )
