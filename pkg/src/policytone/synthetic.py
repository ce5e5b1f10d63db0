"""Synthetic dataset generator with planted effects.

Builds a complete, self-consistent input tree (documents + manifest,
lexicon files, daily prices, monthly controls, ready-to-run config) in
which the tone effect on same-day event returns is known exactly:

* Document text is assembled so that the counting pipeline recovers the
  planted tone value bit-for-bit (the sentiment words appear an exact
  number of times; everything else is neutral filler, stopwords, dates
  and punctuation noise).
* Prices follow a multiplicative random walk of "fundamental" value; on
  event days the close carries a signal bump theta*tone plus small
  responses to recent monthly control changes.  In ``persistent`` mode
  the bump stays in the level; in transient mode it vanishes the next
  trading day, so cumulative returns over 2+ days contain no tone signal
  at all (true horizon-2/3 coefficient exactly zero).
* Control responses are differences of lagged monthly levels, which in
  level terms means coefficient pairs (+c at lag a, -c at lag a+1), all
  inside the default search grid.

Everything is driven by one integer seed; identical seeds give
byte-identical trees.
"""

from __future__ import annotations

import csv
import datetime
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

POSITIVE_TERMS = [
    "gain", "gains", "improve", "improved", "improvement", "strong",
    "strengthen", "growth", "progress", "benefit", "boost", "stable",
    "stability", "success", "successful", "upturn", "rebound", "resilient",
    "robust", "favourable",
]
NEGATIVE_TERMS = [
    "loss", "losses", "decline", "declined", "weak", "weaken",
    "deterioration", "adverse", "pressure", "contraction", "deficit",
    "crisis", "slowdown", "stress", "volatile", "volatility", "shortfall",
    "downturn", "erosion", "instability",
]
NEUTRAL_FILLER = [
    "committee", "inflation", "exports", "imports", "policy", "rate",
    "liquidity", "reserves", "fiscal", "monetary", "outlook", "sector",
    "credit", "exchange", "market", "balance", "account", "projection",
    "assessment", "horizon", "quarter", "survey", "energy", "commodity",
    "remittances", "revenue", "expenditure", "target", "corridor", "output",
]

# (lag a, coefficient c): event return responds c * (x[m-a] - x[m-a-1]).
CONTROL_EFFECTS = {
    "kibor": (0, -0.006),
    "cci": (1, 0.002),
    "cpi": (2, 0.25),
    "epu": (0, -0.00015),
    "ipi": (1, 0.0002),
}


@dataclass
class SyntheticSpec:
    n_events: int = 300
    theta: float = 0.03
    persistent: bool = True
    seed: int = 20160130
    start_year: int = 2016
    daily_vol: float = 0.005
    sentiment_words_per_doc: int = 40
    horizon_buffer: int = 6


@dataclass
class MarketData:
    """In-memory market piece of a synthetic dataset (no documents)."""

    spec: SyntheticSpec
    event_dates: list[datetime.date]
    tones: np.ndarray
    pos_counts: np.ndarray
    neg_counts: np.ndarray
    trading_days: list[datetime.date]
    closes: np.ndarray
    months: list[datetime.date]
    controls: dict[str, np.ndarray]
    rng: np.random.Generator


@dataclass
class SyntheticDataset:
    out_dir: Path
    config_path: Path
    spec: SyntheticSpec
    event_dates: list[datetime.date]
    tones: np.ndarray
    control_effects: dict[str, tuple[int, float]] = field(
        default_factory=lambda: dict(CONTROL_EFFECTS)
    )


def _trading_days(start: datetime.date, n: int) -> list[datetime.date]:
    days = []
    d = start
    while len(days) < n:
        if d.weekday() < 5:
            days.append(d)
        d += datetime.timedelta(days=1)
    return days


def _month_sequence(start_year: int, months: int) -> list[datetime.date]:
    out = []
    y, m = start_year, 1
    for _ in range(months):
        out.append(datetime.date(y, m, 1))
        m += 1
        if m == 13:
            y, m = y + 1, 1
    return out


def _make_controls(rng: np.random.Generator, months: list[datetime.date]):
    n = len(months)
    kibor = np.empty(n)
    kibor[0] = 6.0
    steps = rng.normal(0.0, 0.35, n)
    for t in range(1, n):
        kibor[t] = max(0.5, kibor[t - 1] + steps[t])
    cci = np.empty(n)
    cci[0] = 42.0
    for t in range(1, n):
        cci[t] = 42.0 + 0.8 * (cci[t - 1] - 42.0) + rng.normal(0.0, 1.2)
    cpi = np.empty(n)
    cpi[0] = 0.13
    for t in range(1, n):
        cpi[t] = max(0.01, cpi[t - 1] + rng.normal(0.0, 0.01))
    epu = np.empty(n)
    epu[0] = 128.0
    for t in range(1, n):
        epu[t] = max(5.0, epu[t - 1] + rng.normal(0.0, 12.0))
    ipi = np.empty(n)
    ipi[0] = -3.0
    for t in range(1, n):
        ipi[t] = -3.0 + 0.5 * (ipi[t - 1] + 3.0) + rng.normal(0.0, 10.0)
    return {"kibor": kibor, "cci": cci, "cpi": cpi, "epu": epu, "ipi": ipi}


def _document_text(rng: np.random.Generator, pos: int, neg: int,
                   date: datetime.date) -> str:
    words = (
        [str(w) for w in rng.choice(POSITIVE_TERMS, size=pos)]
        + [str(w) for w in rng.choice(NEGATIVE_TERMS, size=neg)]
        + [str(w) for w in rng.choice(NEUTRAL_FILLER, size=120)]
        + ["the", "of", "and", "in", "to", "has", "been"] * 6
    )
    order = rng.permutation(len(words))
    shuffled = [words[i] for i in order]
    sentences = []
    i = 0
    while i < len(shuffled):
        length = int(rng.integers(7, 14))
        chunk = shuffled[i : i + length]
        i += length
        sentences.append(" ".join(chunk).capitalize() + ".")
    header = (
        f"Monetary Policy Statement, {date.strftime('%B')} {date.year}.\n"
        f"Decision taken on {date.isoformat()}; inflation at "
        f"{rng.integers(4, 30)}.{rng.integers(0, 9)}% year-on-year.\n"
    )
    return header + " ".join(sentences) + "\n"


def generate_market(spec: SyntheticSpec | None = None) -> MarketData:
    """Generate the market piece (prices, controls, planted tones) in memory."""
    spec = spec or SyntheticSpec()
    rng = np.random.default_rng(spec.seed)

    # Calendar scaffolding: controls start a year early for lag history.
    # Mean event gap is 12 trading days plus ~2 for the forced Mondays;
    # size with ample slack so no seed can outrun the calendar.
    trading_needed = 280 + 13 * spec.n_events + spec.horizon_buffer
    months_needed = 16 + trading_needed // 21
    months = _month_sequence(spec.start_year - 1, months_needed)
    controls = _make_controls(rng, months)
    month_index = {(d.year, d.month): i for i, d in enumerate(months)}
    days = _trading_days(datetime.date(spec.start_year - 1, 1, 1), trading_needed)

    # Event trading-day indices; every 11th event publishes on the
    # preceding Saturday to exercise the non-trading-day roll. Events
    # start deep enough for a year of control history.
    event_idx = []
    i = 260
    while len(event_idx) < spec.n_events:
        i += int(rng.integers(8, 17))
        if len(event_idx) % 11 == 10:
            while days[i].weekday() != 0:  # force a Monday
                i += 1
        event_idx.append(i)
    if event_idx[-1] + spec.horizon_buffer >= len(days):
        raise RuntimeError("trading calendar too short for requested events")

    # Planted tones, exactly representable as count ratios.
    half = spec.sentiment_words_per_doc // 2
    target = np.clip(rng.normal(-0.2, 0.28, spec.n_events), -0.9, 0.9)
    pos_counts = np.clip(
        np.rint(half * (1.0 + target)).astype(int), 1,
        spec.sentiment_words_per_doc - 1,
    )
    neg_counts = spec.sentiment_words_per_doc - pos_counts
    tones = (pos_counts - neg_counts) / spec.sentiment_words_per_doc

    # Event-day signal: tone effect plus monthly-control-difference terms.
    signals = np.empty(spec.n_events)
    for e, idx in enumerate(event_idx):
        d = days[idx]
        m = month_index[(d.year, d.month)]
        s = spec.theta * tones[e]
        for name, (a, c) in CONTROL_EFFECTS.items():
            series = controls[name]
            s += c * (series[m - a] - series[m - a - 1])
        signals[e] = s

    # Price path: fundamental random walk; event closes carry the signal.
    event_at = {idx: e for e, idx in enumerate(event_idx)}
    innovations = rng.normal(0.0, spec.daily_vol, len(days))
    closes = np.empty(len(days))
    fundamental = 40000.0
    for t in range(len(days)):
        if t > 0:
            fundamental *= 1.0 + innovations[t]
        e = event_at.get(t)
        if e is None:
            closes[t] = fundamental
        elif spec.persistent:
            fundamental *= 1.0 + signals[e]
            closes[t] = fundamental
        else:
            closes[t] = fundamental * (1.0 + signals[e])

    # Publication dates: trading day of the event, except the forced
    # Mondays which publish on the prior Saturday.
    event_dates = []
    for e, idx in enumerate(event_idx):
        d = days[idx]
        if e % 11 == 10:
            d = d - datetime.timedelta(days=2)
        event_dates.append(d)

    return MarketData(
        spec=spec, event_dates=event_dates, tones=tones,
        pos_counts=pos_counts, neg_counts=neg_counts, trading_days=days,
        closes=closes, months=months, controls=controls, rng=rng,
    )


def market_frames(market: MarketData):
    """MarketData as (prices Frame, controls Frame, ToneSeries)."""
    from .corpus import ToneEntry, ToneSeries
    from .timeseries import Frame

    prices = Frame(list(market.trading_days), {"close": market.closes.copy()},
                   "daily")
    controls = Frame(
        list(market.months),
        {n: market.controls[n].copy() for n in ("kibor", "cci", "cpi", "epu", "ipi")},
        "monthly",
    )
    series = ToneSeries(
        [ToneEntry(d, float(t), True)
         for d, t in zip(market.event_dates, market.tones)]
    )
    return prices, controls, series


def generate_dataset(out_dir, spec: SyntheticSpec | None = None) -> SyntheticDataset:
    """Write the full synthetic input tree under out_dir."""
    market = generate_market(spec)
    spec = market.spec
    rng = market.rng
    event_dates = market.event_dates
    pos_counts, neg_counts = market.pos_counts, market.neg_counts
    days, closes = market.trading_days, market.closes
    months, controls = market.months, market.controls

    out_dir = Path(out_dir)
    docs_dir = out_dir / "documents"
    lex_dir = out_dir / "lexicon"
    for d in (docs_dir, lex_dir):
        d.mkdir(parents=True, exist_ok=True)

    # Documents + manifest.
    manifest_path = out_dir / "manifest.csv"
    with open(manifest_path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["id", "date", "path"])
        for e, d in enumerate(event_dates):
            doc_id = f"mps_{e:04d}"
            rel = f"documents/{d.isoformat()}_{doc_id}.txt"
            (out_dir / rel).write_text(
                _document_text(rng, int(pos_counts[e]), int(neg_counts[e]), d),
                encoding="utf-8",
            )
            w.writerow([doc_id, d.isoformat(), rel])

    (lex_dir / "positive.txt").write_text(
        "# fixture positive terms\n" + "\n".join(POSITIVE_TERMS) + "\n", "utf-8"
    )
    (lex_dir / "negative.txt").write_text(
        "# fixture negative terms\n" + "\n".join(NEGATIVE_TERMS) + "\n", "utf-8"
    )

    with open(out_dir / "prices.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["date", "close"])
        for d, c in zip(days, closes):
            w.writerow([d.isoformat(), "%.10g" % c])

    with open(out_dir / "controls.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["date", "kibor", "cci", "cpi", "epu", "ipi"])
        for i, d in enumerate(months):
            w.writerow(
                [d.isoformat()]
                + ["%.10g" % controls[name][i] for name in
                   ("kibor", "cci", "cpi", "epu", "ipi")]
            )

    config_path = out_dir / "run.config"
    config_path.write_text(
        "# generated synthetic run configuration\n"
        "documents_dir = documents\n"
        "manifest = manifest.csv\n"
        "lexicon_positive = lexicon/positive.txt\n"
        "lexicon_negative = lexicon/negative.txt\n"
        "prices = prices.csv\n"
        "controls = controls.csv\n"
        "output_dir = out\n"
        "horizon = 1\n"
        "max_lags = returns:4,tone:3,cci:3,cpi:4,epu:2,ipi:3,kibor:1\n"
        "adf_spec = constant\n"
        "ljung_box_lags = 1,2,3,4,5,10,24\n"
        "top_k = 20\n"
        f"seed = {spec.seed}\n",
        "utf-8",
    )

    return SyntheticDataset(
        out_dir=out_dir,
        config_path=config_path,
        spec=spec,
        event_dates=event_dates,
        tones=market.tones,
    )
