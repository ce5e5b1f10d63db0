"""Document ingestion and the text-normalization pipeline.

Normalization applies, in order: lowercase folding; splitting on maximal
runs of non-alphabetic characters (which removes digits, punctuation,
hashtags and quotation marks); dropping stopwords; dropping calendar
words (English day and month names); dropping empty tokens.  Year
numbers disappear with the other digit runs.  The pipeline is idempotent
on its own rejoined output.

Input corpora are directories of UTF-8 ``.txt`` files.  Publish dates
come from a manifest CSV (``id,date,path``) or, absent one, from the
filename pattern ``YYYY-MM-DD_*.txt``; the manifest wins when both
exist.  Two documents sharing a date are merged into one token stream
before scoring, so the tone series has one entry per publication date.
"""

from __future__ import annotations

import csv
import datetime
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import InputError, ValidationError
from .lexicon import Lexicon, SentimentCounts, count_sentiment, tone

_SPLIT_RE = re.compile(r"[^a-z]+")
_FILENAME_RE = re.compile(r"(\d{4}-\d{2}-\d{2})_.*\.txt\Z")

DAY_WORDS = frozenset(
    ["monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday"]
)
MONTH_WORDS = frozenset(
    [
        "january", "february", "march", "april", "may", "june",
        "july", "august", "september", "october", "november", "december",
    ]
)
_CALENDAR_WORDS = DAY_WORDS | MONTH_WORDS

STOPWORDS_RESOURCE = "stopwords_en_v1.txt"


def default_stopwords() -> frozenset[str]:
    """The bundled, versioned English stopword list."""
    text = resources.files("policytone.data").joinpath(STOPWORDS_RESOURCE).read_text("utf-8")
    return frozenset(_parse_stopword_text(text))


def load_stopwords(path) -> frozenset[str]:
    """User-supplied stopword file: one term per line, ``#`` comments."""
    return frozenset(_parse_stopword_text(Path(path).read_text("utf-8")))


def _parse_stopword_text(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        term = line.strip().lower()
        if term and not term.startswith("#"):
            out.append(term)
    return out


def normalize_text(raw: str, stoplist: frozenset[str] | set[str]) -> list[str]:
    """Apply the five normalization rules to raw text, in order."""
    tokens = _SPLIT_RE.split(raw.lower())
    return [
        t
        for t in tokens
        if t and t not in stoplist and t not in _CALENDAR_WORDS
    ]


@dataclass
class Document:
    id: str
    publish_date: datetime.date
    raw_text: str
    tokens: list[str]
    counts: SentimentCounts | None = None


@dataclass
class ToneEntry:
    publish_date: datetime.date
    value: float
    defined: bool


@dataclass
class ToneSeries:
    """Date-ordered tone entries, one per publication date."""

    entries: list[ToneEntry] = field(default_factory=list)

    def __post_init__(self):
        dates = [e.publish_date for e in self.entries]
        if any(b <= a for a, b in zip(dates, dates[1:])):
            raise ValidationError("tone series dates must be strictly increasing")
        for e in self.entries:
            if not -1.0 <= e.value <= 1.0:
                raise ValidationError(f"tone value out of range: {e.value}")

    def to_csv(self, path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["date", "tone", "defined"])
            for e in self.entries:
                w.writerow(
                    [e.publish_date.isoformat(), "%.10g" % e.value,
                     "true" if e.defined else "false"]
                )

    @classmethod
    def from_csv(cls, path) -> "ToneSeries":
        entries = []
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header is None or [h.strip() for h in header] != ["date", "tone", "defined"]:
                raise ValidationError(f"{path}: expected header date,tone,defined")
            for row in reader:
                entries.append(
                    ToneEntry(
                        datetime.date.fromisoformat(row[0]),
                        float(row[1]),
                        row[2].strip().lower() == "true",
                    )
                )
        return cls(entries)


def ingest_document(path, publish_date: datetime.date, stoplist) -> Document:
    """Read one UTF-8 text file and normalize it into a Document."""
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read document {path}: {exc}") from exc
    try:
        raw = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(
            f"{path}: invalid UTF-8 at byte offset {exc.start}: {exc.reason}"
        ) from exc
    return Document(
        id=path.stem,
        publish_date=publish_date,
        raw_text=raw,
        tokens=normalize_text(raw, stoplist),
    )


def load_corpus(documents_dir, stoplist, manifest=None) -> list[Document]:
    """Ingest every document in a directory.

    With a manifest CSV (columns id,date,path; path relative to the
    manifest) only listed files are read.  Otherwise all ``*.txt`` files
    matching ``YYYY-MM-DD_*.txt`` are taken and the date parsed from the
    filename.
    """
    documents_dir = Path(documents_dir)
    if not documents_dir.is_dir():
        raise InputError(f"document directory not found: {documents_dir}")
    docs: list[Document] = []
    if manifest is not None:
        manifest = Path(manifest)
        try:
            fh = open(manifest, newline="", encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read manifest {manifest}: {exc}") from exc
        with fh:
            reader = csv.DictReader(fh)
            required = {"id", "date", "path"}
            if reader.fieldnames is None or not required <= set(reader.fieldnames):
                raise ValidationError(
                    f"{manifest}: manifest must have columns id,date,path"
                )
            for row in reader:
                try:
                    date = datetime.date.fromisoformat(row["date"].strip())
                except ValueError as exc:
                    raise ValidationError(
                        f"{manifest}: bad date {row['date']!r} for id {row['id']!r}"
                    ) from exc
                doc_path = manifest.parent / row["path"].strip()
                doc = ingest_document(doc_path, date, stoplist)
                doc.id = row["id"].strip()
                docs.append(doc)
    else:
        for path in sorted(documents_dir.glob("*.txt")):
            m = _FILENAME_RE.match(path.name)
            if not m:
                continue
            date = datetime.date.fromisoformat(m.group(1))
            docs.append(ingest_document(path, date, stoplist))
    return docs


def score_corpus(documents: list[Document], lexicon: Lexicon) -> ToneSeries:
    """Fill per-document counts and build the dated tone series.

    Documents sharing a publish date are merged into one token stream
    before scoring (equivalently, their counts are summed), producing
    exactly one tone entry per distinct date, sorted ascending.
    """
    by_date: dict[datetime.date, list[str]] = {}
    for doc in documents:
        doc.counts = count_sentiment(lexicon, doc.tokens)
        by_date.setdefault(doc.publish_date, []).extend(doc.tokens)
    entries = []
    for date in sorted(by_date):
        score = tone(count_sentiment(lexicon, by_date[date]))
        entries.append(ToneEntry(date, score.value, score.defined))
    return ToneSeries(entries)


def documents_per_year(documents: list[Document]) -> dict[int, int]:
    """Histogram of publish years."""
    hist: dict[int, int] = {}
    for doc in documents:
        hist[doc.publish_date.year] = hist.get(doc.publish_date.year, 0) + 1
    return dict(sorted(hist.items()))
