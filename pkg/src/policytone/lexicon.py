"""Financial sentiment lexicon: loading, token classification, tone.

A document's tone is the normalized count difference

    tone = (positive - negative) / (positive + negative)

in [-1, +1].  A document containing no sentiment words gets tone 0 with
``defined=False`` instead of an error, so one degenerate document cannot
abort a corpus run; downstream regressions drop undefined tones.

Lexicon files are plain UTF-8 text, one term per line, ``#`` comments and
blank lines ignored, case-insensitive.  The repository bundles small
fixture lexicons; real word lists (e.g. the Loughran-McDonald master
lists) are supplied by path.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import ValidationError

_WORD_RE = re.compile(r"[a-z]+\Z")


@dataclass(frozen=True)
class Lexicon:
    """Immutable positive/negative term sets; safe to share across workers."""

    positive_terms: frozenset[str]
    negative_terms: frozenset[str]
    source_name: str = ""

    def __post_init__(self):
        overlap = self.positive_terms & self.negative_terms
        if overlap:
            raise ValidationError("overlap: " + ", ".join(sorted(overlap)))
        for term in self.positive_terms | self.negative_terms:
            if not _WORD_RE.match(term):
                raise ValidationError(
                    f"lexicon term must be lowercase letters only: {term!r}"
                )


@dataclass(frozen=True)
class SentimentCounts:
    positive: int
    negative: int
    total_tokens: int

    def __post_init__(self):
        if min(self.positive, self.negative, self.total_tokens) < 0:
            raise ValidationError("sentiment counts must be non-negative")
        if self.positive + self.negative > self.total_tokens:
            raise ValidationError(
                "positive + negative exceeds total tokens "
                f"({self.positive} + {self.negative} > {self.total_tokens})"
            )


@dataclass(frozen=True)
class ToneScore:
    value: float
    defined: bool


def _read_terms(path: Path) -> set[str]:
    terms: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            term = line.strip()
            if not term or term.startswith("#"):
                continue
            term = term.lower()
            if not _WORD_RE.match(term):
                raise ValidationError(
                    f"{path}:{lineno}: term contains non-letter characters: {term!r}"
                )
            terms.add(term)
    return terms


def load_lexicon(positive_path, negative_path, source_name: str | None = None) -> Lexicon:
    """Load positive/negative term files into a validated Lexicon.

    Terms are lowercased and deduplicated; a term present in both lists
    raises ValidationError naming the term.
    """
    positive_path = Path(positive_path)
    negative_path = Path(negative_path)
    positive = _read_terms(positive_path)
    negative = _read_terms(negative_path)
    if source_name is None:
        source_name = f"{positive_path.name}+{negative_path.name}"
    return Lexicon(frozenset(positive), frozenset(negative), source_name)


def classify_token(lexicon: Lexicon, token: str) -> str:
    """Classify one normalized token as positive, negative or neutral."""
    if token in lexicon.positive_terms:
        return "positive"
    if token in lexicon.negative_terms:
        return "negative"
    return "neutral"


def count_sentiment(lexicon: Lexicon, tokens: Sequence[str]) -> SentimentCounts:
    """Count sentiment tokens; every occurrence counts, not unique types."""
    pos = neg = 0
    positive, negative = lexicon.positive_terms, lexicon.negative_terms
    for token in tokens:
        if token in positive:
            pos += 1
        elif token in negative:
            neg += 1
    return SentimentCounts(pos, neg, len(tokens))


def tone(counts: SentimentCounts) -> ToneScore:
    """Tone of one document from its sentiment counts."""
    loaded = counts.positive + counts.negative
    if loaded == 0:
        return ToneScore(0.0, defined=False)
    return ToneScore((counts.positive - counts.negative) / loaded, defined=True)


def corpus_polarity_shares(counts: Iterable[SentimentCounts]) -> tuple[float, float]:
    """Corpus-wide percentage split of positive vs negative word hits."""
    total_pos = total_loaded = 0
    for c in counts:
        total_pos += c.positive
        total_loaded += c.positive + c.negative
    if total_loaded == 0:
        raise ValidationError("corpus contains no sentiment-bearing tokens")
    positive_share = 100.0 * total_pos / total_loaded
    return positive_share, 100.0 - positive_share
