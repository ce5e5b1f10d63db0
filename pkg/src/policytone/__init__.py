"""Tone scoring of central-bank policy documents and its market impact.

The package quantifies document tone with a financial sentiment lexicon,
builds event-window stock returns around publication dates, and estimates
tone-on-returns regressions (OLS and ARDL with AIC lag search) together
with the standard battery of diagnostics.
"""

__version__ = "0.1.0"

from .lexicon import (
    Lexicon,
    SentimentCounts,
    ToneScore,
    classify_token,
    corpus_polarity_shares,
    count_sentiment,
    load_lexicon,
    tone,
)

__all__ = [
    "Lexicon",
    "SentimentCounts",
    "ToneScore",
    "classify_token",
    "corpus_polarity_shares",
    "count_sentiment",
    "load_lexicon",
    "tone",
    "__version__",
]
