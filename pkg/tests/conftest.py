import datetime
from pathlib import Path

import numpy as np
import pytest

from policytone.corpus import default_stopwords
from policytone.lexicon import load_lexicon
from policytone.timeseries import Frame

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def stopwords():
    return default_stopwords()


@pytest.fixture(scope="session")
def fixture_lexicon():
    return load_lexicon(FIXTURES / "lexicon" / "positive.txt",
                        FIXTURES / "lexicon" / "negative.txt")


@pytest.fixture(scope="session")
def corpus_dir():
    return FIXTURES / "corpus"


@pytest.fixture()
def weekend_prices():
    # 2018-01-04 (Thu) .. 2018-01-10 (Wed); the 6th/7th are a weekend.
    dates = [datetime.date(2018, 1, d) for d in (4, 5, 8, 9, 10)]
    closes = np.array([100.0, 102.0, 104.0, 103.0, 106.0])
    return Frame(dates, {"close": closes}, "daily")


def ols_normal_equations(y, X):
    """Independent textbook OLS oracle: solve the normal equations."""
    y = np.asarray(y, float)
    X = np.asarray(X, float)
    n, k = X.shape
    XtX = X.T @ X
    beta = np.linalg.solve(XtX, X.T @ y)
    resid = y - X @ beta
    rss = float(resid @ resid)
    s2 = rss / (n - k)
    cov = s2 * np.linalg.inv(XtX)
    se = np.sqrt(np.diag(cov))
    tss = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 - rss / tss if tss > 0 else 0.0
    fval = ((tss - rss) / (k - 1)) / (rss / (n - k)) if k > 1 and rss > 0 else np.nan
    return beta, se, r2, fval, rss
