"""Exception types shared across the package.

The CLI maps these onto exit codes: validation problems exit 1, I/O and
decoding problems exit 2 (see :mod:`policytone.cli`).
"""


class PolicytoneError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(PolicytoneError, ValueError):
    """Input violates a documented contract (bad lexicon term, duplicate
    dates, rank-deficient design, empty dataset after filtering, ...)."""


class DataRangeError(PolicytoneError, ValueError):
    """A request falls outside the available data (event date outside the
    price history, lag longer than the series, ...)."""


class ArithmeticDomainError(PolicytoneError, ArithmeticError):
    """A computation hit a degenerate denominator (zero previous close,
    all-zero residual vector, ...)."""


class InputError(PolicytoneError, OSError):
    """A file could not be read or parsed at the I/O level."""
