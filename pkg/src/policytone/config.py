"""Run configuration: a flat ``key = value`` file plus CLI overrides.

Paths are resolved relative to the config file's directory.  Unknown keys
are rejected so typos surface immediately.  The config hash covers every
resolved setting, which is what makes reruns byte-identical and
comparable across machines.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field, fields
from pathlib import Path

from .econ.ardl import DEFAULT_GRID_CAP, LagSpec
from .errors import InputError, ValidationError

DEFAULT_MAX_LAGS = "returns:4,tone:3,cci:3,cpi:4,epu:2,ipi:3,kibor:1"
CONFIG_ENV_VAR = "POLICYTONE_CONFIG"

_PATH_KEYS = (
    "documents_dir",
    "manifest",
    "lexicon_positive",
    "lexicon_negative",
    "prices",
    "controls",
    "stopwords",
)


@dataclass
class RunConfig:
    documents_dir: str | None = None
    manifest: str | None = None
    lexicon_positive: str | None = None
    lexicon_negative: str | None = None
    prices: str | None = None
    controls: str | None = None
    stopwords: str | None = None
    output_dir: str = "out"
    horizon: int = 1
    max_lags: str = DEFAULT_MAX_LAGS
    adf_spec: str = "constant"
    adf_max_lag: int | None = None
    ljung_box_lags: str = "1,2,3,4,5,10,24"
    significance_levels: str = "0.10,0.05,0.01"
    grid_cap: int = DEFAULT_GRID_CAP
    top_k: int = 20
    seed: int = 0
    extra: dict = field(default_factory=dict, repr=False)

    def validate(self) -> None:
        if self.horizon < 1:
            raise ValidationError(f"horizon must be >= 1, got {self.horizon}")
        if not 0 <= self.seed < 2**64:
            raise ValidationError("seed must fit an unsigned 64-bit integer")
        if self.grid_cap < 1:
            raise ValidationError("grid_cap must be positive")
        if self.top_k < 1:
            raise ValidationError("top_k must be positive")
        self.lag_spec()  # parses and validates
        self.lb_lags()
        self.levels()
        for key in _PATH_KEYS:
            value = getattr(self, key)
            if value is not None and not Path(value).exists():
                raise InputError(f"{key}: path does not exist: {value}")

    def require(self, *keys: str) -> None:
        missing = [k for k in keys if getattr(self, k) is None]
        if missing:
            raise ValidationError(
                "config is missing required setting(s): " + ", ".join(missing)
            )

    def lag_spec(self) -> LagSpec:
        return parse_lag_spec(self.max_lags)

    def lb_lags(self) -> list[int]:
        try:
            lags = [int(tok) for tok in self.ljung_box_lags.split(",") if tok.strip()]
        except ValueError as exc:
            raise ValidationError(
                f"bad ljung_box_lags: {self.ljung_box_lags!r}"
            ) from exc
        if not lags:
            raise ValidationError("ljung_box_lags is empty")
        return lags

    def levels(self) -> tuple[float, float, float]:
        try:
            vals = tuple(float(t) for t in self.significance_levels.split(","))
        except ValueError as exc:
            raise ValidationError(
                f"bad significance_levels: {self.significance_levels!r}"
            ) from exc
        if len(vals) != 3 or not all(0 < v < 1 for v in vals):
            raise ValidationError("significance_levels must be three probabilities")
        return vals

    def config_hash(self) -> str:
        # output_dir is excluded: the hash identifies the analysis, not
        # where its artifacts land.
        skip = {"extra", "output_dir"}
        parts = []
        for f in sorted(f.name for f in fields(self) if f.name not in skip):
            parts.append(f"{f}={getattr(self, f)}")
        blob = "\n".join(parts).encode("utf-8")
        return hashlib.sha256(blob).hexdigest()


def parse_lag_spec(text: str) -> LagSpec:
    """Parse ``returns:4,tone:3,...`` (also accepts ``=`` separators)."""
    entries = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        sep = ":" if ":" in chunk else "="
        if sep not in chunk:
            raise ValidationError(f"bad lag entry {chunk!r}; expected name:order")
        name, _, order = chunk.partition(sep)
        try:
            entries.append((name.strip(), int(order)))
        except ValueError as exc:
            raise ValidationError(f"bad lag order in {chunk!r}") from exc
    if not entries:
        raise ValidationError("empty lag specification")
    return LagSpec(entries)


_INT_KEYS = {"horizon", "adf_max_lag", "grid_cap", "top_k", "seed"}
_KNOWN_KEYS = {f.name for f in fields(RunConfig)} - {"extra"}


def load_config(path) -> RunConfig:
    """Read a key = value config file; paths become absolute."""
    path = Path(path)
    try:
        text = path.read_text("utf-8")
    except OSError as exc:
        raise InputError(f"cannot read config {path}: {exc}") from exc
    cfg = RunConfig()
    base = path.parent
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValidationError(f"{path}:{lineno}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip().lower()
        value = value.split("#", 1)[0].strip()
        if key not in _KNOWN_KEYS:
            raise ValidationError(f"{path}:{lineno}: unknown setting {key!r}")
        if value == "":
            continue
        if key in _INT_KEYS:
            try:
                setattr(cfg, key, int(value))
            except ValueError as exc:
                raise ValidationError(
                    f"{path}:{lineno}: {key} must be an integer"
                ) from exc
        elif key in _PATH_KEYS or key == "output_dir":
            setattr(cfg, key, str((base / value).resolve()))
        else:
            setattr(cfg, key, value)
    return cfg
