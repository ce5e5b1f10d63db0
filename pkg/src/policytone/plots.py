"""Deterministic vector-graphics output.

Charts are written as plain SVG with fixed geometry and fixed-precision
coordinates, so identical inputs produce byte-identical files; no
plotting library is involved.
"""

from __future__ import annotations

import math

_W, _H = 820, 420
_ML, _MR, _MT, _MB = 70, 20, 40, 60


def _f(v: float) -> str:
    return "%.2f" % v


def _scale(values, lo_pad=0.05, hi_pad=0.05):
    vmin, vmax = min(values), max(values)
    if vmax == vmin:
        vmin -= 1.0
        vmax += 1.0
    span = vmax - vmin
    return vmin - lo_pad * span, vmax + hi_pad * span


def _ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    raw = (hi - lo) / n
    mag = 10.0 ** math.floor(math.log10(raw)) if raw > 0 else 1.0
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0):
        if raw <= mult * mag:
            step = mult * mag
            break
    start = math.ceil(lo / step) * step
    ticks = []
    t = start
    while t <= hi + 1e-12 * step:
        ticks.append(0.0 if abs(t) < step * 1e-9 else t)
        t += step
    return ticks


def _header(title: str) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W // 2}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{title}</text>',
    ]


def _axes(y_lo: float, y_hi: float) -> tuple[list[str], callable]:
    plot_h = _H - _MT - _MB
    plot_w = _W - _ML - _MR

    def ymap(v: float) -> float:
        return _MT + plot_h * (1.0 - (v - y_lo) / (y_hi - y_lo))

    parts = [
        f'<line x1="{_ML}" y1="{_MT}" x2="{_ML}" y2="{_H - _MB}" stroke="black"/>',
        f'<line x1="{_ML}" y1="{_H - _MB}" x2="{_W - _MR}" y2="{_H - _MB}" '
        'stroke="black"/>',
    ]
    for t in _ticks(y_lo, y_hi):
        y = ymap(t)
        parts.append(
            f'<line x1="{_ML - 4}" y1="{_f(y)}" x2="{_ML}" y2="{_f(y)}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{_ML - 8}" y="{_f(y + 4)}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{t:.4g}</text>'
        )
    return parts, ymap


def _x_positions(n: int) -> list[float]:
    plot_w = _W - _ML - _MR
    if n == 1:
        return [_ML + plot_w / 2.0]
    return [_ML + plot_w * i / (n - 1) for i in range(n)]


def _x_labels(parts: list[str], labels: list[str], xs: list[float]) -> None:
    step = max(1, len(labels) // 8)
    for i in range(0, len(labels), step):
        parts.append(
            f'<text x="{_f(xs[i])}" y="{_H - _MB + 16}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="10">{labels[i]}</text>'
        )


def line_chart(path, title: str, labels: list[str], values: list[float]) -> None:
    """Polyline chart of values against ordered categorical labels."""
    y_lo, y_hi = _scale(values)
    parts = _header(title)
    axis_parts, ymap = _axes(y_lo, y_hi)
    parts += axis_parts
    xs = _x_positions(len(values))
    pts = " ".join(f"{_f(x)},{_f(ymap(v))}" for x, v in zip(xs, values))
    parts.append(
        f'<polyline points="{pts}" fill="none" stroke="steelblue" stroke-width="1.5"/>'
    )
    for x, v in zip(xs, values):
        parts.append(
            f'<circle cx="{_f(x)}" cy="{_f(ymap(v))}" r="2" fill="steelblue"/>'
        )
    _x_labels(parts, labels, xs)
    parts.append("</svg>")
    _write(path, parts)


def bar_chart(path, title: str, labels: list[str], values: list[float]) -> None:
    y_lo = 0.0
    _, y_hi = _scale(values, lo_pad=0.0)
    parts = _header(title)
    axis_parts, ymap = _axes(y_lo, y_hi)
    parts += axis_parts
    plot_w = _W - _ML - _MR
    n = len(values)
    slot = plot_w / n
    bar_w = slot * 0.6
    for i, v in enumerate(values):
        x = _ML + slot * i + (slot - bar_w) / 2.0
        y = ymap(v)
        h = (_H - _MB) - y
        parts.append(
            f'<rect x="{_f(x)}" y="{_f(y)}" width="{_f(bar_w)}" '
            f'height="{_f(h)}" fill="steelblue"/>'
        )
        parts.append(
            f'<text x="{_f(x + bar_w / 2)}" y="{_H - _MB + 16}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="10">{labels[i]}</text>'
        )
    parts.append("</svg>")
    _write(path, parts)


def rank_chart(path, title: str, values: list[float]) -> None:
    """Scatter-line of a ranked metric (best first), e.g. top-k AIC."""
    labels = [str(i + 1) for i in range(len(values))]
    line_chart(path, title, labels, values)


def _write(path, parts: list[str]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(parts) + "\n")
