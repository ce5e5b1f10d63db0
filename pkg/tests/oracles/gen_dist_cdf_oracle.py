#!/usr/bin/env python3
"""Generate the frozen CDF oracle grid by numerical integration.

Each distribution's CDF is obtained by integrating its density with
mpmath's adaptive quadrature at 40 decimal digits, entirely independent
of the continued-fraction/series implementations under test.  Output is
frozen into tests/fixtures/dist_cdf_oracle.json (200 points per family).

Rerun manually if the grid ever needs to change:

    python3 tests/oracles/gen_dist_cdf_oracle.py
"""

import json
import os

import mpmath as mp

mp.mp.dps = 40

OUT = os.path.join(os.path.dirname(__file__), "..", "fixtures", "dist_cdf_oracle.json")


def normal_pdf(t):
    return mp.exp(-t * t / 2) / mp.sqrt(2 * mp.pi)


def t_pdf(v):
    c = mp.gamma((v + 1) / mp.mpf(2)) / (mp.sqrt(v * mp.pi) * mp.gamma(v / mp.mpf(2)))
    return lambda t: c * (1 + t * t / v) ** (-(v + 1) / mp.mpf(2))


def chi2_pdf(k):
    c = 1 / (mp.mpf(2) ** (k / mp.mpf(2)) * mp.gamma(k / mp.mpf(2)))
    return lambda t: c * t ** (k / mp.mpf(2) - 1) * mp.exp(-t / 2)


def f_pdf(d1, d2):
    d1, d2 = mp.mpf(d1), mp.mpf(d2)
    c = 1 / mp.beta(d1 / 2, d2 / 2)
    return lambda t: (
        c
        * (d1 / d2) ** (d1 / 2)
        * t ** (d1 / 2 - 1)
        * (1 + d1 * t / d2) ** (-(d1 + d2) / 2)
    )


def left_tail_cdf(pdf, x):
    """CDF of a symmetric-about-zero density at x, by one-sided quadrature."""
    x = mp.mpf(x)
    if x <= 0:
        return mp.quad(pdf, [-mp.inf, x])
    return 1 - mp.quad(pdf, [x, mp.inf])


def positive_cdf(pdf, x):
    """CDF of a density supported on (0, inf)."""
    x = mp.mpf(x)
    if x <= 0:
        return mp.mpf(0)
    return mp.quad(pdf, [0, x])


def fmt(v):
    return float(mp.nstr(v, 17, strip_zeros=False))


def linspace(a, b, n):
    step = (mp.mpf(b) - mp.mpf(a)) / (n - 1)
    return [mp.mpf(a) + i * step for i in range(n)]


def main():
    grid = {"normal": [], "student_t": [], "chi_square": [], "fisher_f": []}

    for x in linspace(-8, 8, 200):
        grid["normal"].append({"x": float(x), "cdf": fmt(left_tail_cdf(normal_pdf, x))})

    t_dfs = [1, 2, 3, 5, 8, 12, 30, 120]
    for v in t_dfs:
        pdf = t_pdf(mp.mpf(v))
        for x in linspace(-10, 10, 25):
            grid["student_t"].append(
                {"df": v, "x": float(x), "cdf": fmt(left_tail_cdf(pdf, x))}
            )

    chi_dfs = [1, 2, 3, 5, 10, 20, 50, 100]
    for k in chi_dfs:
        pdf = chi2_pdf(mp.mpf(k))
        for x in linspace(k / 20.0, 3.0 * k, 25):
            grid["chi_square"].append(
                {"df": k, "x": float(x), "cdf": fmt(positive_cdf(pdf, x))}
            )

    f_pairs = [(1, 1), (2, 10), (3, 7), (5, 2), (8, 20), (10, 10), (20, 5), (40, 60)]
    for d1, d2 in f_pairs:
        pdf = f_pdf(d1, d2)
        for x in linspace(0.05, 8.0, 25):
            grid["fisher_f"].append(
                {"d1": d1, "d2": d2, "x": float(x), "cdf": fmt(positive_cdf(pdf, x))}
            )

    for fam, rows in grid.items():
        assert len(rows) == 200, (fam, len(rows))

    with open(os.path.abspath(OUT), "w") as fh:
        json.dump(grid, fh, indent=1)
    print(f"wrote {os.path.abspath(OUT)}")


if __name__ == "__main__":
    main()
