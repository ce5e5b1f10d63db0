import json
import math
from pathlib import Path

import pytest

from policytone.econ import special
from policytone.econ import _special_py as pure
from policytone.econ.special import (
    chi_square_cdf,
    dist_cdf,
    fisher_f_cdf,
    normal_cdf,
    student_t_cdf,
)
from policytone.errors import ValidationError

ORACLE = json.loads(
    (Path(__file__).parent / "fixtures" / "dist_cdf_oracle.json").read_text()
)


def test_normal_symmetry_and_center():
    assert normal_cdf(0.0) == 0.5
    for x in (0.3, 1.7, 4.2):
        assert normal_cdf(-x) == pytest.approx(1.0 - normal_cdf(x), abs=1e-12)


def test_student_t_center_and_symmetry():
    assert student_t_cdf(1e6, 0.0) == 0.5
    for df in (1, 4, 17):
        for x in (0.5, 2.2, 6.0):
            assert student_t_cdf(df, -x) == pytest.approx(
                1.0 - student_t_cdf(df, x), abs=1e-12)


def test_t_quantile_anchor():
    # 95th percentile of t(5) is 2.015.
    assert student_t_cdf(5, 2.015) == pytest.approx(0.95, abs=1e-3)


def test_chi2_df2_closed_form():
    for x in (0.5, 1.0, 5.0):
        assert chi_square_cdf(2, x) == pytest.approx(1.0 - math.exp(-x / 2),
                                                     abs=1e-12)


def test_f_11_closed_form():
    # F(1,1) CDF is 2/pi * atan(sqrt(x)).
    for x in (0.2, 1.0, 3.7):
        assert fisher_f_cdf(1, 1, x) == pytest.approx(
            2.0 / math.pi * math.atan(math.sqrt(x)), abs=1e-12)


def test_monotone_and_bounded():
    grids = {
        "normal": [(None, x / 4.0) for x in range(-32, 33)],
        "student_t": [(6, x / 4.0) for x in range(-32, 33)],
        "chi_square": [(5, x / 4.0) for x in range(0, 65)],
        "fisher_f": [((4, 9), x / 4.0) for x in range(0, 65)],
    }
    for family, pts in grids.items():
        prev = -1.0
        for p, x in pts:
            if family == "normal":
                v = normal_cdf(x)
            elif family == "student_t":
                v = student_t_cdf(p, x)
            elif family == "chi_square":
                v = chi_square_cdf(p, x)
            else:
                v = fisher_f_cdf(p[0], p[1], x)
            assert 0.0 <= v <= 1.0
            assert v >= prev - 1e-15
            prev = v


def test_against_frozen_quadrature_oracle_spot():
    # Full 200-point sweep runs in the acceptance module; spot-check here.
    for fam, rows in ORACLE.items():
        for row in rows[::10]:
            if fam == "normal":
                v = normal_cdf(row["x"])
            elif fam == "student_t":
                v = student_t_cdf(row["df"], row["x"])
            elif fam == "chi_square":
                v = chi_square_cdf(row["df"], row["x"])
            else:
                v = fisher_f_cdf(row["d1"], row["d2"], row["x"])
            assert v == pytest.approx(row["cdf"], abs=1e-10)


def test_dist_cdf_dispatch():
    assert dist_cdf("normal", (), 0.0) == 0.5
    assert dist_cdf("normal", (1.0, 2.0), 1.0) == 0.5
    assert dist_cdf("student_t", (5,), 0.0) == 0.5
    assert dist_cdf("chi_square", (2,), 1.0) == pytest.approx(
        1 - math.exp(-0.5), abs=1e-12)
    assert dist_cdf("fisher_f", (1, 1), 1.0) == pytest.approx(0.5, abs=1e-12)
    with pytest.raises(ValidationError):
        dist_cdf("poisson", (1,), 0.5)


def test_invalid_params_rejected():
    with pytest.raises(ValidationError):
        student_t_cdf(0, 1.0)
    with pytest.raises(ValidationError):
        chi_square_cdf(-1, 1.0)
    with pytest.raises(ValidationError):
        fisher_f_cdf(1, 0, 1.0)
    with pytest.raises(ValidationError):
        normal_cdf(0.0, 0.0, -1.0)


@pytest.mark.skipif(special.BACKEND != "cython",
                    reason="compiled backend unavailable")
def test_backends_bitwise_identical():
    import random

    rnd = random.Random(99)
    for _ in range(5000):
        a = rnd.uniform(0.01, 150)
        b = rnd.uniform(0.01, 150)
        x = rnd.random()
        assert special.betainc(a, b, x) == pure.betainc(a, b, x)
        ag = rnd.uniform(0.01, 200)
        xg = rnd.uniform(0.0, 400)
        assert special.gammainc_p(ag, xg) == pure.gammainc_p(ag, xg)
        xn = rnd.uniform(-30, 30)
        assert special._backend.norm_cdf(xn) == pure.norm_cdf(xn)
