import math

import mpmath
import numpy as np
import pytest

from wallis_series import _kernels
from wallis_series.errors import QuadratureError, UnknownSeriesError
from wallis_series.exact_core import wallis_even_ratio, wallis_odd_ratio
from wallis_series.quadrature import integrate_de, oracle_integral
from wallis_series.series_catalog import catalog_names

NAMES = catalog_names()


def test_sine_integrates_to_one():
    res = integrate_de(np.sin, 0.0, math.pi / 2, 1e-13)
    assert res.converged and abs(res.value - 1.0) < 1e-14


def test_sin_fifth_power():
    res = integrate_de(lambda x: np.sin(x) ** 5, 0.0, math.pi / 2, 1e-13)
    assert abs(res.value - 8 / 15) < 1e-14


def test_endpoint_log_singularity():
    # integral of -log x over (0, 1) is 1
    res = integrate_de(lambda x, da, db: -np.log(da), 0.0, 1.0, 1e-12, with_distances=True)
    assert res.converged and abs(res.value - 1.0) < 1e-12


def test_inverse_sqrt_singularity():
    res = integrate_de(lambda x, da, db: 1 / np.sqrt(db), 0.0, 1.0, 1e-12, with_distances=True)
    assert abs(res.value - 2.0) < 1e-11


@pytest.mark.parametrize("m", range(0, 42, 5))
def test_powers_of_sine(m):
    res = integrate_de(lambda x: np.sin(x) ** m, 0.0, math.pi / 2, 1e-13)
    exact = float(wallis_odd_ratio(m // 2)) if m % 2 else float(wallis_even_ratio(m // 2)) * math.pi / 2
    assert abs(res.value - exact) < 1e-12


def test_artanh_oracle_finite_and_correct():
    res = oracle_integral("artanh", "sin", 1e-12)
    assert res.converged and math.isfinite(res.value)
    assert abs(res.value - 2 * float(mpmath.catalan)) < 1e-12


@pytest.mark.parametrize("name", NAMES)
def test_sin_cos_symmetry(name):
    a = oracle_integral(name, "sin", 1e-12)
    b = oracle_integral(name, "cos", 1e-12)
    assert abs(a.value - b.value) <= a.error_estimate + b.error_estimate + 1e-13


@pytest.mark.parametrize("name", NAMES)
def test_oracle_against_mpmath(name):
    f = {
        "sin": mpmath.sin, "cos": mpmath.cos, "sinh": mpmath.sinh, "cosh": mpmath.cosh,
        "arcsin": mpmath.asin, "x_cot_x": lambda x: x * mpmath.cot(x) if x else mpmath.mpf(1),
        "arctan": mpmath.atan, "artanh": mpmath.atanh, "arsinh": mpmath.asinh,
        "tan": mpmath.tan, "x_over_sin_x": lambda x: x / mpmath.sin(x) if x else mpmath.mpf(1),
        "x_over_sinh_x": lambda x: x / mpmath.sinh(x) if x else mpmath.mpf(1),
        "sec": mpmath.sec, "sech": mpmath.sech,
    }[name]
    with mpmath.workdps(25):
        if name == "artanh":
            # mpmath samples x = pi/2 itself, where atanh(1) is infinite
            ref = 2 * float(mpmath.catalan)
        else:
            ref = float(mpmath.quad(lambda x: f(mpmath.sin(x)), [0, mpmath.pi / 4, mpmath.pi / 2]))
    res = oracle_integral(name, "sin", 1e-12)
    assert abs(res.value - ref) < 1e-11


def test_evaluations_grow_with_precision():
    coarse = oracle_integral("tan", "sin", 1e-4)
    fine = oracle_integral("tan", "sin", 1e-13)
    assert fine.evaluations > coarse.evaluations
    assert fine.levels >= coarse.levels


def test_level_cap_reports_unconverged():
    res = oracle_integral("artanh", "sin", 1e-30, level_cap=4)
    assert not res.converged and res.levels == 4


def test_bad_arguments():
    with pytest.raises(ValueError):
        oracle_integral("sin", "tan", 1e-8)
    with pytest.raises(UnknownSeriesError):
        oracle_integral("nosuch", "sin", 1e-8)
    with pytest.raises(ValueError):
        oracle_integral("sin", "sin", 0.0)
    with pytest.raises(ValueError):
        integrate_de(np.sin, 1.0, 0.0, 1e-8)
    with pytest.raises(ValueError):
        oracle_integral("sin", "sin", 1e-8, level_cap=2)


def test_non_finite_integrand_raises():
    with pytest.raises(QuadratureError):
        integrate_de(lambda x: np.full_like(x, np.nan), 0.0, 1.0, 1e-8)
