import math

import numpy as np
import pytest

from wallis_series import _kernels
from wallis_series.quadrature import oracle_integral
from wallis_series.series_catalog import catalog_names

NAMES = catalog_names()
needs_numba = pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")


@needs_numba
@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("inner", [_kernels.INNER_SIN, _kernels.INNER_COS])
def test_numba_and_numpy_level_sums_agree(name, inner):
    code = _kernels.CODES[name]
    half = math.pi / 4
    for h, odd_only in [(1.0, False), (0.25, True), (1 / 64, True)]:
        jmax = _kernels.jmax_for(half, h)
        a = _kernels.level_sum_numba(code, inner, half, h, jmax, odd_only)
        b = _kernels.level_sum_numpy(code, inner, half, h, jmax, odd_only)
        assert a[1:] == b[1:]
        assert a[0] == pytest.approx(b[0], rel=1e-13, abs=1e-300)


def test_env_flag_selects_numpy(monkeypatch):
    monkeypatch.setenv("WALLIS_SERIES_USE_NUMBA", "0")
    assert _kernels.backend() == "numpy"
    numpy_value = oracle_integral("sec", "sin", 1e-12).value
    monkeypatch.setenv("WALLIS_SERIES_USE_NUMBA", "1")
    expected = "numba" if _kernels.HAVE_NUMBA else "numpy"
    assert _kernels.backend() == expected
    assert oracle_integral("sec", "sin", 1e-12).value == pytest.approx(numpy_value, abs=1e-14)


@pytest.mark.parametrize("name", NAMES)
def test_array_and_scalar_evaluation_agree(name):
    code = _kernels.CODES[name]
    y = np.array([0.0, 1e-9, 0.2, 0.5, 0.9, 0.999999])
    omy = 1.0 - y
    arr = _kernels.eval_array(code, y, omy)
    scalar = [_kernels._eval_scalar(code, float(a), float(b)) for a, b in zip(y, omy)]
    assert np.allclose(arr, scalar, rtol=1e-14, atol=0)


def test_nodes_stay_inside_interval():
    half = math.pi / 4
    h = 1 / 128
    da, db, w = _kernels.de_nodes(half, h, _kernels.jmax_for(half, h), False)
    assert np.all(da >= _kernels.MIN_ENDPOINT_DISTANCE * 0.5)
    assert np.all(db >= _kernels.MIN_ENDPOINT_DISTANCE * 0.5)
    assert np.all(w > 0)
    assert np.allclose(da + db, 2 * half)
