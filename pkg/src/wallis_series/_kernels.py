"""Hot loops of the quadrature oracle.

Each kernel exists twice: a scalar loop compiled with numba's ``njit`` and
a vectorized pure-numpy version.  ``WALLIS_SERIES_USE_NUMBA=0`` forces the
numpy path; otherwise numba is used when it imports.

Integrands are addressed by an integer code (see ``CODES``) and take two
arguments, y and 1 - y, with 1 - y supplied separately so the closed forms
stay accurate as y approaches 1.
"""

from __future__ import annotations

import math
import os

import numpy as np

HALF_PI = 0.5 * math.pi

CODES = {
    "sin": 0,
    "cos": 1,
    "sinh": 2,
    "cosh": 3,
    "arcsin": 4,
    "x_cot_x": 5,
    "arctan": 6,
    "artanh": 7,
    "arsinh": 8,
    "tan": 9,
    "x_over_sin_x": 10,
    "x_over_sinh_x": 11,
    "sec": 12,
    "sech": 13,
}

INNER_SIN = 0
INNER_COS = 1

# smallest endpoint distance a node may have; keeps 1 - sin(pi/2 - d) ~ d^2/2 normal
MIN_ENDPOINT_DISTANCE = 1e-100


def _flag_enabled() -> bool:
    return os.environ.get("WALLIS_SERIES_USE_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")


try:
    import numba
except ImportError:  # pragma: no cover - numba is an optional accelerator
    numba = None

HAVE_NUMBA = numba is not None


def _maybe_njit(func):
    if numba is None:
        return None
    return numba.njit(cache=True)(func)


# scalar path -----------------------------------------------------------------


def _eval_scalar(code, y, omy):
    if code == 0:
        return math.sin(y)
    if code == 1:
        return math.cos(y)
    if code == 2:
        return math.sinh(y)
    if code == 3:
        return math.cosh(y)
    if code == 4:
        if y > 0.5:
            return HALF_PI - 2.0 * math.asin(math.sqrt(0.5 * omy))
        return math.asin(y)
    if code == 5:
        if y == 0.0:
            return 1.0
        return y * math.cos(y) / math.sin(y)
    if code == 6:
        return math.atan(y)
    if code == 7:
        if y < 0.5:
            return math.atanh(y)
        if omy <= 0.0:
            return math.inf
        return 0.5 * math.log((2.0 - omy) / omy)
    if code == 8:
        return math.asinh(y)
    if code == 9:
        return math.tan(y)
    if code == 10:
        if y == 0.0:
            return 1.0
        return y / math.sin(y)
    if code == 11:
        if y == 0.0:
            return 1.0
        return y / math.sinh(y)
    if code == 12:
        return 1.0 / math.cos(y)
    if code == 13:
        return 1.0 / math.cosh(y)
    return math.nan


def _map_inner(inner, da, db):
    # interval is [0, pi/2]; da = x, db = pi/2 - x, both accurate
    if inner == 0:
        if da <= db:
            y = math.sin(da)
            return y, 1.0 - y
        s = math.sin(0.5 * db)
        return math.cos(db), 2.0 * s * s
    if da <= db:
        s = math.sin(0.5 * da)
        return math.cos(da), 2.0 * s * s
    y = math.sin(db)
    return y, 1.0 - y


_eval_scalar_jit = _maybe_njit(_eval_scalar)
_map_inner_jit = _maybe_njit(_map_inner)

if numba is not None:
    @numba.njit(cache=True)
    def level_sum_numba(code, inner, half, h, jmax, odd_only):
        total = 0.0
        count = 0
        bad = 0
        step = 2 if odd_only else 1
        j = -jmax
        if odd_only and j % 2 == 0:
            j += 1
        while j <= jmax:
            t = j * h
            u = HALF_PI * math.sinh(t)
            cu = math.cosh(u)
            w = half * HALF_PI * math.cosh(t) / (cu * cu)
            da = half * math.exp(u) / cu
            db = half * math.exp(-u) / cu
            y, omy = _map_inner_jit(inner, da, db)
            f = _eval_scalar_jit(code, y, omy)
            if math.isfinite(f):
                total += w * f
            else:
                bad += 1
            count += 1
            j += step
        return total, count, bad
else:  # pragma: no cover
    level_sum_numba = None


# vectorized path --------------------------------------------------------------


def eval_array(code: int, y, omy):
    """Vectorized closed form of catalog entry ``code`` at y (with 1 - y = omy)."""
    y = np.asarray(y, dtype=float)
    omy = np.asarray(omy, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        if code == 0:
            return np.sin(y)
        if code == 1:
            return np.cos(y)
        if code == 2:
            return np.sinh(y)
        if code == 3:
            return np.cosh(y)
        if code == 4:
            near = HALF_PI - 2.0 * np.arcsin(np.sqrt(0.5 * omy))
            return np.where(y > 0.5, near, np.arcsin(np.minimum(y, 1.0)))
        if code == 5:
            return np.where(y == 0.0, 1.0, y * np.cos(y) / np.sin(y))
        if code == 6:
            return np.arctan(y)
        if code == 7:
            near = np.where(omy > 0.0, 0.5 * np.log((2.0 - omy) / omy), np.inf)
            return np.where(y < 0.5, np.arctanh(np.minimum(y, 0.5)), near)
        if code == 8:
            return np.arcsinh(y)
        if code == 9:
            return np.tan(y)
        if code == 10:
            return np.where(y == 0.0, 1.0, y / np.sin(y))
        if code == 11:
            return np.where(y == 0.0, 1.0, y / np.sinh(y))
        if code == 12:
            return 1.0 / np.cos(y)
        if code == 13:
            return 1.0 / np.cosh(y)
    raise ValueError(f"unknown integrand code {code}")


def node_indices(jmax: int, odd_only: bool) -> np.ndarray:
    if odd_only:
        start = -jmax if jmax % 2 else -jmax + 1
        return np.arange(start, jmax + 1, 2)
    return np.arange(-jmax, jmax + 1)


def de_nodes(half: float, h: float, jmax: int, odd_only: bool):
    """Tanh-sinh nodes of one level: (dist_to_a, dist_to_b, weights)."""
    t = node_indices(jmax, odd_only) * h
    u = HALF_PI * np.sinh(t)
    cu = np.cosh(u)
    w = half * HALF_PI * np.cosh(t) / (cu * cu)
    da = half * np.exp(u) / cu
    db = half * np.exp(-u) / cu
    return da, db, w


def map_inner_array(inner: int, da, db):
    left = da <= db
    if inner == INNER_SIN:
        s = np.sin(0.5 * db)
        y = np.where(left, np.sin(da), np.cos(db))
        omy = np.where(left, 1.0 - y, 2.0 * s * s)
    else:
        s = np.sin(0.5 * da)
        y = np.where(left, np.cos(da), np.sin(db))
        omy = np.where(left, 2.0 * s * s, 1.0 - y)
    return y, omy


def level_sum_numpy(code, inner, half, h, jmax, odd_only):
    da, db, w = de_nodes(half, h, jmax, odd_only)
    y, omy = map_inner_array(inner, da, db)
    f = eval_array(code, y, omy)
    ok = np.isfinite(f)
    return float(np.sum(w[ok] * f[ok])), int(f.size), int(f.size - np.count_nonzero(ok))


def jmax_for(half: float, h: float) -> int:
    """Largest node index whose endpoint distance stays above the floor."""
    u_max = 0.5 * math.log(2.0 * half / MIN_ENDPOINT_DISTANCE)
    t_max = math.asinh(u_max / HALF_PI)
    return int(t_max / h)


def use_numba() -> bool:
    return HAVE_NUMBA and _flag_enabled()


def level_sum(code, inner, half, h, jmax, odd_only):
    if use_numba():
        return level_sum_numba(code, inner, half, h, jmax, odd_only)
    return level_sum_numpy(code, inner, half, h, jmax, odd_only)


def backend() -> str:
    return "numba" if use_numba() else "numpy"
