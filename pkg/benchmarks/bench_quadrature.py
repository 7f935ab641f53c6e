"""Compare the numba and numpy tanh-sinh level sums.

    python benchmarks/bench_quadrature.py [--repeat N] [--levels L]

Times one full oracle pass (levels 0..L, both inner functions) per catalog
entry for each backend, after a warm-up call so numba compilation is not
counted.  Values from the two backends are checked to agree.
"""

import argparse
import math
import time

from wallis_series import _kernels
from wallis_series.series_catalog import catalog_names

HALF = math.pi / 4


def full_pass(level_sum, code, levels):
    total = 0.0
    for inner in (_kernels.INNER_SIN, _kernels.INNER_COS):
        h = 1.0
        acc = level_sum(code, inner, HALF, h, _kernels.jmax_for(HALF, h), False)[0]
        for _ in range(levels):
            h *= 0.5
            acc += level_sum(code, inner, HALF, h, _kernels.jmax_for(HALF, h), True)[0]
        total += h * acc
    return total


def best_of(fn, repeat):
    best = math.inf
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return best, value


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--levels", type=int, default=8)
    args = parser.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    t0 = time.perf_counter()
    full_pass(_kernels.level_sum_numba, 0, 1)
    print(f"numba warm-up (compile or cache load): {time.perf_counter() - t0:.2f}s")
    print(f"{'entry':<14} {'numpy ms':>9} {'numba ms':>9} {'speedup':>8} {'|diff|':>9}")
    totals = [0.0, 0.0]
    for name in catalog_names():
        code = _kernels.CODES[name]
        t_np, v_np = best_of(lambda: full_pass(_kernels.level_sum_numpy, code, args.levels), args.repeat)
        t_nb, v_nb = best_of(lambda: full_pass(_kernels.level_sum_numba, code, args.levels), args.repeat)
        totals[0] += t_np
        totals[1] += t_nb
        print(f"{name:<14} {1e3 * t_np:9.3f} {1e3 * t_nb:9.3f} {t_np / t_nb:8.1f} {abs(v_np - v_nb):9.1e}")
    print(f"{'total':<14} {1e3 * totals[0]:9.3f} {1e3 * totals[1]:9.3f} {totals[0] / totals[1]:8.1f}")


if __name__ == "__main__":
    main()
