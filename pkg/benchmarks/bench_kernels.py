"""Time the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import time

import numpy as np

from hirzewahl import kernels
from hirzewahl.blowup_sections import pick_generic_points
from hirzewahl.gaussian import gaussian_matrix
from hirzewahl.picard import DivisorClass


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not kernels._HAVE_NUMBA:
        raise SystemExit("numba not importable; nothing to compare")
    p = kernels.MODULUS

    pts = pick_generic_points(0, 2, 42)
    A = gaussian_matrix(0, DivisorClass(4, 13, (1, 1)), pts).to_mod_p(p)
    cases = [
        ("rank_mod_p gaussian (0,6,15,2)", A,
         lambda: kernels._rank_mod_p_numba(A.copy(), p),
         lambda: kernels._rank_mod_p_numpy(A, p)),
    ]
    rng = np.random.default_rng(0)
    R = rng.integers(-1000, 1000, size=(300, 300))
    cases.append(("rank_mod_p dense 300x300", R,
                  lambda: kernels._rank_mod_p_numba(R.astype(np.int64) % p, p),
                  lambda: kernels._rank_mod_p_numpy(R, p)))
    m = np.array([1, 2, 1], dtype=np.int64)
    cases.append(("reider scan delta=3, bound 24", None,
                  lambda: kernels._reider_scan_numba(1, 1, m, 1, 24, 24)[:2],
                  lambda: kernels._reider_scan_numpy(1, 1, m, 1, 24, 24)[:2]))

    print(f"{'kernel':36s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}")
    for name, _, fast, slow in cases:
        fast()  # compile
        tf, of = best_of(fast, args.repeat)
        ts, os_ = best_of(slow, args.repeat)
        assert (of == os_) if not isinstance(of, tuple) else tuple(of) == tuple(os_)
        print(f"{name:36s} {tf * 1e3:9.2f}ms {ts * 1e3:9.2f}ms {ts / tf:7.1f}x")


if __name__ == "__main__":
    main()
