"""Timing comparison of the two compute backends.

Runs the two hot primitives (pairwise squared distances, truncated
gaussian kernel matrix) on matched inputs under the numba backend and the
portable numpy backend, and prints best-of-N wall times per size.

Usage:
    python3 bench/bench_backends.py [--sizes 500,1000,2000,4000] [--d 32]
                                    [--reps 5]
"""

import argparse
import time

import numpy as np

from toppr import backends, balloon_bandwidth


def best_of(fn, reps: int) -> float:
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="500,1000,2000,4000",
                    help="comma-separated row counts")
    ap.add_argument("--d", type=int, default=32, help="feature dimension")
    ap.add_argument("--reps", type=int, default=5,
                    help="repetitions per measurement (best is reported)")
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",") if s]

    have_numba = True
    try:
        backends.set_backend("numba")
    except ImportError:
        have_numba = False
        print("numba backend unavailable, timing numpy only")

    g = np.random.default_rng(17)
    rows = []
    for n in sizes:
        a = g.standard_normal((n, args.d))
        b = g.standard_normal((n, args.d))
        h = balloon_bandwidth(a)
        for prim, call in (
            ("sq_dists", lambda: backends.sq_dists(a, b)),
            ("trunc_gauss_kernel", lambda: backends.trunc_gauss_kernel(a, b, h)),
        ):
            times = {}
            for name in (("numba", "numpy") if have_numba else ("numpy",)):
                backends.set_backend(name)
                call()  # warm-up: first numba call compiles
                times[name] = best_of(call, args.reps)
            rows.append((prim, n, times))

    print(f"d={args.d}, best of {args.reps}")
    print(f"{'primitive':<20} {'n':>6} {'numpy ms':>10} {'numba ms':>10} {'ratio':>7}")
    for prim, n, times in rows:
        np_ms = times["numpy"] * 1e3
        if "numba" in times:
            nb_ms = times["numba"] * 1e3
            ratio = f"{np_ms / nb_ms:7.2f}"
            print(f"{prim:<20} {n:>6} {np_ms:>10.2f} {nb_ms:>10.2f} {ratio}")
        else:
            print(f"{prim:<20} {n:>6} {np_ms:>10.2f} {'-':>10} {'-':>7}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
