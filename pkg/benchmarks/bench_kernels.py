"""Compiled vs. pure-Python kernels (and scipy's assignment solver as a yardstick).

    python3 benchmarks/bench_kernels.py [--sizes 256 512 1024] [--repeat 3]

Prints one row per (kernel, size, backend) with the best wall time and checks
that all backends agree on the answer.
"""

import argparse
import time

import numpy as np
from scipy.optimize import linear_sum_assignment

from meanflow_lab import kernels
from meanflow_lab.sample_eval import sq_dist_matrix


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def bench_assignment(sizes, repeat):
    rng = np.random.default_rng(0)
    for n in sizes:
        a = rng.standard_normal((n, 2))
        b = rng.standard_normal((n, 2)) + 0.5
        cost = sq_dist_matrix(a, b)
        rows = np.arange(n)
        backends = [("scipy", lambda: linear_sum_assignment(cost)[1])]
        if kernels.compiled is not None:
            backends.append(("compiled", lambda: kernels.compiled.solve_assignment(cost)))
        # the pure solver is O(n^3) in Python-level loops; cap it so the run stays short
        if n <= 1024:
            backends.append(("pure", lambda: kernels.pure.solve_assignment(cost)))
        ref = None
        for name, fn in backends:
            dt, col = best_of(fn, repeat if name != "pure" else 1)
            total = cost[rows, col].sum()
            ref = total if ref is None else ref
            ok = abs(total - ref) <= 1e-9 * max(1.0, abs(ref))
            print(f"assignment n={n:5d} {name:9s} {dt * 1e3:10.1f} ms  cost={total:.6f} {'ok' if ok else 'MISMATCH'}")


def bench_silu(shapes, repeat):
    rng = np.random.default_rng(1)
    for shape in shapes:
        x = rng.standard_normal(shape) * 4
        backends = [("pure", lambda: kernels.pure.silu_and_grad(x))]
        if kernels.compiled is not None:
            backends.insert(0, ("compiled", lambda: kernels.compiled.silu_and_grad(x)))
        ref = None
        for name, fn in backends:
            dt, (y, dy) = best_of(fn, repeat * 20)
            ref = (y, dy) if ref is None else ref
            err = max(np.abs(y - ref[0]).max(), np.abs(dy - ref[1]).max())
            print(f"silu {str(shape):12s} {name:9s} {dt * 1e3:10.3f} ms  max|diff|={err:.1e}")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[256, 512, 1024])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    print(f"default backend: {kernels.BACKEND}")
    bench_assignment(args.sizes, args.repeat)
    bench_silu([(256, 128), (512, 256), (2048, 256)], args.repeat)


if __name__ == "__main__":
    main()
