#!/usr/bin/env python3
"""Benchmark the symmetric-eigenvalue kernel: numba @njit vs numpy fallback.

Run:  python benchmarks/bench_jacobi.py [--sizes 8 16 32 64] [--repeats 20]

The same cyclic-Jacobi sweep backs both paths; this script times them head
to head on random symmetric matrices and cross-checks the spectra against
numpy.linalg.eigvalsh.
"""

import argparse
import time

import numpy as np

from signed_inertia._jacobi import (
    DEFAULT_MAX_SWEEPS,
    DEFAULT_TOL,
    _compiled_kernel,
    _sweep_numpy,
)


def run_kernel(kernel, matrices, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for m in matrices:
            kernel(m.copy(), DEFAULT_TOL, DEFAULT_MAX_SWEEPS)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 32, 64])
    parser.add_argument("--repeats", type=int, default=20)
    parser.add_argument("--batch", type=int, default=25)
    args = parser.parse_args()

    try:
        jit_kernel = _compiled_kernel()
    except ImportError:
        print("numba not installed; nothing to compare")
        return 1

    rng = np.random.default_rng(0)
    print(f"{'n':>4}  {'numba (ms)':>12}  {'numpy (ms)':>12}  {'speedup':>8}")
    for n in args.sizes:
        matrices = []
        for _ in range(args.batch):
            a = rng.standard_normal((n, n))
            matrices.append(a + a.T)
        # warm-up triggers (and caches) compilation
        jit_kernel(matrices[0].copy(), DEFAULT_TOL, DEFAULT_MAX_SWEEPS)

        got = np.sort(jit_kernel(matrices[0].copy(), DEFAULT_TOL, DEFAULT_MAX_SWEEPS))
        want = np.linalg.eigvalsh(matrices[0])
        assert np.allclose(got, want, atol=1e-8), "numba kernel disagrees"
        got = np.sort(_sweep_numpy(matrices[0].copy(), DEFAULT_TOL, DEFAULT_MAX_SWEEPS))
        assert np.allclose(got, want, atol=1e-8), "numpy kernel disagrees"

        t_jit = run_kernel(jit_kernel, matrices, args.repeats)
        t_np = run_kernel(_sweep_numpy, matrices, args.repeats)
        print(
            f"{n:>4}  {1e3 * t_jit:>12.3f}  {1e3 * t_np:>12.3f}"
            f"  {t_np / t_jit:>7.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
