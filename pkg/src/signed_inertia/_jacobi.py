"""Cyclic Jacobi diagonalization of small dense symmetric float matrices.

This is the only floating-point kernel in the package; it backs plotting
and cross-check oracles, never exact decisions.  The hot loop is compiled
with numba when available; setting ``SIGNED_INERTIA_NO_NUMBA=1`` (or having
no numba installed) selects the pure-numpy fallback.  ``benchmarks/
bench_jacobi.py`` compares the two paths.
"""

from __future__ import annotations

import math
import os

import numpy as np

DEFAULT_TOL = 1e-12
DEFAULT_MAX_SWEEPS = 100


def _sweep_loops(a, tol, max_sweeps):
    # numba-compatible: plain loops, in-place rotations
    n = a.shape[0]
    for _ in range(max_sweeps):
        off = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off += a[i, j] * a[i, j]
        if 2.0 * off < tol * tol:
            break
        for p in range(n):
            for q in range(p + 1, n):
                apq = a[p, q]
                diff = a[q, q] - a[p, p]
                if apq == 0.0:
                    continue
                if abs(apq) * 1.0e130 < abs(diff):
                    # rotation angle below any representable effect
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                theta = 0.5 * diff / apq
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
    return np.diag(a).copy()


def _sweep_numpy(a, tol, max_sweeps):
    # vectorized fallback: whole-column/row rotations per pivot
    n = a.shape[0]
    for _ in range(max_sweeps):
        off = np.sum(a * a) - np.sum(np.diag(a) ** 2)
        if off < tol * tol:
            break
        for p in range(n):
            for q in range(p + 1, n):
                apq = a[p, q]
                diff = a[q, q] - a[p, p]
                if apq == 0.0:
                    continue
                if abs(apq) * 1.0e130 < abs(diff):
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                theta = 0.5 * diff / apq
                t = math.copysign(
                    1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0)), theta
                )
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
    return np.diag(a).copy()


def _want_numba() -> bool:
    flag = os.environ.get("SIGNED_INERTIA_NO_NUMBA", "").strip().lower()
    return flag not in {"1", "true", "yes", "on"}


def _compiled_kernel():
    from numba import njit

    return njit(cache=True)(_sweep_loops)


if _want_numba():
    try:
        _kernel = _compiled_kernel()
        BACKEND = "numba"
    except ImportError:
        _kernel = _sweep_numpy
        BACKEND = "numpy"
else:
    _kernel = _sweep_numpy
    BACKEND = "numpy"


def symmetric_eigenvalues(
    matrix, tol: float = DEFAULT_TOL, max_sweeps: int = DEFAULT_MAX_SWEEPS
) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, ascending.

    Rotations run until the off-diagonal Frobenius norm drops below ``tol``.
    """
    a = np.array(matrix, dtype=np.float64, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    if a.shape[0] == 0:
        return np.zeros(0)
    if a.shape[0] == 1:
        return a[0].copy()
    return np.sort(_kernel(a, tol, max_sweeps))
