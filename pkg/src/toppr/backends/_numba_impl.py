"""Numba backend: the same expansion-with-clamp arithmetic as the numpy
reference, fused into jitted loops. Rows are independent (prange over query
rows, sequential inner loops), so results do not depend on thread count."""

from __future__ import annotations

import numpy as np
from numba import njit, prange


@njit(parallel=True, cache=True)
def _sq_dists(a, b):
    n, d = a.shape
    m = b.shape[0]
    nb = np.empty(m)
    for j in range(m):
        acc = 0.0
        for k in range(d):
            acc += b[j, k] * b[j, k]
        nb[j] = acc
    out = np.empty((n, m))
    for i in prange(n):
        na = 0.0
        for k in range(d):
            na += a[i, k] * a[i, k]
        for j in range(m):
            dot = 0.0
            for k in range(d):
                dot += a[i, k] * b[j, k]
            v = na + nb[j] - 2.0 * dot
            out[i, j] = v if v > 0.0 else 0.0
    return out


@njit(parallel=True, cache=True)
def _trunc_gauss_kernel(a, b, inv_h2):
    n, d = a.shape
    m = b.shape[0]
    nb = np.empty(m)
    for j in range(m):
        acc = 0.0
        for k in range(d):
            acc += b[j, k] * b[j, k]
        nb[j] = acc
    out = np.empty((n, m))
    for i in prange(n):
        na = 0.0
        for k in range(d):
            na += a[i, k] * a[i, k]
        for j in range(m):
            dot = 0.0
            for k in range(d):
                dot += a[i, k] * b[j, k]
            v = na + nb[j] - 2.0 * dot
            if v < 0.0:
                v = 0.0
            t = v * inv_h2
            # same op order as the numpy path: scale, cutoff, exp
            out[i, j] = np.exp(t * -0.5) if t <= 1.0 else 0.0
    return out


def sq_dists(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return _sq_dists(np.ascontiguousarray(a), np.ascontiguousarray(b))


def trunc_gauss_kernel(a: np.ndarray, b: np.ndarray, h: float) -> np.ndarray:
    inv_h2 = 1.0 / (h * h)
    return _trunc_gauss_kernel(np.ascontiguousarray(a), np.ascontiguousarray(b), inv_h2)
