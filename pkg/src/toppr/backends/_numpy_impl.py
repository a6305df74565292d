"""Pure numpy backend. This is the reference arithmetic: squared distances
via the expansion ||a||^2 + ||b||^2 - 2 a.b clamped at zero; kernel values
by scaling the clamped distances with 1/h^2, applying exp(-0.5 * t) where
t <= 1, and zero beyond the cutoff."""

from __future__ import annotations

import numpy as np


def sq_dists(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    na = (a * a).sum(axis=1)
    nb = (b * b).sum(axis=1)
    out = na[:, None] + nb[None, :]
    out -= 2.0 * (a @ b.T)
    # expansion can go slightly negative under cancellation
    np.maximum(out, 0.0, out=out)
    return out


def trunc_gauss_kernel(a: np.ndarray, b: np.ndarray, h: float) -> np.ndarray:
    t = sq_dists(a, b)
    t *= 1.0 / (h * h)
    keep = t <= 1.0
    t *= -0.5
    np.exp(t, out=t)
    t[~keep] = 0.0
    return t
