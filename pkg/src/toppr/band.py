"""Bootstrap confidence band for the kernel mean.

The threshold below which density features are treated as statistical noise
is estimated by a multiplier-free resampling bootstrap:

    s      = kernel mean of the data under its own model (evaluated at the
             n data points themselves)
    repeat r = 0..repeats-1:
        draw n indices with replacement from [0, n)
        s*_r   = kernel mean of the resampled multiset, same eval points
        theta_r = sqrt(n) * max_i |s(X_i) - s*_r(X_i)|
    c      = upper_quantile(theta, alpha) / sqrt(n)

The sup norm is evaluated over the original n data points. The quantile is
the nearest-rank upper quantile: the smallest sampled theta value q with
#{theta > q} / repeats <= alpha, i.e. the ascending order statistic at
1-based index repeats - floor(alpha * repeats).

Determinism contract: repeat r draws its indices from the Philox stream
keyed by ("toppr.bootstrap", seed, r) via integers(0, n, size=n) with
int64 dtype (see toppr._rng for the key derivation), so each repeat is
reproducible independently of evaluation order. The resampled kernel mean
is computed as a weighted mean over unique rows, s*_r = einsum(G, w_r) / n
with w_r the int64 multiplicity counts cast to float64; together with the
fixed kernel arithmetic (toppr.backends) this pins every output bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import backends
from ._rng import stream
from .errors import BadAlpha, ZeroRepeats
from .kde import KdeModel
from .tensor_io import ensure_matrix

_BLOCK_ROWS = 2048


@dataclass(frozen=True)
class ConfidenceBand:
    """Band level c plus the bootstrap draw that produced it."""

    c: float
    alpha: float
    repeats: int
    theta: np.ndarray
    seed: int


def upper_quantile(values, alpha: float) -> float:
    """Nearest-rank upper-alpha quantile of a sample.

    Smallest sampled value q with #{values > q} / len(values) <= alpha.
    """
    if not 0.0 < float(alpha) < 1.0:
        raise BadAlpha(f"alpha must lie in (0, 1), got {alpha}")
    values = np.asarray(values, dtype=np.float64)
    k = values.shape[0]
    if k < 1:
        raise ZeroRepeats("quantile of an empty sample")
    # 1e-9 guards binary rounding of alpha*k (e.g. 0.1 * 10)
    j = k - int(math.floor(float(alpha) * k + 1e-9))
    return float(np.sort(values)[j - 1])


def bootstrap_band(
    data,
    bandwidth: float,
    alpha: float = 0.1,
    repeats: int = 10,
    seed: int = 0,
) -> ConfidenceBand:
    """Estimate the noise-level band c for one dataset.

    `seed` is the dataset-level seed (content-keyed by the scoring pipeline);
    repeat r uses the derived stream ("toppr.bootstrap", seed, r).
    """
    data = ensure_matrix(data, "band data")
    if not 0.0 < float(alpha) < 1.0:
        raise BadAlpha(f"alpha must lie in (0, 1), got {alpha}")
    if repeats < 1:
        raise ZeroRepeats(f"repeats must be >= 1, got {repeats}")
    model = KdeModel(reference=data, bandwidth=bandwidth)
    n = data.shape[0]
    root_n = math.sqrt(n)

    weights = np.empty((repeats, n), dtype=np.float64)
    for r in range(repeats):
        idx = stream("toppr.bootstrap", seed, r).integers(0, n, size=n, dtype=np.int64)
        weights[r] = np.bincount(idx, minlength=n).astype(np.float64)

    sup = np.zeros(repeats, dtype=np.float64)
    for start in range(0, n, _BLOCK_ROWS):
        stop = min(start + _BLOCK_ROWS, n)
        g = backends.trunc_gauss_kernel(data[start:stop], data, model.bandwidth)
        s_blk = np.einsum("ij->i", g) / n
        for r in range(repeats):
            s_star_blk = np.einsum("ij,j->i", g, weights[r]) / n
            m = float(np.max(np.abs(s_blk - s_star_blk)))
            if m > sup[r]:
                sup[r] = m
    theta = root_n * sup

    c = upper_quantile(theta, alpha) / root_n
    return ConfidenceBand(
        c=float(c), alpha=float(alpha), repeats=int(repeats), theta=theta, seed=int(seed)
    )
