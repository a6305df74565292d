"""Kernel density scoring with a balloon-style bandwidth.

Kernel means are deliberately unnormalized, and the kernel is compactly
supported: a Gaussian profile inside one bandwidth radius, zero beyond it.

    s(x) = (1/n) * sum_i K(||x - X_i|| / h)
    K(u) = exp(-u^2 / 2) for u <= 1, else 0

The 1/h^d normalizer of a proper KDE is dropped: every use of s downstream
is a comparison s(x) > c against a threshold c built from the same s, and
that comparison is invariant to positive rescaling of both sides. Dropping
the factor avoids h^-d overflow/underflow at the feature dimensions this
library targets.

The cutoff at one bandwidth radius makes estimated supports genuinely
bounded. An unbounded kernel never reaches zero, so any sufficiently large
sample eventually bridges well separated regions; the cutoff is what lets
the scores fall to exactly zero away from the data, which the separation
and noise behavior of the pipeline depends on.

The bandwidth is the median over data points of the distance to their k-th
nearest neighbor (self excluded positionally), with k defaulting to
ceil(sqrt(n)). The median follows the numpy convention: mean of the two
central order statistics for even counts.

Reduction recipe (fixed so independent reimplementations can match bit for
bit): kernel rows are computed by the active backend, and each row is summed
by np.einsum over the reference axis; query rows are processed in blocks,
which cannot change any output bit because rows are independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import backends
from .errors import BadSpec, DegenerateData, DimMismatch, KTooLarge, TooFewRows
from .neighbors import knn_dist
from .tensor_io import ensure_matrix

_BLOCK_ROWS = 2048


@dataclass(frozen=True)
class KdeModel:
    """Reference sample plus the bandwidth its density is scored with."""

    reference: np.ndarray
    bandwidth: float

    def __post_init__(self):
        ref = ensure_matrix(self.reference, "KdeModel reference")
        object.__setattr__(self, "reference", ref)
        h = float(self.bandwidth)
        if not (math.isfinite(h) and h > 0.0):
            raise BadSpec(f"bandwidth must be finite and > 0, got {self.bandwidth!r}")
        object.__setattr__(self, "bandwidth", h)


def balloon_bandwidth(data, k: int | None = None) -> float:
    """Median k-th nearest neighbor distance over the data points.

    k=None picks ceil(sqrt(n)). Raises DegenerateData when the median is
    zero, i.e. at least half the points sit on duplicated locations; no
    kernel scale separates such data from a point mass.
    """
    data = ensure_matrix(data, "balloon data")
    n = data.shape[0]
    if n < 2:
        raise TooFewRows(f"bandwidth needs >= 2 rows, got {n}")
    if k is None:
        k = math.isqrt(n) if math.isqrt(n) ** 2 == n else math.isqrt(n) + 1
    if k < 1:
        raise BadSpec(f"k must be >= 1, got {k}")
    if k > n - 1:
        raise KTooLarge(f"k={k} too large for n={n} (need k <= n-1)")
    dists = knn_dist(data, data, k, exclude_self=True)
    h = float(np.median(dists))
    if h <= 0.0:
        raise DegenerateData(
            f"median {k}-NN distance is zero: too many duplicated rows (n={n})"
        )
    return h


def kernel_mean(model: KdeModel, query) -> np.ndarray:
    """Mean kernel value of each query row under the model, in [0, 1].

    Exactly 1 only when every reference point coincides with the query;
    exactly 0 once the query is more than one bandwidth away from all of
    them.
    """
    q = ensure_matrix(query, "kernel_mean query")
    ref = model.reference
    if q.shape[1] != ref.shape[1]:
        raise DimMismatch(
            f"query has {q.shape[1]} columns, model reference has {ref.shape[1]}"
        )
    n = ref.shape[0]
    out = np.empty(q.shape[0], dtype=np.float64)
    for start in range(0, q.shape[0], _BLOCK_ROWS):
        stop = min(start + _BLOCK_ROWS, q.shape[0])
        g = backends.trunc_gauss_kernel(q[start:stop], ref, model.bandwidth)
        out[start:stop] = np.einsum("ij->i", g) / n
    return out
