"""Pairwise distances and k-th nearest neighbor distances.

Distance convention: squared distances come from the backend expansion
||a||^2 + ||b||^2 - 2 a.b clamped at zero (see toppr.backends). knn queries
run in fixed-size row blocks; because blocking only partitions independent
query rows, blocked and unblocked evaluation agree bit for bit.

Self-exclusion is positional: when query and reference are the same stack of
rows, row i ignores reference row i only. Duplicate points at other indices
legitimately produce zero-distance neighbors.
"""

from __future__ import annotations

import numpy as np

from . import backends
from .errors import BadSpec, DimMismatch, KTooLarge, RowCountMismatch
from .tensor_io import ensure_matrix

_BLOCK_ROWS = 2048


def pairwise_sq_dists(a, b) -> np.ndarray:
    """Full (a.rows, b.rows) matrix of squared Euclidean distances."""
    a = ensure_matrix(a, "pairwise a")
    b = ensure_matrix(b, "pairwise b")
    if a.shape[1] != b.shape[1]:
        raise DimMismatch(
            f"pairwise inputs disagree on columns: {a.shape[1]} vs {b.shape[1]}"
        )
    return backends.sq_dists(a, b)


def _validate_knn(query: np.ndarray, reference: np.ndarray, k: int, exclude_self: bool):
    if query.shape[1] != reference.shape[1]:
        raise DimMismatch(
            f"knn inputs disagree on columns: {query.shape[1]} vs {reference.shape[1]}"
        )
    if k < 1:
        raise BadSpec(f"k must be >= 1, got {k}")
    limit = reference.shape[0] - 1 if exclude_self else reference.shape[0]
    if k > limit:
        raise KTooLarge(
            f"k={k} too large for {reference.shape[0]} reference rows"
            f" (exclude_self={exclude_self})"
        )
    if exclude_self and query.shape[0] != reference.shape[0]:
        raise RowCountMismatch(
            "exclude_self requires query and reference to be the same row stack: "
            f"{query.shape[0]} vs {reference.shape[0]} rows"
        )


def knn_sq_dist(query, reference, k: int, exclude_self: bool = False) -> np.ndarray:
    """Squared distance from each query row to its k-th nearest reference row."""
    query = ensure_matrix(query, "knn query")
    reference = ensure_matrix(reference, "knn reference")
    _validate_knn(query, reference, k, exclude_self)

    n = query.shape[0]
    out = np.empty(n, dtype=np.float64)
    for start in range(0, n, _BLOCK_ROWS):
        stop = min(start + _BLOCK_ROWS, n)
        d = backends.sq_dists(query[start:stop], reference)
        if exclude_self:
            idx = np.arange(start, stop)
            d[idx - start, idx] = np.inf
        out[start:stop] = np.partition(d, k - 1, axis=1)[:, k - 1]
    return out


def knn_dist(query, reference, k: int, exclude_self: bool = False) -> np.ndarray:
    """Euclidean distance from each query row to its k-th nearest reference row."""
    return np.sqrt(knn_sq_dist(query, reference, k, exclude_self=exclude_self))
