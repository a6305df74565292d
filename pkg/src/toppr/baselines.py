"""Neighborhood-ball baseline metrics.

Improved precision/recall: a generated point scores a hit when it falls
within the k-th nearest neighbor ball of any real point (closed balls:
distance <= radius, compared in squared form so no square root enters the
comparison). Recall swaps the roles. Both are fractions in [0, 1].

Density/coverage: density counts, per generated point, how many real balls
contain it; with the "original" normalization the double sum is divided by
k*M, with "paper_literal" only by M, in which case the value can exceed 1.
Coverage is the fraction of real points whose ball contains at least one
generated point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backends
from .errors import BadSpec, DimMismatch
from .neighbors import knn_sq_dist
from .tensor_io import ensure_matrix

_BLOCK_ROWS = 2048

DC_VARIANTS = ("original", "paper_literal")


@dataclass(frozen=True)
class PrResult:
    precision: float
    recall: float
    k: int


@dataclass(frozen=True)
class DcResult:
    density: float
    coverage: float
    k: int
    variant: str


def _check_pair(real: np.ndarray, fake: np.ndarray) -> None:
    if real.shape[1] != fake.shape[1]:
        raise DimMismatch(
            f"real has {real.shape[1]} columns, fake has {fake.shape[1]}"
        )


def _hits_any(query: np.ndarray, centers: np.ndarray, sq_radii: np.ndarray) -> np.ndarray:
    """For each query row: does any ball B(centers_i, radii_i) contain it?"""
    out = np.empty(query.shape[0], dtype=bool)
    for start in range(0, query.shape[0], _BLOCK_ROWS):
        stop = min(start + _BLOCK_ROWS, query.shape[0])
        d = backends.sq_dists(query[start:stop], centers)
        out[start:stop] = (d <= sq_radii[None, :]).any(axis=1)
    return out


def improved_pr(real, fake, k: int = 5) -> PrResult:
    real = ensure_matrix(real, "real")
    fake = ensure_matrix(fake, "fake")
    _check_pair(real, fake)
    sq_r_real = knn_sq_dist(real, real, k, exclude_self=True)
    sq_r_fake = knn_sq_dist(fake, fake, k, exclude_self=True)
    precision = float(np.count_nonzero(_hits_any(fake, real, sq_r_real))) / fake.shape[0]
    recall = float(np.count_nonzero(_hits_any(real, fake, sq_r_fake))) / real.shape[0]
    return PrResult(precision=precision, recall=recall, k=int(k))


def density_coverage(real, fake, k: int = 5, variant: str = "original") -> DcResult:
    if variant not in DC_VARIANTS:
        raise BadSpec(f"variant must be one of {DC_VARIANTS}, got {variant!r}")
    real = ensure_matrix(real, "real")
    fake = ensure_matrix(fake, "fake")
    _check_pair(real, fake)
    sq_r_real = knn_sq_dist(real, real, k, exclude_self=True)

    raw = 0
    for start in range(0, fake.shape[0], _BLOCK_ROWS):
        stop = min(start + _BLOCK_ROWS, fake.shape[0])
        d = backends.sq_dists(fake[start:stop], real)
        raw += int(np.count_nonzero(d <= sq_r_real[None, :]))
    denom = fake.shape[0] * (k if variant == "original" else 1)
    density = raw / denom

    covered = 0
    for start in range(0, real.shape[0], _BLOCK_ROWS):
        stop = min(start + _BLOCK_ROWS, real.shape[0])
        d = backends.sq_dists(real[start:stop], fake)
        covered += int(np.count_nonzero((d <= sq_r_real[start:stop, None]).any(axis=1)))
    coverage = covered / real.shape[0]

    return DcResult(density=float(density), coverage=float(coverage), k=int(k), variant=variant)
