"""Random linear projection to a lower-dimensional feature space.

The map is a (source_dim, target_dim) matrix with IID N(0, 1/target_dim)
entries, so expected squared distances are preserved:
E ||(x - y) M||^2 = ||x - y||^2. One map is sampled per run seed and shared
by every dataset scored in that run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._rng import stream
from .errors import BadDims, DimMismatch
from .tensor_io import ensure_matrix


@dataclass(frozen=True)
class ProjectionMap:
    """Sampled projection matrix plus the parameters that produced it."""

    matrix: np.ndarray
    seed: int

    @property
    def source_dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def target_dim(self) -> int:
        return self.matrix.shape[1]


def make_projection(source_dim: int, target_dim: int, seed: int) -> ProjectionMap:
    """Sample the shared projection map for a run.

    target_dim must satisfy 1 <= target_dim <= source_dim; target_dim equal
    to source_dim is valid (the map is still random, not the identity).
    """
    if source_dim < 1:
        raise BadDims(f"source_dim must be >= 1, got {source_dim}")
    if not 1 <= target_dim <= source_dim:
        raise BadDims(
            f"target_dim must be in [1, source_dim={source_dim}], got {target_dim}"
        )
    g = stream("toppr.projection", seed, source_dim, target_dim)
    matrix = g.standard_normal((source_dim, target_dim)) * (1.0 / math.sqrt(target_dim))
    return ProjectionMap(matrix=matrix, seed=int(seed))


def project(pmap: ProjectionMap, x) -> np.ndarray:
    """Apply the map to a matrix of row vectors."""
    data = ensure_matrix(x, "project input")
    if data.shape[1] != pmap.source_dim:
        raise DimMismatch(
            f"projection expects {pmap.source_dim} columns, got {data.shape[1]}"
        )
    return np.ascontiguousarray(data @ pmap.matrix)
