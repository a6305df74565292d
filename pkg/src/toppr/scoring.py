"""Support-estimate precision/recall scoring pipeline.

A dataset's support is estimated as the superlevel set of its kernel mean at
the bootstrap band level: a point x counts as inside iff s(x) > c, strictly.
Precision is the fraction of generated points that lie in the estimated real
support, among generated points that lie in their own estimated support;
recall swaps the roles:

    precision = #{j : s_real(Y_j) > c_real and s_fake(Y_j) > c_fake}
                / #{j : s_fake(Y_j) > c_fake}
    recall    = #{i : s_fake(X_i) > c_fake and s_real(X_i) > c_real}
                / #{i : s_real(X_i) > c_real}

A zero denominator yields a score of 0.0.

Both datasets pass through one shared random projection sampled from the run
seed. Each projected dataset then gets its own bandwidth and band, driven by
a content-keyed seed (see toppr._rng), so a dataset is processed identically
whether it is passed as real or as fake; swapping the arguments swaps
precision and recall exactly, bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._rng import dataset_seed
from .band import ConfidenceBand, bootstrap_band
from .errors import BadDims, DimMismatch, OutOfRange, TooFewRows
from .kde import KdeModel, balloon_bandwidth, kernel_mean
from .projection import make_projection, project
from .tensor_io import ensure_matrix


@dataclass(frozen=True)
class PipelineConfig:
    """Scoring pipeline parameters.

    proj_dim None disables projection; proj_dim equal to the feature
    dimension still applies a (square) random map. balloon_k None selects
    ceil(sqrt(n)) per dataset.
    """

    proj_dim: int | None = 32
    alpha: float = 0.1
    repeats: int = 10
    balloon_k: int | None = None
    seed: int = 42


@dataclass(frozen=True)
class SupportEstimate:
    """KDE model plus the band that thresholds it."""

    model: KdeModel
    band: ConfidenceBand

    def score(self, query) -> np.ndarray:
        return kernel_mean(self.model, query)

    def membership(self, query) -> np.ndarray:
        """Boolean mask: strictly above the band level."""
        return self.score(query) > self.band.c


@dataclass(frozen=True)
class ScoreReport:
    top_p: float
    top_r: float
    f1: float
    h_real: float
    h_fake: float
    c_real: float
    c_fake: float
    n_real: int
    n_fake: int
    proj_dim: int | None
    alpha: float
    repeats: int
    seed: int
    precision_numer: int
    precision_denom: int
    recall_numer: int
    recall_denom: int


def f1_score(precision: float, recall: float) -> float:
    """Harmonic mean; 0.0 when both inputs are 0."""
    p = float(precision)
    r = float(recall)
    for name, v in (("precision", p), ("recall", r)):
        if not (math.isfinite(v) and 0.0 <= v <= 1.0):
            raise OutOfRange(f"{name} must lie in [0, 1], got {v!r}")
    if p + r == 0.0:
        return 0.0
    return 2.0 * p * r / (p + r)


def estimate_support(
    data,
    balloon_k: int | None = None,
    alpha: float = 0.1,
    repeats: int = 10,
    seed: int = 0,
) -> SupportEstimate:
    """Bandwidth, model, and band for one (already projected) dataset."""
    data = ensure_matrix(data, "support data")
    if data.shape[0] < 2:
        raise TooFewRows(f"support estimation needs >= 2 rows, got {data.shape[0]}")
    h = balloon_bandwidth(data, k=balloon_k)
    model = KdeModel(reference=data, bandwidth=h)
    band = bootstrap_band(data, h, alpha=alpha, repeats=repeats, seed=seed)
    return SupportEstimate(model=model, band=band)


def top_pr(real, fake, config: PipelineConfig = PipelineConfig()) -> ScoreReport:
    """Score a generated sample against a reference sample."""
    real = ensure_matrix(real, "real")
    fake = ensure_matrix(fake, "fake")
    if real.shape[1] != fake.shape[1]:
        raise DimMismatch(
            f"real has {real.shape[1]} columns, fake has {fake.shape[1]}"
        )
    for name, m in (("real", real), ("fake", fake)):
        if m.shape[0] < 2:
            raise TooFewRows(f"{name} needs >= 2 rows, got {m.shape[0]}")

    if config.proj_dim is not None:
        if not 1 <= config.proj_dim <= real.shape[1]:
            raise BadDims(
                f"proj_dim must be in [1, {real.shape[1]}], got {config.proj_dim}"
            )
        pmap = make_projection(real.shape[1], config.proj_dim, config.seed)
        real = project(pmap, real)
        fake = project(pmap, fake)

    seed_real = dataset_seed(config.seed, real)
    seed_fake = dataset_seed(config.seed, fake)
    sup_real = estimate_support(
        real, balloon_k=config.balloon_k, alpha=config.alpha,
        repeats=config.repeats, seed=seed_real,
    )
    sup_fake = estimate_support(
        fake, balloon_k=config.balloon_k, alpha=config.alpha,
        repeats=config.repeats, seed=seed_fake,
    )

    fake_in_real = sup_real.membership(fake)
    fake_in_fake = sup_fake.membership(fake)
    real_in_fake = sup_fake.membership(real)
    real_in_real = sup_real.membership(real)

    p_num = int(np.count_nonzero(fake_in_real & fake_in_fake))
    p_den = int(np.count_nonzero(fake_in_fake))
    r_num = int(np.count_nonzero(real_in_fake & real_in_real))
    r_den = int(np.count_nonzero(real_in_real))

    top_p = p_num / p_den if p_den else 0.0
    top_r = r_num / r_den if r_den else 0.0

    return ScoreReport(
        top_p=top_p,
        top_r=top_r,
        f1=f1_score(top_p, top_r),
        h_real=sup_real.model.bandwidth,
        h_fake=sup_fake.model.bandwidth,
        c_real=sup_real.band.c,
        c_fake=sup_fake.band.c,
        n_real=int(real.shape[0]),
        n_fake=int(fake.shape[0]),
        proj_dim=config.proj_dim,
        alpha=float(config.alpha),
        repeats=int(config.repeats),
        seed=int(config.seed),
        precision_numer=p_num,
        precision_denom=p_den,
        recall_numer=r_num,
        recall_denom=r_den,
    )
