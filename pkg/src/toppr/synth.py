"""Synthetic evaluation scenarios.

Generators produce the controlled real/fake pairs used to exercise the
metrics: a mean-shifted Gaussian pair with optional planted outliers, a
multi-mode Gaussian mixture with sequential or simultaneous mode drop, a
long-tailed class mixture, and two noise operators (scatter and swap) that
corrupt existing pairs.

Shared conventions: mixture mode j is centered at offset_j * ones(d) with
per-coordinate offsets (0, +1, -1, +2, -2, ...) * mode_gap / sqrt(d), so
adjacent mode centers sit exactly mode_gap apart in Euclidean norm along
the unit all-ones direction. Mode 0 absorbs any dropped mass (the real
side never changes). Row counts per mode are apportioned by largest
remainder, so counts always sum exactly to the requested total. Outlier
rows sit at outlier_coord in every coordinate, appended to both sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._rng import stream
from .errors import BadSpec, OutOfRange, RowCountMismatch
from .tensor_io import ensure_matrix

KINDS = (
    "shift",
    "sequential_drop",
    "simultaneous_drop",
    "scatter_noise",
    "swap_noise",
    "long_tail",
)

_DROP_KINDS = ("sequential_drop", "simultaneous_drop")
_NOISE_KINDS = ("scatter_noise", "swap_noise")


@dataclass(frozen=True)
class ScenarioSpec:
    """Parameters for one synthetic scenario step."""

    kind: str
    n: int = 1000
    m: int = 1000
    d: int = 64
    seed: int = 0
    mu: float = 0.0
    outliers: int = 1
    outlier_coord: float = 3.0
    num_modes: int = 7
    step: float = 0.0
    mode_gap: float = 3.0
    rho: float = 0.0
    major_classes: int = 6
    major_count: int = 2000
    minor_classes: int = 4
    minor_count: int = 500

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadSpec(f"unknown scenario kind {self.kind!r}")
        if self.n < 1 or self.m < 1:
            raise BadSpec(f"row counts must be >= 1, got n={self.n}, m={self.m}")
        if self.d < 1:
            raise BadSpec(f"d must be >= 1, got {self.d}")
        if self.outliers < 0:
            raise BadSpec(f"outliers must be >= 0, got {self.outliers}")
        if self.num_modes < 1:
            raise BadSpec(f"num_modes must be >= 1, got {self.num_modes}")
        if not 0.0 <= self.step <= 1.0:
            raise OutOfRange(f"step must lie in [0, 1], got {self.step}")
        if not 0.0 <= self.rho <= 1.0:
            raise OutOfRange(f"rho must lie in [0, 1], got {self.rho}")
        if not self.mode_gap > 0.0:
            raise BadSpec(f"mode_gap must be > 0, got {self.mode_gap}")
        if min(self.major_classes, self.minor_classes) < 0:
            raise BadSpec("class counts must be >= 0")
        if min(self.major_count, self.minor_count) < 0:
            raise BadSpec("per-class counts must be >= 0")


def _coord_offsets(num_modes: int, mode_gap: float, d: int) -> np.ndarray:
    """Per-coordinate center offset of each mode.

    Pattern 0, +1, -1, +2, -2, ... times mode_gap/sqrt(d): mode j then sits
    at Euclidean distance |pattern_j| * mode_gap from the origin.
    """
    out = np.zeros(num_modes)
    for j in range(1, num_modes):
        pos = (j + 1) // 2
        out[j] = pos * (1 if j % 2 == 1 else -1)
    return out * (mode_gap / math.sqrt(d))


def apportion(total: int, weights) -> np.ndarray:
    """Integer counts summing to total, proportional to weights.

    Largest-remainder rounding; remainder ties break toward lower index.
    """
    w = np.asarray(weights, dtype=np.float64)
    if total < 0 or w.ndim != 1 or w.size == 0 or (w < 0).any() or w.sum() <= 0:
        raise BadSpec("apportion needs total >= 0 and nonnegative weights with mass")
    quota = w / w.sum() * total
    base = np.floor(quota).astype(np.int64)
    frac = quota - base
    order = np.lexsort((np.arange(w.size), -frac))
    missing = total - int(base.sum())
    base[order[:missing]] += 1
    return base


def _append_outliers(data: np.ndarray, spec: ScenarioSpec) -> np.ndarray:
    if spec.outliers == 0:
        return data
    block = np.full((spec.outliers, spec.d), float(spec.outlier_coord))
    return np.concatenate([data, block], axis=0)


def gen_shift_pair(spec: ScenarioSpec) -> tuple[np.ndarray, np.ndarray]:
    """Real ~ N(0, I), fake ~ N(mu * ones, I), plus planted outlier rows.

    Default is one outlier row per side at outlier_coord in every
    coordinate; outliers=0 disables them. The fake base noise comes from a
    mu-independent stream, so a sweep over mu moves one fixed cloud instead
    of resampling per step.
    """
    if spec.kind != "shift":
        raise BadSpec(f"gen_shift_pair needs kind='shift', got {spec.kind!r}")
    real = stream("toppr.synth.shift.real", spec.seed).standard_normal((spec.n, spec.d))
    fake = stream("toppr.synth.shift.fake", spec.seed).standard_normal((spec.m, spec.d))
    fake += spec.mu
    return _append_outliers(real, spec), _append_outliers(fake, spec)


def _fake_mode_weights(spec: ScenarioSpec) -> np.ndarray:
    k = spec.num_modes
    w = np.full(k, 1.0 / k)
    if spec.kind == "sequential_drop":
        s = dropped_mode_count(spec)
        if s > 0:
            w[k - s:] = 0.0
            w[0] = (1.0 + s) / k
    else:
        w[1:] = (1.0 - spec.step) / k
        w[0] = (1.0 + (k - 1) * spec.step) / k
    return w


def dropped_mode_count(spec: ScenarioSpec) -> int:
    """Number of modes fully removed at sequential progress spec.step."""
    return round(spec.step * (spec.num_modes - 1))


def gen_mode_drop_pair(spec: ScenarioSpec) -> tuple[np.ndarray, np.ndarray]:
    """Equal-weight mixture vs the same mixture with mass moved to mode 0.

    Sequential: progress step in [0,1] removes round(step*(num_modes-1))
    whole modes, last mode first. Simultaneous: every mode j >= 1 keeps
    fraction (1-step). Either way the removed mass lands on mode 0 and row
    counts stay exact.
    """
    if spec.kind not in _DROP_KINDS:
        raise BadSpec(
            f"gen_mode_drop_pair needs a drop kind {_DROP_KINDS}, got {spec.kind!r}"
        )
    offsets = _coord_offsets(spec.num_modes, spec.mode_gap, spec.d)
    real_counts = apportion(spec.n, np.full(spec.num_modes, 1.0))
    fake_counts = apportion(spec.m, _fake_mode_weights(spec))

    real = stream("toppr.synth.modes.real", spec.seed).standard_normal((spec.n, spec.d))
    real += np.repeat(offsets, real_counts)[:, None]
    fake = stream("toppr.synth.modes.fake", spec.seed).standard_normal((spec.m, spec.d))
    fake += np.repeat(offsets, fake_counts)[:, None]
    return real, fake


def ground_truth_diversity(spec: ScenarioSpec) -> float:
    """Fraction of real mixture mass whose mode keeps its full fake mass."""
    k = spec.num_modes
    if spec.kind == "sequential_drop":
        return 1.0 - dropped_mode_count(spec) / k
    if spec.kind == "simultaneous_drop":
        return 1.0 - spec.step * (k - 1) / k
    raise BadSpec(f"ground truth line is defined for drop kinds, got {spec.kind!r}")


def gen_long_tail(spec: ScenarioSpec, role: str = "real") -> tuple[np.ndarray, np.ndarray]:
    """Class-imbalanced mixture; returns (data, integer class labels)."""
    if spec.kind != "long_tail":
        raise BadSpec(f"gen_long_tail needs kind='long_tail', got {spec.kind!r}")
    if role not in ("real", "fake"):
        raise BadSpec(f"role must be 'real' or 'fake', got {role!r}")
    classes = spec.major_classes + spec.minor_classes
    if classes < 1:
        raise BadSpec("long_tail needs at least one class")
    counts = np.array(
        [spec.major_count] * spec.major_classes + [spec.minor_count] * spec.minor_classes,
        dtype=np.int64,
    )
    total = int(counts.sum())
    if total < 1:
        raise BadSpec("long_tail needs at least one row")
    offsets = _coord_offsets(classes, spec.mode_gap, spec.d)
    data = stream(f"toppr.synth.longtail.{role}", spec.seed).standard_normal(
        (total, spec.d)
    )
    data += np.repeat(offsets, counts)[:, None]
    labels = np.repeat(np.arange(classes, dtype=np.int64), counts)
    return data, labels


def scatter_bounds(data) -> tuple[np.ndarray, np.ndarray]:
    """Default scatter box: per-coordinate [min - std, max + std] of data."""
    data = ensure_matrix(data, "scatter bounds data")
    std = data.std(axis=0)
    return data.min(axis=0) - std, data.max(axis=0) + std


def apply_scatter_noise(data, rho: float, bounds=None, seed: int = 0) -> np.ndarray:
    """Replace floor(rho * rows) rows with uniform draws from a box.

    bounds is a (lo, hi) pair of per-coordinate arrays; None derives the
    scatter_bounds box from the clean input. Row selection is a seeded draw
    without replacement.
    """
    data = ensure_matrix(data, "scatter input")
    if not 0.0 <= rho <= 1.0:
        raise OutOfRange(f"rho must lie in [0, 1], got {rho}")
    n, d = data.shape
    count = math.floor(rho * n)
    out = data.copy()
    if count == 0:
        return out
    if bounds is None:
        lo, hi = scatter_bounds(data)
    else:
        lo = np.asarray(bounds[0], dtype=np.float64)
        hi = np.asarray(bounds[1], dtype=np.float64)
        if lo.shape != (d,) or hi.shape != (d,):
            raise BadSpec(f"bounds must be two length-{d} vectors")
        if (hi < lo).any():
            raise BadSpec("bounds must satisfy lo <= hi per coordinate")
    g = stream("toppr.synth.noise.scatter", seed)
    idx = g.choice(n, size=count, replace=False)
    out[idx] = g.uniform(lo, hi, size=(count, d))
    return out


def apply_swap_noise(real, fake, rho: float, seed: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """Exchange floor(rho * rows) row pairs between two equal-count sets.

    Pure permutation of rows across sets: the union multiset of rows is
    exactly preserved.
    """
    real = ensure_matrix(real, "swap real")
    fake = ensure_matrix(fake, "swap fake")
    if real.shape[0] != fake.shape[0]:
        raise RowCountMismatch(
            f"swap noise needs equal row counts, got {real.shape[0]} and {fake.shape[0]}"
        )
    if not 0.0 <= rho <= 1.0:
        raise OutOfRange(f"rho must lie in [0, 1], got {rho}")
    count = math.floor(rho * real.shape[0])
    real_out = real.copy()
    fake_out = fake.copy()
    if count == 0:
        return real_out, fake_out
    g = stream("toppr.synth.noise.swap", seed)
    idx_real = g.choice(real.shape[0], size=count, replace=False)
    idx_fake = g.choice(fake.shape[0], size=count, replace=False)
    moved = real_out[idx_real].copy()
    real_out[idx_real] = fake_out[idx_fake]
    fake_out[idx_fake] = moved
    return real_out, fake_out


def scenario_pair(spec: ScenarioSpec) -> tuple[np.ndarray, np.ndarray]:
    """One (real, fake) pair for any scenario kind.

    Noise kinds build the shift pair for spec.mu with outliers disabled,
    then corrupt it at spec.rho; the two sides of scatter noise use seeds
    drawn from one parent stream so their replacement rows differ.
    """
    if spec.kind == "shift":
        return gen_shift_pair(spec)
    if spec.kind in _DROP_KINDS:
        return gen_mode_drop_pair(spec)
    if spec.kind in _NOISE_KINDS:
        base = ScenarioSpec(
            kind="shift", n=spec.n, m=spec.m, d=spec.d, seed=spec.seed,
            mu=spec.mu, outliers=0,
        )
        real, fake = gen_shift_pair(base)
        if spec.kind == "swap_noise":
            return apply_swap_noise(real, fake, spec.rho, seed=spec.seed)
        side = stream("toppr.synth.noise.sides", spec.seed)
        s_real, s_fake = (int(v) for v in side.integers(0, 2**63, size=2))
        return (
            apply_scatter_noise(real, spec.rho, seed=s_real),
            apply_scatter_noise(fake, spec.rho, seed=s_fake),
        )
    if spec.kind == "long_tail":
        data_r, _ = gen_long_tail(spec, "real")
        data_f, _ = gen_long_tail(spec, "fake")
        return data_r, data_f
    raise BadSpec(f"unknown scenario kind {spec.kind!r}")
