"""Seeded random linear maps."""

import numpy as np
import pytest

from toppr import make_projection, project
from toppr.errors import BadDims, DimMismatch


def test_same_seed_bit_identical():
    a = make_projection(64, 32, seed=7)
    b = make_projection(64, 32, seed=7)
    assert a.matrix.tobytes() == b.matrix.tobytes()


def test_different_seed_differs():
    a = make_projection(64, 32, seed=7)
    b = make_projection(64, 32, seed=8)
    assert a.matrix.tobytes() != b.matrix.tobytes()


def test_square_map_still_applied(rng):
    pmap = make_projection(32, 32, seed=3)
    assert pmap.matrix.shape == (32, 32)
    x = rng.standard_normal((5, 32))
    y = project(pmap, x)
    assert y.shape == (5, 32)
    assert not np.allclose(y, x)  # not an identity special case


def test_entry_statistics():
    pmap = make_projection(4096, 32, seed=11)
    entries = pmap.matrix.ravel()
    target_var = 1.0 / 32
    assert abs(entries.var() - target_var) < 0.05 * target_var
    # mean of 4096*32 IID N(0, 1/32) draws: |mean| < 4 sigma/sqrt(count)
    assert abs(entries.mean()) < 4 * np.sqrt(target_var / entries.size)


def test_bad_dims():
    with pytest.raises(BadDims):
        make_projection(16, 32, seed=0)
    with pytest.raises(BadDims):
        make_projection(16, 0, seed=0)
    with pytest.raises(BadDims):
        make_projection(0, 0, seed=0)


def test_project_dim_mismatch(rng):
    pmap = make_projection(8, 4, seed=0)
    with pytest.raises(DimMismatch):
        project(pmap, rng.standard_normal((3, 9)))


def test_zero_in_zero_out():
    pmap = make_projection(64, 32, seed=5)
    out = project(pmap, np.zeros((4, 64)))
    assert np.array_equal(out, np.zeros((4, 32)))


def test_projection_deterministic(rng):
    pmap = make_projection(64, 32, seed=9)
    x = rng.standard_normal((1, 64))
    assert project(pmap, x).tobytes() == project(pmap, x).tobytes()


def test_matmul_semantics(rng):
    pmap = make_projection(6, 3, seed=2)
    x = rng.standard_normal((10, 6))
    assert np.allclose(project(pmap, x), x @ pmap.matrix)


def test_linearity(rng):
    pmap = make_projection(20, 8, seed=4)
    x = rng.standard_normal((7, 20))
    y = rng.standard_normal((7, 20))
    a, b = 1.7, -0.3
    lhs = project(pmap, a * x + b * y)
    rhs = a * project(pmap, x) + b * project(pmap, y)
    scale = np.abs(rhs).max()
    assert np.abs(lhs - rhs).max() <= 1e-10 * max(scale, 1.0)


def test_mean_sq_distance_ratio(rng):
    """Squared pairwise distances are preserved on average by one map."""
    pmap = make_projection(64, 32, seed=13)
    x = rng.standard_normal((1000, 64))
    y = rng.standard_normal((1000, 64))
    num = ((project(pmap, x) - project(pmap, y)) ** 2).sum(axis=1)
    den = ((x - y) ** 2).sum(axis=1)
    ratio = (num / den).mean()
    assert 0.9 <= ratio <= 1.1


def test_expected_preservation_over_seeds(rng):
    """E over maps of the projected squared distance equals the original."""
    x = rng.standard_normal(64)
    y = rng.standard_normal(64)
    true_sq = float(((x - y) ** 2).sum())
    acc = 0.0
    seeds = 250
    for seed in range(seeds):
        pmap = make_projection(64, 32, seed=seed)
        d = project(pmap, x[None, :]) - project(pmap, y[None, :])
        acc += float((d ** 2).sum())
    assert abs(acc / seeds - true_sq) <= 0.05 * true_sq
