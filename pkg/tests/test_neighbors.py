"""Pairwise distances and k-th nearest neighbor search."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import toppr.neighbors as neighbors
from toppr import knn_dist, knn_sq_dist, pairwise_sq_dists
from toppr.errors import BadSpec, DimMismatch, KTooLarge, RowCountMismatch


def col(*vals):
    return np.array(vals, dtype=np.float64)[:, None]


def naive_sq_dists(a, b):
    out = np.empty((a.shape[0], b.shape[0]))
    for i in range(a.shape[0]):
        out[i] = ((a[i] - b) ** 2).sum(axis=1)
    return out


def naive_knn_sq(query, reference, k, exclude_self):
    d2 = naive_sq_dists(query, reference)
    if exclude_self:
        for i in range(query.shape[0]):
            d2[i, i] = np.inf
    return np.sort(d2, axis=1)[:, k - 1]


def test_pairwise_hand_values():
    pts = col(0, 1, 3)
    expected = [[0, 1, 9], [1, 0, 4], [9, 4, 0]]
    assert pairwise_sq_dists(pts, pts).tolist() == expected


def test_pairwise_345_triangle():
    a = np.array([[0.0, 0.0]])
    b = np.array([[3.0, 4.0]])
    assert pairwise_sq_dists(a, b).tolist() == [[25.0]]


def test_pairwise_identical_single_rows():
    a = np.array([[2.0, 7.0]])
    assert pairwise_sq_dists(a, a).tolist() == [[0.0]]


def test_pairwise_dim_mismatch():
    with pytest.raises(DimMismatch):
        pairwise_sq_dists(np.zeros((2, 3)), np.zeros((2, 4)))


def test_pairwise_symmetry(rng):
    a = rng.standard_normal((23, 4))
    b = rng.standard_normal((17, 4))
    ab = pairwise_sq_dists(a, b)
    ba = pairwise_sq_dists(b, a)
    assert np.array_equal(ab, ba.T)


def test_pairwise_nonnegative_under_cancellation():
    # far-offset near-identical points provoke catastrophic cancellation
    base = np.full((40, 8), 1e8)
    a = base + np.linspace(0, 1e-4, 40)[:, None]
    d2 = pairwise_sq_dists(a, a)
    assert (d2 >= 0).all()


def test_knn_hand_values():
    pts = col(0, 1, 3)
    assert knn_dist(pts, pts, k=1, exclude_self=True).tolist() == [1, 1, 2]
    assert knn_sq_dist(pts, pts, k=2, exclude_self=True).tolist() == [9, 4, 9]


def test_knn_single_point_self_distance():
    pts = col(5)
    assert knn_dist(pts, pts, k=1, exclude_self=False).tolist() == [0.0]


def test_knn_duplicate_rows_remain_neighbors():
    pts = col(4, 4, 9)
    d = knn_dist(pts, pts, k=1, exclude_self=True)
    assert d.tolist() == [0, 0, 5]


def test_knn_k_validation():
    pts = col(0, 1, 3)
    with pytest.raises(BadSpec):
        knn_dist(pts, pts, k=0)
    with pytest.raises(KTooLarge):
        knn_dist(pts, pts, k=3, exclude_self=True)
    with pytest.raises(KTooLarge):
        knn_dist(pts, pts, k=4, exclude_self=False)
    # k == rows is fine without self-exclusion
    assert knn_dist(pts, pts, k=3, exclude_self=False).shape == (3,)


def test_knn_exclude_self_needs_matching_rows():
    with pytest.raises(RowCountMismatch):
        knn_dist(col(0, 1), col(0, 1, 2), k=1, exclude_self=True)


def test_knn_monotone_in_k(rng):
    pts = rng.standard_normal((40, 3))
    prev = knn_dist(pts, pts, k=1, exclude_self=True)
    for k in range(2, 12):
        cur = knn_dist(pts, pts, k=k, exclude_self=True)
        assert (cur >= prev).all()
        prev = cur


def test_blocked_equals_naive_bitwise(monkeypatch, rng):
    """Small block size forces the blocked path on integer-valued data."""
    monkeypatch.setattr(neighbors, "_BLOCK_ROWS", 64)
    a = rng.integers(-50, 50, size=(500, 8)).astype(np.float64)
    b = rng.integers(-50, 50, size=(311, 8)).astype(np.float64)
    assert pairwise_sq_dists(a, b).tobytes() == naive_sq_dists(a, b).tobytes()
    got = knn_sq_dist(a, b, k=3)
    want = np.sort(naive_sq_dists(a, b), axis=1)[:, 2]
    assert got.tobytes() == want.tobytes()
    got_self = knn_sq_dist(a, a, k=4, exclude_self=True)
    assert got_self.tobytes() == naive_knn_sq(a, a, 4, True).tobytes()


def test_blocked_equals_naive_continuous(monkeypatch, rng):
    monkeypatch.setattr(neighbors, "_BLOCK_ROWS", 32)
    a = rng.standard_normal((150, 5))
    b = rng.standard_normal((90, 5))
    assert np.allclose(pairwise_sq_dists(a, b), naive_sq_dists(a, b),
                       rtol=1e-10, atol=1e-12)


@given(
    n=st.integers(2, 12),
    d=st.integers(1, 4),
    k=st.integers(1, 11),
    seed=st.integers(0, 2**31),
)
@settings(max_examples=60)
def test_knn_matches_oracle_property(n, d, k, seed):
    if k > n - 1:
        return
    pts = np.random.default_rng(seed).standard_normal((n, d))
    got = knn_sq_dist(pts, pts, k=k, exclude_self=True)
    want = naive_knn_sq(pts, pts, k, True)
    assert np.allclose(got, want, rtol=1e-10, atol=1e-12)
