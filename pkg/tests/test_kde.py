"""Kernel means and balloon bandwidths.

The kernel is a truncated Gaussian: K(u) = exp(-u^2/2) for u <= 1, zero
beyond one bandwidth. Values therefore live in [0, 1], hit 1 only when all
reference points coincide with the query, and hit exactly 0 once the query
clears every reference by more than one bandwidth.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toppr import KdeModel, balloon_bandwidth, kernel_mean
from toppr.errors import (
    BadSpec,
    DegenerateData,
    DimMismatch,
    KTooLarge,
    TooFewRows,
)

EXP_HALF = math.exp(-0.5)


def col(*vals):
    return np.array(vals, dtype=np.float64)[:, None]


def test_point_mass_at_query():
    m = KdeModel(col(0), 1.0)
    assert kernel_mean(m, col(0)).tolist() == [1.0]


def test_one_bandwidth_away():
    m = KdeModel(col(0), 1.0)
    got = kernel_mean(m, col(1))[0]
    assert got == pytest.approx(EXP_HALF, abs=1e-12)
    assert got == pytest.approx(0.6065306597, abs=1e-9)


def test_two_point_symmetry():
    m = KdeModel(col(0, 2), 1.0)
    assert kernel_mean(m, col(1))[0] == pytest.approx(EXP_HALF, abs=1e-12)


def test_reach_boundary_inclusive():
    m = KdeModel(col(0), 2.0)
    at_reach = kernel_mean(m, col(2))[0]
    beyond = kernel_mean(m, col(2 + 1e-6))[0]
    assert at_reach == pytest.approx(EXP_HALF, abs=1e-12)
    assert beyond == 0.0


def test_zero_beyond_reach_mixed_reference():
    m = KdeModel(col(0, 1), 1.0)
    vals = kernel_mean(m, col(2.5, -1.5, 0.5))
    assert vals[0] == 0.0 and vals[1] == 0.0
    assert vals[2] > 0.0


def test_range_bounds(rng):
    ref = rng.standard_normal((200, 6))
    m = KdeModel(ref, balloon_bandwidth(ref))
    vals = kernel_mean(m, rng.standard_normal((300, 6)) * 3)
    assert (vals >= 0.0).all() and (vals <= 1.0).all()


def test_exact_one_only_for_coincident_reference():
    m = KdeModel(col(3, 3, 3), 1.0)
    assert kernel_mean(m, col(3)).tolist() == [1.0]
    m2 = KdeModel(col(3, 3, 3.5), 1.0)
    assert kernel_mean(m2, col(3))[0] < 1.0


def test_translation_invariance(rng):
    ref = rng.standard_normal((50, 4))
    q = rng.standard_normal((20, 4))
    shift = rng.standard_normal(4) * 10
    a = kernel_mean(KdeModel(ref, 1.3), q)
    b = kernel_mean(KdeModel(ref + shift, 1.3), q + shift)
    assert np.abs(a - b).max() <= 1e-12


def test_monotone_in_distance_within_reach():
    m = KdeModel(col(0), 2.0)
    xs = col(0.0, 0.4, 0.8, 1.2, 1.6, 2.0)
    vals = kernel_mean(m, xs)
    assert (np.diff(vals) < 0).all()


def test_dim_mismatch():
    with pytest.raises(DimMismatch):
        kernel_mean(KdeModel(np.zeros((2, 3)), 1.0), np.zeros((1, 4)))


def test_bad_bandwidth():
    with pytest.raises(BadSpec):
        KdeModel(col(0, 1), 0.0)
    with pytest.raises(BadSpec):
        KdeModel(col(0, 1), -1.0)
    with pytest.raises(BadSpec):
        KdeModel(col(0, 1), float("nan"))


def test_balloon_hand_values():
    pts = col(0, 1, 3)
    assert balloon_bandwidth(pts, k=1) == 1.0
    assert balloon_bandwidth(pts, k=2) == 3.0


def test_balloon_equally_spaced():
    assert balloon_bandwidth(col(0, 1, 2, 3), k=1) == 1.0


def test_balloon_even_count_median_is_central_mean():
    # k=1 distances for {0, 1, 3, 7}: [1, 1, 2, 4] -> median (1+2)/2
    assert balloon_bandwidth(col(0, 1, 3, 7), k=1) == 1.5


def test_balloon_default_k_is_ceil_sqrt():
    pts = col(*range(10))  # ceil(sqrt(10)) = 4
    assert balloon_bandwidth(pts) == balloon_bandwidth(pts, k=4)
    pts9 = col(*range(9))  # exact square: k = 3
    assert balloon_bandwidth(pts9) == balloon_bandwidth(pts9, k=3)


def test_balloon_scaling(rng):
    pts = rng.standard_normal((60, 3))
    h = balloon_bandwidth(pts, k=4)
    for gamma in (0.25, 7.0, 1234.5):
        hg = balloon_bandwidth(pts * gamma, k=4)
        assert abs(hg - gamma * h) <= 1e-12 * abs(gamma * h)


def test_balloon_errors():
    with pytest.raises(TooFewRows):
        balloon_bandwidth(col(0))
    with pytest.raises(BadSpec):
        balloon_bandwidth(col(0, 1), k=0)
    with pytest.raises(KTooLarge):
        balloon_bandwidth(col(0, 1), k=2)


def test_balloon_degenerate_duplicates():
    pts = col(5, 5, 5, 5, 9)
    with pytest.raises(DegenerateData):
        balloon_bandwidth(pts, k=1)


@given(
    n=st.integers(4, 30),
    d=st.integers(1, 5),
    h=st.floats(0.1, 10.0),
    seed=st.integers(0, 2**31),
)
@settings(max_examples=50)
def test_kernel_mean_oracle_property(n, d, h, seed):
    """Direct per-point evaluation of the truncated kernel."""
    g = np.random.default_rng(seed)
    ref = g.standard_normal((n, d))
    q = g.standard_normal((7, d)) * 2
    got = kernel_mean(KdeModel(ref, h), q)
    want = np.empty(7)
    for i in range(7):
        sq = ((q[i] - ref) ** 2).sum(axis=1) / (h * h)
        vals = np.where(sq <= 1.0, np.exp(-0.5 * sq), 0.0)
        want[i] = vals.mean()
    assert np.allclose(got, want, rtol=1e-10, atol=1e-13)
