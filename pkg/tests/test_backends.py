"""Backend dispatch and cross-backend agreement."""

import os
import subprocess
import sys

import numpy as np
import pytest

from toppr import backends


def have_numba() -> bool:
    try:
        import numba  # noqa: F401
        return True
    except ImportError:
        return False


def test_set_backend_rejects_unknown():
    with pytest.raises(ValueError):
        backends.set_backend("cuda")


def test_numpy_backend_selectable():
    before = backends.backend_name()
    try:
        assert backends.set_backend("numpy") == "numpy"
        assert backends.backend_name() == "numpy"
    finally:
        backends.set_backend(before)


def test_auto_prefers_numba_when_available():
    if not have_numba():
        pytest.skip("numba not installed")
    before = backends.backend_name()
    try:
        assert backends.set_backend("auto") == "numba"
    finally:
        backends.set_backend(before)


def test_env_var_selects_backend():
    env = dict(os.environ, TOPPR_BACKEND="numpy")
    out = subprocess.run(
        [sys.executable, "-c", "import toppr; print(toppr.backend_name())"],
        capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "numpy"


def test_sq_dists_agreement(rng):
    if not have_numba():
        pytest.skip("numba not installed")
    a = rng.standard_normal((64, 7))
    b = rng.standard_normal((51, 7)) * 3
    before = backends.backend_name()
    try:
        backends.set_backend("numpy")
        ref = backends.sq_dists(a, b)
        backends.set_backend("numba")
        got = backends.sq_dists(a, b)
    finally:
        backends.set_backend(before)
    assert np.allclose(got, ref, rtol=1e-12, atol=1e-12)


def test_kernel_agreement_and_zero_masks(rng):
    if not have_numba():
        pytest.skip("numba not installed")
    a = rng.standard_normal((80, 5))
    b = rng.standard_normal((60, 5))
    before = backends.backend_name()
    try:
        backends.set_backend("numpy")
        ref = backends.trunc_gauss_kernel(a, b, 1.1)
        backends.set_backend("numba")
        got = backends.trunc_gauss_kernel(a, b, 1.1)
    finally:
        backends.set_backend(before)
    # identical truncation decisions, near-identical values
    assert np.array_equal(got == 0.0, ref == 0.0)
    assert np.allclose(got, ref, rtol=1e-12, atol=0)


def test_kernel_reach_boundary_inclusive_both_backends():
    a = np.array([[0.0]])
    b = np.array([[2.0], [2.0 + 1e-9]])
    names = ["numpy"] + (["numba"] if have_numba() else [])
    before = backends.backend_name()
    try:
        for name in names:
            backends.set_backend(name)
            vals = backends.trunc_gauss_kernel(a, b, 2.0)[0]
            assert vals[0] == pytest.approx(np.exp(-0.5), abs=1e-15), name
            assert vals[1] == 0.0, name
    finally:
        backends.set_backend(before)


def test_kernel_matches_formula(rng, numpy_backend):
    a = rng.standard_normal((20, 3))
    b = rng.standard_normal((25, 3))
    h = 0.9
    got = backends.trunc_gauss_kernel(a, b, h)
    sq = ((a[:, None, :] - b[None, :, :]) ** 2).sum(axis=2)
    want = np.where(sq <= h * h, np.exp(-0.5 * sq / (h * h)), 0.0)
    assert np.allclose(got, want, rtol=1e-10, atol=1e-15)
