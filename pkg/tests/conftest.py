"""Shared fixtures and hypothesis settings."""

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from toppr import backends

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture
def numpy_backend():
    """Force the portable backend for bit-level oracle comparisons."""
    before = backends.backend_name()
    backends.set_backend("numpy")
    yield
    backends.set_backend(before)


@pytest.fixture
def rng():
    return np.random.default_rng(20240815)
