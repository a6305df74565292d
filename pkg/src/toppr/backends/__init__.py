"""Backend dispatch for the two O(n*m*d) hot primitives.

Backends implement exactly `sq_dists(a, b)` and `trunc_gauss_kernel(a, b, h)`;
every other computation (selection, quantiles, reductions) lives in shared
numpy code so both backends execute one algorithm definition.

Selection: the TOPPR_BACKEND environment variable ("auto", "numba", "numpy")
is consulted once at import; `set_backend` switches at runtime (used by the
benchmark and by tests that pin the numpy reference arithmetic). "auto"
prefers numba and falls back to numpy when numba is unavailable.
"""

from __future__ import annotations

import os

import numpy as np

_impl = None
_name = ""


def set_backend(name: str = "auto") -> str:
    """Select the compute backend; returns the name actually activated."""
    global _impl, _name
    if name not in ("auto", "numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}: expected auto, numba, or numpy")
    if name == "numpy":
        from . import _numpy_impl as impl

        _impl, _name = impl, "numpy"
        return _name
    try:
        from . import _numba_impl as impl

        _impl, _name = impl, "numba"
    except ImportError:
        if name == "numba":
            raise
        from . import _numpy_impl as impl

        _impl, _name = impl, "numpy"
    return _name


def backend_name() -> str:
    return _name


def sq_dists(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Pairwise squared Euclidean distances, shape (a.rows, b.rows)."""
    return _impl.sq_dists(a, b)


def trunc_gauss_kernel(a: np.ndarray, b: np.ndarray, h: float) -> np.ndarray:
    """Compactly supported kernel values for every pair, shape (a.rows, b.rows).

    exp(-||a_i - b_j||^2 / (2 h^2)) while ||a_i - b_j|| <= h, zero beyond.
    """
    return _impl.trunc_gauss_kernel(a, b, float(h))


set_backend(os.environ.get("TOPPR_BACKEND", "auto"))
