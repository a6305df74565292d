"""Deterministic random streams.

All randomness in the library flows through named Philox streams. Philox is
counter-based, so a stream is fully determined by its 128-bit key; keys are
derived by hashing a label together with integer parameters:

    key = little-endian uint128 of SHA-256(label_utf8 || p_0 || p_1 || ...)[:16]

where each parameter p_i is encoded as 8 little-endian bytes of p_i mod 2^64.
Streams derived from distinct (label, params) tuples are independent and
independent of the order in which they are drawn from.

Dataset seeds are content-keyed: the seed that drives a dataset's bootstrap
depends only on the master seed and the dataset's own bytes, never on the
argument position the dataset was passed in. This is what makes the
precision/recall role-swap identity exact.
"""

from __future__ import annotations

import hashlib

import numpy as np

_MASK64 = (1 << 64) - 1


def derive_key(label: str, *params: int) -> int:
    """128-bit stream key from a label and integer parameters."""
    h = hashlib.sha256()
    h.update(label.encode("utf-8"))
    for p in params:
        h.update((int(p) & _MASK64).to_bytes(8, "little"))
    return int.from_bytes(h.digest()[:16], "little")


def stream(label: str, *params: int) -> np.random.Generator:
    """Fresh Philox generator keyed by (label, params)."""
    return np.random.Generator(np.random.Philox(key=derive_key(label, *params)))


def dataset_seed(master_seed: int, data: np.ndarray) -> int:
    """Content-keyed 64-bit seed for one dataset.

    First 8 bytes (little-endian) of
    SHA-256("toppr.dataset" || master_seed || rows || cols || row-major
    float64 bytes of the data).
    """
    buf = np.ascontiguousarray(data, dtype=np.float64)
    h = hashlib.sha256()
    h.update(b"toppr.dataset")
    h.update((int(master_seed) & _MASK64).to_bytes(8, "little"))
    h.update(int(buf.shape[0]).to_bytes(8, "little"))
    h.update(int(buf.shape[1]).to_bytes(8, "little"))
    h.update(buf.tobytes())
    return int.from_bytes(h.digest()[:8], "little")
