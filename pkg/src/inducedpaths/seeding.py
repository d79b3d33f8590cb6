"""Deterministic 64-bit seed derivation.

Child seeds are a SplitMix64 finaliser applied to the master seed mixed
with a stable hash of a stream label and an integer index, so results are
identical across platforms and Python hash randomisation.
"""

from __future__ import annotations

import hashlib

import numpy as np

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def _label_hash(label: str) -> int:
    return int.from_bytes(hashlib.blake2b(label.encode(), digest_size=8).digest(), "little")


def seed_derive(master: int, stream: str, index: int) -> int:
    """Derive the ``index``-th seed of the named ``stream`` from ``master``."""
    x = splitmix64((master & MASK64) ^ _label_hash(stream))
    return splitmix64(x ^ splitmix64(index & MASK64))


def rng(seed: int) -> np.random.Generator:
    """Counter-based generator (Philox) keyed by a 64-bit seed."""
    return np.random.Generator(np.random.Philox(key=seed & MASK64))
