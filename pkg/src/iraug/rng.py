"""Counter-based pseudorandomness shared by walks and augmentation sampling.

Every random decision is a pure function of a key tuple of integers, hashed
through BLAKE2b. Streams keyed on (seed, sample index, depth) are therefore
splittable: parallel samples reproduce the sequential results exactly, and
truncating a walk at a smaller depth bound yields a prefix of the longer
walk under the same seed.
"""

from __future__ import annotations

import hashlib

SEED_SCHEME = "blake2b64-v1"


def derive_key(*parts: int) -> int:
    """Collapse a tuple of integers into a reproducible 64-bit key."""
    h = hashlib.blake2b(digest_size=8)
    h.update(b"iraug/" + SEED_SCHEME.encode())
    for p in parts:
        h.update(b"|" + str(int(p)).encode())
    return int.from_bytes(h.digest(), "big")


def child_index(seed: int, sample_index: int, depth: int, n_children: int) -> int:
    """Uniform child choice at one walk step; deterministic per key."""
    return derive_key(seed, sample_index, depth) % n_children
