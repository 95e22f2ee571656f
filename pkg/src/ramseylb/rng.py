"""Seed derivation and pair-keyed coin flips.

Randomness is never drawn from a shared sequential stream.  Child seeds
come from a keyed hash of (parent seed, labels), and single coin flips
are a pure function of (seed, identity string).  Because of this,
colorings commute with taking vertex subsets, and search attempts can
run in any order or in parallel without changing any result.
"""

from __future__ import annotations

import hashlib
import random

_MASK64 = (1 << 64) - 1


def _seed_bytes(seed: int) -> bytes:
    return (seed & _MASK64).to_bytes(8, "big")


def derive_seed(seed: int, *labels: object) -> int:
    """Stable 64-bit child seed for (seed, labels)."""
    h = hashlib.blake2b(digest_size=8, person=b"rlb-seed")
    h.update(_seed_bytes(seed))
    for label in labels:
        h.update(str(label).encode())
        h.update(b"\x1f")
    return int.from_bytes(h.digest(), "big")


def pair_coin(seed: int, identity: str) -> int:
    """Unbiased bit fully determined by (seed, identity)."""
    h = hashlib.blake2b(
        identity.encode(), digest_size=1, key=_seed_bytes(seed), person=b"rlb-coin"
    )
    return h.digest()[0] & 1


def make_rng(seed: int) -> random.Random:
    """Mersenne Twister instance seeded from a 64-bit value."""
    return random.Random(seed & _MASK64)
