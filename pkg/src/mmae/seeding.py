"""Deterministic seed derivation.

All randomness in a run flows from one master seed. Each consumer (split,
weight init, shuffle, generator, selection, ensemble members) derives its
own named sub-stream, so adding a consumer never perturbs the draws seen
by existing ones.
"""

import hashlib

import numpy as np


def derive_seed(master_seed: int, *names: str) -> int:
    """Derive a 64-bit child seed from a master seed and a stream name."""
    tag = ":".join([str(int(master_seed)), *names])
    digest = hashlib.sha256(tag.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")


def stream_rng(master_seed: int, *names: str) -> np.random.Generator:
    """Generator for the named sub-stream of ``master_seed``."""
    return np.random.default_rng(derive_seed(master_seed, *names))
