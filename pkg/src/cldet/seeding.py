"""Deterministic seed derivation.

Every stochastic choice in the package draws from a seed derived from the
run seed plus a string tag, so any stage of a run can be reproduced in
isolation (and a resumed run continues bit-identically).
"""

from __future__ import annotations

import hashlib

import numpy as np
import torch


def derive_seed(*parts) -> int:
    """Hash an arbitrary tuple of tags into a 63-bit seed."""
    key = "|".join(repr(p) for p in parts)
    digest = hashlib.sha256(key.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little") & 0x7FFF_FFFF_FFFF_FFFF


def np_rng(*parts) -> np.random.Generator:
    return np.random.default_rng(derive_seed(*parts))


def seed_torch(*parts) -> None:
    torch.manual_seed(derive_seed(*parts))


def set_deterministic(enabled: bool = True) -> None:
    """Force reproducible torch kernels (CPU kernels we use all support it)."""
    torch.use_deterministic_algorithms(enabled)
