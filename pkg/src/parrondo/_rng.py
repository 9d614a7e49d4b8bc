"""Seeded generators.

All sampling uses numpy's Philox 4x64 counter-based bit generator, whose
stream for a given key is fixed by the numpy ``BitGenerator`` contract, so
golden values stay stable across releases.
"""
from __future__ import annotations

import numpy as np

RNG_NAME = "numpy.random.Philox(4x64-10)"


def make_rng(seed: int | np.random.Generator | None) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.Philox(seed))


def task_rng(seed: int, task: int) -> np.random.Generator:
    """Independent stream for ``task`` derived from ``seed``."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, task])))
