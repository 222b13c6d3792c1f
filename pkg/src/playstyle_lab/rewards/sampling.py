"""Per-episode coefficient sampling and lattice bookkeeping."""

from __future__ import annotations

import math

import numpy as np

from .config import RewardConfig
from .intervals import RewardIntervals, _snap


def sample_config(
    rng: np.random.Generator, intervals: RewardIntervals
) -> RewardConfig:
    """One coefficient vector, each entry uniform on its discrete lattice."""
    values = []
    for iv in intervals:
        k = int(rng.integers(0, iv.lattice_size()))
        values.append(_snap(iv.lo + k * iv.step))
    return RewardConfig.from_array(values)


def lattice_cardinality(intervals: RewardIntervals) -> int:
    """Number of distinct coefficient vectors on the full lattice."""
    return math.prod(iv.lattice_size() for iv in intervals)
