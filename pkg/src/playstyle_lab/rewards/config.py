"""Reward coefficient vectors and the reward computation itself."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ConfigError
from .events import EventVector
from .intervals import COEFFICIENT_NAMES, RewardIntervals


@dataclass(frozen=True)
class RewardConfig:
    """The 7 reward coefficients, one per rewarded event."""

    r_stab: float
    r_cvr_shooting: float
    r_hero_shot: float
    r_useful_shld: float
    r_nmy_damage: float
    r_hero_distance: float
    r_win: float

    def __post_init__(self):
        for name, v in zip(COEFFICIENT_NAMES, self.as_tuple()):
            if not math.isfinite(v):
                raise ConfigError(name, f"coefficient must be finite, got {v}")

    def as_tuple(self) -> tuple[float, ...]:
        return (
            self.r_stab,
            self.r_cvr_shooting,
            self.r_hero_shot,
            self.r_useful_shld,
            self.r_nmy_damage,
            self.r_hero_distance,
            self.r_win,
        )

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple(), dtype=np.float64)

    @staticmethod
    def from_array(values) -> "RewardConfig":
        values = list(values)
        if len(values) != 7:
            raise ConfigError("coefficients", f"expected 7 values, got {len(values)}")
        return RewardConfig(*(float(v) for v in values))

    # Serialization uses the canonical field names, in order.
    def to_dict(self) -> dict:
        return dict(zip(COEFFICIENT_NAMES, self.as_tuple()))

    @staticmethod
    def from_dict(raw: dict) -> "RewardConfig":
        missing = [n for n in COEFFICIENT_NAMES if n not in raw]
        if missing:
            raise ConfigError(missing[0], "missing coefficient")
        return RewardConfig.from_array([raw[n] for n in COEFFICIENT_NAMES])

    def on_lattice(self, intervals: RewardIntervals) -> bool:
        return all(
            iv.on_lattice(v) for iv, v in zip(intervals, self.as_tuple())
        )

    @staticmethod
    def zeroed() -> "RewardConfig":
        return RewardConfig(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)


def normalize_to_slot(config: RewardConfig, intervals: RewardIntervals) -> np.ndarray:
    """Coefficients mapped to [-1, 1] per interval (midpoint / half-width).

    Values outside the training bounds map beyond +-1, which is exactly how
    out-of-bounds probing reaches the model.
    """
    out = np.empty(7, dtype=np.float64)
    for i, (iv, v) in enumerate(zip(intervals, config.as_tuple())):
        hw = iv.half_width
        out[i] = (v - iv.mid) / hw if hw > 0 else 0.0
    return out


def compute_reward(
    config: RewardConfig,
    events: EventVector,
    intervals: RewardIntervals,
    board_diagonal: float,
) -> float:
    """Scalar reward for one transition: sum of normalized terms.

    Every term is the coefficient divided by its max absolute bound times
    the event value; the hero-distance event is itself divided by the board
    diagonal so each term stays bounded by 1 per occurrence.
    """
    theta = events.as_array()
    theta[5] /= board_diagonal
    total = 0.0
    for iv, r, t in zip(intervals, config.as_tuple(), theta):
        scale = iv.scale
        total += (r / scale if scale > 0 else 0.0) * t
    return total


def reward_weights(
    config: RewardConfig, intervals: RewardIntervals, board_diagonal: float
) -> np.ndarray:
    """Per-event weights such that reward = weights . raw_event_vector.

    Folds both the per-term coefficient normalization and the hero-distance
    division into one 7-vector; used on the hot training path.
    """
    w = config.as_array()
    for i, iv in enumerate(intervals):
        w[i] = w[i] / iv.scale if iv.scale > 0 else 0.0
    w[5] /= board_diagonal
    return w
