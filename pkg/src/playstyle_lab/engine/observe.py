"""Observation encoding: one-hot board channels + flat scalar features."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..rewards.config import RewardConfig, normalize_to_slot
from ..rewards.intervals import RewardIntervals
from . import _kernels as K
from .state import GameState

N_CHANNELS = K.N_UNITS + 1  # one per unit plus covers
PER_UNIT_FEATURES = 12
N_SLOT = 7

# Fixed denominator for budgets, ranges and damages so the encoding length
# and scale never depend on the roster.
STAT_SCALE = 20.0


@dataclass(frozen=True)
class Observation:
    """Model input: channel stack, scalar features, coefficient slot."""

    board: np.ndarray    # (9, S, S) float64, one-hot
    general: np.ndarray  # (1 + 8*12,) float64, all within [-1, 1]
    slot: np.ndarray     # (7,) float64; zeros for unconditioned agents

    @property
    def size(self) -> int:
        return self.board.size + self.general.size + self.slot.size


def general_info_size() -> int:
    return 1 + K.N_UNITS * PER_UNIT_FEATURES


def encode_observation(
    state: GameState,
    config: RewardConfig | None = None,
    intervals: RewardIntervals | None = None,
) -> Observation:
    """Deterministic encoding of a state (+ optional coefficient vector).

    The coefficient slot is filled with the per-interval normalized values
    when a config is given, zeros otherwise; shape is identical either way
    so conditioned and fixed-reward agents share one architecture.
    """
    size = state.board_size
    board = np.zeros((N_CHANNELS, size, size), dtype=np.float64)
    # occ holds unit indexes and the cover code, which maps to channel 8
    occ = state.occ
    for i in range(K.N_UNITS):
        if state.units[i, K.UHEALTH] > 0:
            board[i, state.units[i, K.UY], state.units[i, K.UX]] = 1.0
    board[K.N_UNITS][occ == K.OCC_COVER] = 1.0

    general = np.zeros(general_info_size(), dtype=np.float64)
    limit = state.scenario.turn_limit
    general[0] = (limit - state.turns_completed) / limit
    denom = max(size - 1, 1)
    for i in range(K.N_UNITS):
        u, s = state.units[i], state.stats[i]
        base = 1 + i * PER_UNIT_FEATURES
        alive = 1.0 if u[K.UHEALTH] > 0 else 0.0
        general[base + 0] = alive
        general[base + 1] = u[K.UHEALTH] / s[K.SMAXHP]
        general[base + 2] = s[K.SBUDGET] / STAT_SCALE
        general[base + 3] = u[K.UMOVES] / STAT_SCALE
        general[base + 4] = np.sqrt(state.ranges_sq[i]) / STAT_SCALE
        general[base + 5] = s[K.SSHOTDMG] / STAT_SCALE
        general[base + 6] = s[K.SSTABDMG] / STAT_SCALE
        general[base + 7] = float(u[K.USHIELD])
        general[base + 8] = u[K.UCOOLDOWN] / 2.0
        general[base + 9] = float(u[K.UACTED])
        general[base + 10] = u[K.UX] / denom * alive
        general[base + 11] = u[K.UY] / denom * alive

    if config is not None:
        if intervals is None:
            raise ValueError("intervals required when encoding a reward config")
        slot = normalize_to_slot(config, intervals)
    else:
        slot = np.zeros(N_SLOT, dtype=np.float64)
    return Observation(board=board, general=general, slot=slot)


def encode_compact(state: GameState) -> tuple[np.ndarray, np.ndarray]:
    """Storage form for replay buffers: (occ int8 grid, general float32).

    ``occ`` is enough to rebuild the one-hot channels exactly (dead units
    are absent from it, matching the alive-only channels).
    """
    occ = state.occ.astype(np.int8)
    general = encode_observation(state).general.astype(np.float32)
    return occ, general


def board_from_occ(occ_batch: np.ndarray) -> np.ndarray:
    """(B, S, S) int8 occupancy -> (B, 9, S, S) float64 one-hot channels."""
    b, s, _ = occ_batch.shape
    out = np.zeros((b, N_CHANNELS, s, s), dtype=np.float64)
    for ch in range(K.N_UNITS):
        out[:, ch][occ_batch == ch] = 1.0
    out[:, K.N_UNITS][occ_batch == np.int8(K.OCC_COVER)] = 1.0
    return out
