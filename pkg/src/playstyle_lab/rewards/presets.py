"""The seven archetype coefficient presets.

Each archetype fixes every coefficient at an anchor of its interval: the
min, the max, a fraction of the positive bound (rounded half away from
zero onto the lattice), or zero.  The win coefficient sits at half its max
for every archetype.
"""

from __future__ import annotations

import math

from .config import RewardConfig
from .intervals import RewardIntervals, default_intervals

ARCHETYPE_NAMES = (
    "Sniper",
    "Contact",
    "Grouped",
    "Scattered",
    "Safe",
    "DPS",
    "WinOnly",
)

# Anchor per (archetype, coefficient): "min", "max", fraction of max, or 0.
_ANCHORS = {
    #             stab   cvr    shot   shld   nmy    dist   win
    "Sniper": ("min", "min", "max", "min", "max", 0.0, 0.5),
    "Contact": ("max", "max", "min", "min", "max", 0.0, 0.5),
    "Safe": (0.25, "max", 0.25, "max", "min", 0.0, 0.5),
    "DPS": (0.75, "max", 0.75, "min", "max", 0.0, 0.5),
    "Grouped": (0.5, "max", 0.5, "min", "max", "min", 0.5),
    "Scattered": (0.5, "max", 0.5, "min", "max", "max", 0.5),
    "WinOnly": (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.5),
}


def _round_half_away(x: float) -> float:
    return math.copysign(math.floor(abs(x) + 0.5), x)


def _resolve(anchor, interval) -> float:
    if anchor == "min":
        return interval.lo
    if anchor == "max":
        return interval.hi
    if anchor == 0.0:
        return 0.0
    # fraction of the positive bound, snapped onto the lattice
    value = anchor * interval.hi
    steps = _round_half_away(value / interval.step)
    return round(steps * interval.step, 10)


def archetype_config(
    name: str, intervals: RewardIntervals | None = None
) -> RewardConfig:
    """Coefficient preset for one archetype play-style."""
    if name not in _ANCHORS:
        raise KeyError(f"unknown archetype {name!r}; expected one of {ARCHETYPE_NAMES}")
    if intervals is None:
        intervals = default_intervals()
    values = [
        _resolve(anchor, iv) for anchor, iv in zip(_ANCHORS[name], intervals)
    ]
    return RewardConfig.from_array(values)


def all_archetype_configs(
    intervals: RewardIntervals | None = None,
) -> dict[str, RewardConfig]:
    return {name: archetype_config(name, intervals) for name in ARCHETYPE_NAMES}
