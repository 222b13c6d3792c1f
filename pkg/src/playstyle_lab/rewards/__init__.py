from .intervals import (
    COEFFICIENT_NAMES,
    CoefficientInterval,
    RewardIntervals,
    default_intervals,
)
from .config import RewardConfig, compute_reward, normalize_to_slot
from .events import EventVector, detect_events
from .presets import ARCHETYPE_NAMES, archetype_config
from .sampling import lattice_cardinality, sample_config

__all__ = [
    "COEFFICIENT_NAMES",
    "CoefficientInterval",
    "RewardIntervals",
    "default_intervals",
    "RewardConfig",
    "compute_reward",
    "normalize_to_slot",
    "EventVector",
    "detect_events",
    "ARCHETYPE_NAMES",
    "archetype_config",
    "lattice_cardinality",
    "sample_config",
]
