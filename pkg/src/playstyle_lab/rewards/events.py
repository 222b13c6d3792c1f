"""Per-transition event vectors and their detection."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import PlaylabError


@dataclass(frozen=True)
class EventVector:
    """Counts/values of the seven rewarded events for one transition.

    Count fields are per-step occurrence counts (an end-of-turn step can
    carry several enemy-phase occurrences).  ``hero_distance`` is the mean
    pairwise distance between living heroes, emitted only on end-of-turn
    steps.  ``win_flag`` is +1/-1/0 and nonzero at most once per episode.
    """

    stab_count: int = 0
    cvr_shooting_count: int = 0
    hero_shot_count: int = 0
    useful_shld_count: int = 0
    nmy_damage_count: int = 0
    hero_distance: float = 0.0
    win_flag: int = 0

    def as_array(self) -> np.ndarray:
        return np.array(
            [
                self.stab_count,
                self.cvr_shooting_count,
                self.hero_shot_count,
                self.useful_shld_count,
                self.nmy_damage_count,
                self.hero_distance,
                self.win_flag,
            ],
            dtype=np.float64,
        )

    @staticmethod
    def from_array(vec) -> "EventVector":
        return EventVector(
            stab_count=int(vec[0]),
            cvr_shooting_count=int(vec[1]),
            hero_shot_count=int(vec[2]),
            useful_shld_count=int(vec[3]),
            nmy_damage_count=int(vec[4]),
            hero_distance=float(vec[5]),
            win_flag=int(vec[6]),
        )

    def __add__(self, other: "EventVector") -> "EventVector":
        return EventVector(
            self.stab_count + other.stab_count,
            self.cvr_shooting_count + other.cvr_shooting_count,
            self.hero_shot_count + other.hero_shot_count,
            self.useful_shld_count + other.useful_shld_count,
            self.nmy_damage_count + other.nmy_damage_count,
            self.hero_distance + other.hero_distance,
            self.win_flag + other.win_flag,
        )


class InconsistentTransition(PlaylabError):
    """(pre, action, post) does not correspond to one engine step."""


def detect_events(pre_state, action, post_state) -> EventVector:
    """Events fired by the transition pre_state --action--> post_state.

    The engine is deterministic, so the transition is re-executed from
    ``pre_state`` and its event trace returned; a ``post_state`` that does
    not match the re-execution is rejected.
    """
    from ..engine import step  # local import: rewards must not hard-depend on engine

    replayed, events = step(pre_state, action)
    if replayed != post_state:
        raise InconsistentTransition(
            "post_state does not match re-executed transition"
        )
    return events
