"""Scripted enemy controllers, exposed as a pure planning function.

The actual hot-path resolution lives in the engine kernels; this module
gives the same decision rules as an inspectable plan without touching the
caller's state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import RuleViolation
from ..engine import _kernels as K
from ..engine.backend import kernels
from ..engine.state import GameState


@dataclass(frozen=True)
class EnemyMove:
    """One enemy micro-turn: movement path plus an optional attack."""

    enemy: int
    path: tuple[tuple[int, int], ...]      # cells entered, in order
    attack: tuple[str, int] | None         # ("stab"|"shoot"|"shoot_blocked", hero)
    shield_absorbed: bool = False


def enemy_policy(state: GameState, enemy: int) -> EnemyMove:
    """Plan the scripted micro-turn enemy ``enemy`` would take right now.

    Pure: simulates on copies.  Only meaningful during the enemy phase
    (earlier enemies in index order act before later ones), but the rules
    are a function of the visible state alone, so any state is accepted
    for a living enemy.
    """
    if not K.N_HEROES <= enemy < K.N_UNITS:
        raise RuleViolation("enemy_index", f"{enemy} is not an enemy slot")
    if state.units[enemy, K.UHEALTH] <= 0:
        raise RuleViolation("enemy_alive", f"enemy {enemy} is dead")

    units = state.units.copy()
    occ = state.occ.copy()
    ev = np.zeros(7, dtype=np.float64)
    trace = np.zeros((state.trace_cap, 6), dtype=np.int32)
    n = kernels.enemy_act(
        units, state.stats, state.ranges_sq, occ, state.board_size,
        enemy, state.scenario.kite_fraction, ev, trace, 0,
    )
    path = []
    attack = None
    absorbed = False
    for row in trace[:n]:
        verb = int(row[1])
        if verb == K.V_MOVE:
            path.append((int(row[4]), int(row[5])))
        elif verb == K.V_STAB:
            attack = ("stab", int(row[2]))
        elif verb == K.V_SHOOT_HIT:
            attack = ("shoot", int(row[2]))
        elif verb == K.V_SHOOT_BLOCKED:
            attack = ("shoot_blocked", int(row[2]))
        elif verb == K.V_SHIELD_ABSORB:
            attack = ("stab" if row[3] else "shoot", int(row[0]))
            absorbed = True
    return EnemyMove(enemy=enemy, path=tuple(path), attack=attack,
                     shield_absorbed=absorbed)
