"""Transition functions: legality, stepping, enemy phase, termination.

All functions are pure with respect to their ``GameState`` argument; a new
state is returned and the input is never mutated (stepping an illegal
action raises and leaves everything untouched).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import RuleViolation
from ..rewards.events import EventVector
from . import actions as A
from . import _kernels as K
from .backend import kernels
from .state import (
    DRAW, ENEMY_PHASE, HERO_PHASE, LOSS, ONGOING, WIN, GameState,
)


@dataclass(frozen=True)
class StepFrame:
    """One micro-action inside a step, for replay viewers and log scanners."""

    actor: int
    verb: str
    detail: dict

    def to_dict(self) -> dict:
        return {"actor": self.actor, "verb": self.verb, **self.detail}


_VERB_NAMES = {
    K.V_MOVE: "move",
    K.V_SHOOT_HIT: "shoot_hit",
    K.V_SHOOT_COVER: "shoot_cover",
    K.V_STAB: "stab",
    K.V_SHIELD_ON: "shield_on",
    K.V_SHIELD_ABSORB: "shield_absorb",
    K.V_PASS: "pass",
    K.V_SHOOT_BLOCKED: "shoot_blocked",
}


def _frames_from_trace(trace: np.ndarray, n: int) -> list[StepFrame]:
    frames = []
    for row in trace[:n]:
        actor, verb = int(row[0]), int(row[1])
        name = _VERB_NAMES[verb]
        if verb == K.V_MOVE:
            detail = {"from": [int(row[2]), int(row[3])], "to": [int(row[4]), int(row[5])]}
        elif verb in (K.V_SHOOT_HIT, K.V_STAB):
            detail = {"target": int(row[2]), "damage": int(row[3]),
                      "target_health": int(row[4])}
        elif verb in (K.V_SHOOT_COVER, K.V_SHOOT_BLOCKED):
            detail = {"target": int(row[2])}
        elif verb == K.V_SHIELD_ABSORB:
            detail = {"attacker": int(row[2]), "melee": bool(row[3])}
        else:
            detail = {}
        frames.append(StepFrame(actor=actor, verb=name, detail=detail))
    return frames


def legal_actions(state: GameState) -> np.ndarray:
    """Legality mask over the 61 actions (uint8, 1 = legal)."""
    if state.phase != HERO_PHASE:
        raise RuleViolation("hero_phase", "legality queried during enemy phase")
    if state.outcome != ONGOING:
        raise RuleViolation("ongoing", "legality queried on a finished game")
    mask = np.zeros(A.N_ACTIONS, dtype=np.uint8)
    kernels.legal_mask(
        state.units, state.stats, state.ranges_sq, state.occ,
        state.board_size, mask,
    )
    return mask


def is_terminal(state: GameState) -> int:
    """Outcome implied by unit healths and the turn counter.

    Win takes precedence over loss (hero actions resolve first), and a
    draw requires the full turn budget spent with both teams partly alive.
    """
    if state.enemies_alive() == 0:
        return WIN
    if state.heroes_alive() == 0:
        return LOSS
    if state.turns_completed >= state.scenario.turn_limit:
        return DRAW
    return ONGOING


def run_enemy_turn(state: GameState, record: list | None = None):
    """Resolve the scripted enemy phase; returns (state, events).

    Requires ``state.phase == ENEMY_PHASE`` (the engine enters that phase
    on the end-turn action); the returned state is back in the hero phase.
    """
    if state.phase != ENEMY_PHASE:
        raise RuleViolation("enemy_phase", "enemy turn outside the enemy phase")
    s = state.copy()
    ev = np.zeros(7, dtype=np.float64)
    trace = np.zeros((s.trace_cap, 6), dtype=np.int32)
    n = kernels.run_enemy_phase(
        s.units, s.stats, s.ranges_sq, s.occ, s.board_size,
        s.scenario.kite_fraction, ev, trace, 0,
    )
    s.phase = HERO_PHASE
    if record is not None:
        record.extend(_frames_from_trace(trace, n))
    return s, EventVector.from_array(ev)


def step(state: GameState, action: int, record: list | None = None):
    """Apply one encoded action; returns (next_state, events).

    The end-turn action runs the whole enemy phase, per-turn bookkeeping,
    and emits the end-of-turn hero-distance event.  Illegal actions raise
    ``RuleViolation`` naming the violated precondition.
    """
    if state.phase != HERO_PHASE:
        raise RuleViolation("hero_phase", "step during enemy phase")
    if state.outcome != ONGOING:
        raise RuleViolation("ongoing", "step on a finished game")
    action = int(action)
    if not 0 <= action < A.N_ACTIONS:
        raise RuleViolation("action_index", f"index {action} outside [0, 61)")

    s = state.copy()
    ev = np.zeros(7, dtype=np.float64)
    trace = np.zeros((s.trace_cap, 6), dtype=np.int32)

    if action == A.END_TURN:
        s.phase = ENEMY_PHASE
        n = kernels.run_enemy_phase(
            s.units, s.stats, s.ranges_sq, s.occ, s.board_size,
            s.scenario.kite_fraction, ev, trace, 0,
        )
        kernels.end_turn_bookkeeping(s.units, s.stats)
        s.phase = HERO_PHASE
        s.turns_completed += 1
        ev[K.EV_DIST] = kernels.hero_distance(s.units, K.N_HEROES)
        s.outcome = is_terminal(s)
        if s.outcome == ONGOING:
            s.turn = s.turns_completed + 1
    else:
        code = kernels.apply_hero_action(
            s.units, s.stats, s.ranges_sq, s.occ, s.board_size,
            action, ev, trace, 0,
        )
        if code != K.OK:
            raise RuleViolation(K.VIOLATION_NAMES[int(code)],
                                A.decode(action).describe())
        n = 1
        if s.enemies_alive() == 0:
            s.outcome = WIN

    if s.outcome == WIN:
        ev[K.EV_WIN] = 1.0
    elif s.outcome == LOSS:
        ev[K.EV_WIN] = -1.0
    s.step_count += 1

    if record is not None:
        record.extend(_frames_from_trace(trace, n))
    return s, EventVector.from_array(ev)
