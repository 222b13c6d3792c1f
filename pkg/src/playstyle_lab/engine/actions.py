"""Action index codec.

The flat action space has 61 entries: 3 heroes x 20 sub-actions plus one
global end-of-turn action.  Per hero the 20 sub-actions are 8 compass
moves, 5 shoot targets, 5 stab targets, shield, and pass.
"""

from __future__ import annotations

from dataclasses import dataclass

N_ACTIONS = 61
END_TURN = 60
SUB_PER_HERO = 20

# Compass directions in canonical order: N, NE, E, SE, S, SW, W, NW
# (+y is north).  Used for moves and for all greedy-step tie-breaks.
DIRECTIONS = ((0, 1), (1, 1), (1, 0), (1, -1), (0, -1), (-1, -1), (-1, 0), (-1, 1))
DIRECTION_NAMES = ("N", "NE", "E", "SE", "S", "SW", "W", "NW")

# Sub-action slots within a hero's block of 20.
SUB_MOVE = 0      # 0..7  -> DIRECTIONS
SUB_SHOOT = 8     # 8..12 -> enemy 0..4
SUB_STAB = 13     # 13..17 -> enemy 0..4
SUB_SHIELD = 18
SUB_PASS = 19


@dataclass(frozen=True)
class Action:
    """Decoded form of an action index."""

    kind: str  # "move" | "shoot" | "stab" | "shield" | "pass" | "end_turn"
    hero: int = -1
    direction: int = -1  # move: index into DIRECTIONS
    target: int = -1     # shoot/stab: enemy index 0..4

    @property
    def index(self) -> int:
        return encode(self)

    def describe(self) -> str:
        if self.kind == "end_turn":
            return "EndTurn"
        if self.kind == "move":
            return f"hero{self.hero} move {DIRECTION_NAMES[self.direction]}"
        if self.kind in ("shoot", "stab"):
            return f"hero{self.hero} {self.kind} enemy{self.target}"
        return f"hero{self.hero} {self.kind}"


def encode(action: Action) -> int:
    if action.kind == "end_turn":
        return END_TURN
    base = action.hero * SUB_PER_HERO
    if action.kind == "move":
        return base + SUB_MOVE + action.direction
    if action.kind == "shoot":
        return base + SUB_SHOOT + action.target
    if action.kind == "stab":
        return base + SUB_STAB + action.target
    if action.kind == "shield":
        return base + SUB_SHIELD
    if action.kind == "pass":
        return base + SUB_PASS
    raise ValueError(f"unknown action kind {action.kind!r}")


def decode(index: int) -> Action:
    if not 0 <= index < N_ACTIONS:
        raise ValueError(f"action index {index} outside [0, {N_ACTIONS})")
    if index == END_TURN:
        return Action("end_turn")
    hero, sub = divmod(index, SUB_PER_HERO)
    if sub < SUB_SHOOT:
        return Action("move", hero=hero, direction=sub)
    if sub < SUB_STAB:
        return Action("shoot", hero=hero, target=sub - SUB_SHOOT)
    if sub < SUB_SHIELD:
        return Action("stab", hero=hero, target=sub - SUB_STAB)
    if sub == SUB_SHIELD:
        return Action("shield", hero=hero)
    return Action("pass", hero=hero)


def move_action(hero: int, direction: int) -> int:
    return hero * SUB_PER_HERO + SUB_MOVE + direction


def shoot_action(hero: int, enemy: int) -> int:
    return hero * SUB_PER_HERO + SUB_SHOOT + enemy


def stab_action(hero: int, enemy: int) -> int:
    return hero * SUB_PER_HERO + SUB_STAB + enemy


def shield_action(hero: int) -> int:
    return hero * SUB_PER_HERO + SUB_SHIELD


def pass_action(hero: int) -> int:
    return hero * SUB_PER_HERO + SUB_PASS
