from .actions import (
    Action,
    DIRECTIONS,
    END_TURN,
    N_ACTIONS,
    decode,
    encode,
    move_action,
    pass_action,
    shield_action,
    shoot_action,
    stab_action,
)
from .backend import BACKEND, available_backends, kernels
from .engine import StepFrame, is_terminal, legal_actions, run_enemy_turn, step
from .observe import Observation, encode_observation
from .replay import Replay, ReplayRecorder, replay_episode, roster_hash
from .state import (
    DRAW,
    ENEMY_PHASE,
    HERO_PHASE,
    LOSS,
    ONGOING,
    OUTCOME_NAMES,
    WIN,
    GameState,
    Unit,
    new_game,
)

__all__ = [
    "Action", "DIRECTIONS", "END_TURN", "N_ACTIONS", "decode", "encode",
    "move_action", "pass_action", "shield_action", "shoot_action", "stab_action",
    "BACKEND", "available_backends", "kernels",
    "StepFrame", "is_terminal", "legal_actions", "run_enemy_turn", "step",
    "Observation", "encode_observation",
    "Replay", "ReplayRecorder", "replay_episode", "roster_hash",
    "DRAW", "ENEMY_PHASE", "HERO_PHASE", "LOSS", "ONGOING", "OUTCOME_NAMES",
    "WIN", "GameState", "Unit", "new_game",
]
