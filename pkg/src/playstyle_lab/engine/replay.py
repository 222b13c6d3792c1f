"""Replay files: header + ordered action list, bit-exact on re-execution."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from ..config import Scenario
from ..errors import ConfigError
from .state import GameState, OUTCOME_NAMES
from . import engine

FORMAT_VERSION = 1


def roster_hash(scenario: Scenario) -> str:
    payload = json.dumps(scenario.to_dict(), sort_keys=True).encode()
    return hashlib.sha256(payload).hexdigest()[:16]


@dataclass
class Replay:
    seed: int
    scenario: Scenario
    actions: list[int] = field(default_factory=list)
    final_hash: str = ""

    def to_dict(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "seed": self.seed,
            "roster_hash": roster_hash(self.scenario),
            "scenario": self.scenario.to_dict(),
            "actions": self.actions,
            "final_hash": self.final_hash,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=None,
                          separators=(",", ":"))

    @staticmethod
    def from_dict(raw: dict) -> "Replay":
        try:
            if raw["format_version"] != FORMAT_VERSION:
                raise ConfigError(
                    "replay.format_version", f"unsupported {raw['format_version']}"
                )
            rep = Replay(
                seed=int(raw["seed"]),
                scenario=Scenario.from_dict(raw["scenario"]),
                actions=[int(a) for a in raw["actions"]],
                final_hash=str(raw["final_hash"]),
            )
        except KeyError as exc:
            raise ConfigError(f"replay.{exc.args[0]}", "missing field")
        expected = raw.get("roster_hash")
        actual = roster_hash(rep.scenario)
        if expected != actual:
            raise ConfigError("replay.roster_hash", f"{expected} != {actual}")
        return rep

    @staticmethod
    def loads(text: str) -> "Replay":
        return Replay.from_dict(json.loads(text))


class ReplayRecorder:
    """Collects the action stream of one episode as it is played."""

    def __init__(self, state: GameState):
        self.replay = Replay(seed=state.seed, scenario=state.scenario)

    def record(self, action: int):
        self.replay.actions.append(int(action))

    def finish(self, final_state: GameState) -> Replay:
        self.replay.final_hash = final_state.state_hash()
        return self.replay


def replay_episode(replay: Replay, record: list | None = None):
    """Re-execute a replay; returns (final_state, per-step events list).

    Raises ConfigError if the recorded final-state hash does not match.
    """
    from .state import new_game

    state = new_game(replay.seed, replay.scenario)
    events = []
    for action in replay.actions:
        state, ev = engine.step(state, action, record=record)
        events.append(ev)
    if replay.final_hash and state.state_hash() != replay.final_hash:
        raise ConfigError(
            "replay.final_hash",
            f"recorded {replay.final_hash[:12]}.. but re-execution reached "
            f"{state.state_hash()[:12]}.. ({OUTCOME_NAMES[state.outcome]})",
        )
    return state, events
