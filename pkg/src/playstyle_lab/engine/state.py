"""Game state container and episode construction."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from ..config import Scenario, default_scenario
from ..errors import ConfigError
from . import _kernels as K  # layout constants are backend-independent

# Outcome / phase codes.
ONGOING, WIN, LOSS, DRAW = 0, 1, 2, 3
OUTCOME_NAMES = {ONGOING: "ongoing", WIN: "win", LOSS: "loss", DRAW: "draw"}
HERO_PHASE, ENEMY_PHASE = 0, 1

KIND_NAMES = {
    K.KIND_HERO: "hero",
    K.KIND_BRUTE: "brute",
    K.KIND_ARCHER: "archer",
    K.KIND_SOLDIER: "soldier",
}
_KIND_CODES = {"brute": K.KIND_BRUTE, "archer": K.KIND_ARCHER, "soldier": K.KIND_SOLDIER}


@dataclass(frozen=True)
class Unit:
    """Read-only view of one unit, for inspection and serialization."""

    id: int
    team: str
    kind: str
    pos: tuple[int, int]
    health: int
    max_health: int
    moves_left: int
    acted: bool
    shield_active: bool
    shield_cooldown: int

    @property
    def alive(self) -> bool:
        return self.health > 0


class GameState:
    """Full authoritative simulation state.

    Treated as a value: the engine's transition functions copy before
    mutating, so callers can hold onto any state they have seen.
    """

    __slots__ = (
        "scenario", "seed", "units", "stats", "ranges_sq", "occ",
        "turn", "turns_completed", "phase", "step_count", "outcome",
        "trace_cap",
    )

    def __init__(self, scenario: Scenario, seed: int):
        self.scenario = scenario
        self.seed = int(seed)
        self.units = np.zeros((K.N_UNITS, K.N_UNIT_COLS), dtype=np.int32)
        self.stats = np.zeros((K.N_UNITS, K.N_STAT_COLS), dtype=np.int32)
        self.ranges_sq = np.zeros(K.N_UNITS, dtype=np.float64)
        self.occ = np.full(
            (scenario.board_size, scenario.board_size), K.OCC_EMPTY, dtype=np.int32
        )
        self.turn = 1
        self.turns_completed = 0
        self.phase = HERO_PHASE
        self.step_count = 0
        self.outcome = ONGOING
        max_budget = max(
            [s.move_budget for s in scenario.heroes]
            + [e.stats.move_budget for e in scenario.enemies]
        )
        self.trace_cap = 8 + K.N_ENEMIES * (max_budget + 2)

    # -- construction ------------------------------------------------------
    def copy(self) -> "GameState":
        other = object.__new__(GameState)
        other.scenario = self.scenario
        other.seed = self.seed
        other.units = self.units.copy()
        other.stats = self.stats
        other.ranges_sq = self.ranges_sq
        other.occ = self.occ.copy()
        other.turn = self.turn
        other.turns_completed = self.turns_completed
        other.phase = self.phase
        other.step_count = self.step_count
        other.outcome = self.outcome
        other.trace_cap = self.trace_cap
        return other

    # -- views -------------------------------------------------------------
    @property
    def board_size(self) -> int:
        return self.scenario.board_size

    @property
    def board_diagonal(self) -> float:
        return self.scenario.board_diagonal

    @property
    def covers(self) -> frozenset[tuple[int, int]]:
        ys, xs = np.nonzero(self.occ == K.OCC_COVER)
        return frozenset((int(x), int(y)) for x, y in zip(xs, ys))

    def unit(self, i: int) -> Unit:
        u, s = self.units[i], self.stats[i]
        return Unit(
            id=i,
            team="hero" if s[K.STEAM] == K.TEAM_HERO else "enemy",
            kind=KIND_NAMES[int(s[K.SKIND])],
            pos=(int(u[K.UX]), int(u[K.UY])),
            health=int(u[K.UHEALTH]),
            max_health=int(s[K.SMAXHP]),
            moves_left=int(u[K.UMOVES]),
            acted=bool(u[K.UACTED]),
            shield_active=bool(u[K.USHIELD]),
            shield_cooldown=int(u[K.UCOOLDOWN]),
        )

    def units_view(self) -> list[Unit]:
        return [self.unit(i) for i in range(K.N_UNITS)]

    def heroes_alive(self) -> int:
        return int(np.count_nonzero(self.units[: K.N_HEROES, K.UHEALTH] > 0))

    def enemies_alive(self) -> int:
        return int(np.count_nonzero(self.units[K.N_HEROES :, K.UHEALTH] > 0))

    # -- identity ----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, GameState):
            return NotImplemented
        return (
            self.turn == other.turn
            and self.turns_completed == other.turns_completed
            and self.phase == other.phase
            and self.step_count == other.step_count
            and self.outcome == other.outcome
            and self.seed == other.seed
            and np.array_equal(self.units, other.units)
            and np.array_equal(self.stats, other.stats)
            and np.array_equal(self.ranges_sq, other.ranges_sq)
            and np.array_equal(self.occ, other.occ)
        )

    def __hash__(self):  # states are mutable internally; identity hash
        return id(self)

    def state_hash(self) -> str:
        """Canonical content hash, used by replay verification."""
        h = hashlib.sha256()
        h.update(
            np.array(
                [self.seed, self.turn, self.turns_completed, self.phase,
                 self.step_count, self.outcome],
                dtype=np.int64,
            ).tobytes()
        )
        h.update(self.units.tobytes())
        h.update(self.stats.tobytes())
        h.update(self.ranges_sq.tobytes())
        h.update(self.occ.tobytes())
        return h.hexdigest()


def _fill_stats(state: GameState, scenario: Scenario):
    for i, hs in enumerate(scenario.heroes):
        state.stats[i] = (
            K.TEAM_HERO, K.KIND_HERO, hs.max_health, hs.move_budget,
            hs.shot_damage, hs.stab_damage, 1 if hs.has_shield else 0,
        )
        state.ranges_sq[i] = float(hs.shot_range) ** 2
        state.units[i, K.UHEALTH] = hs.max_health
        state.units[i, K.UMOVES] = hs.move_budget
    for j, spec in enumerate(scenario.enemies):
        i = K.N_HEROES + j
        st = spec.stats
        state.stats[i] = (
            K.TEAM_ENEMY, _KIND_CODES[spec.kind], st.max_health, st.move_budget,
            st.shot_damage, st.stab_damage, 0,
        )
        state.ranges_sq[i] = float(st.shot_range) ** 2
        state.units[i, K.UHEALTH] = st.max_health
        state.units[i, K.UMOVES] = st.move_budget


def new_game(seed: int, scenario: Scenario | None = None) -> GameState:
    """Fresh episode: covers and units spawned uniformly on distinct cells.

    Fully determined by ``seed``; the placement draw is the only use of
    randomness in the whole engine.
    """
    if scenario is None:
        scenario = default_scenario()
    scenario.validate()
    state = GameState(scenario, seed)
    _fill_stats(state, scenario)

    rng = np.random.default_rng(seed)
    size = scenario.board_size
    cells = rng.choice(size * size, size=scenario.cover_count + K.N_UNITS, replace=False)
    for c in cells[: scenario.cover_count]:
        state.occ[c // size, c % size] = K.OCC_COVER
    for i, c in enumerate(cells[scenario.cover_count :]):
        x, y = int(c % size), int(c // size)
        state.units[i, K.UX] = x
        state.units[i, K.UY] = y
        state.occ[y, x] = i
    return state
