"""Scenario configuration: board, roster, rule parameters.

A scenario file is YAML with sections ``scenario`` (this module),
``rewards`` (coefficient intervals), ``training`` and ``evaluation``
(free-form parameter mappings consumed by the CLI).
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field, asdict

import yaml

from .errors import ConfigError

ENEMY_KINDS = ("brute", "archer", "soldier")


@dataclass(frozen=True)
class UnitStats:
    max_health: int
    move_budget: int
    shot_range: float
    shot_damage: int
    stab_damage: int
    has_shield: bool = False

    def validate(self, where: str):
        for name in ("max_health", "move_budget", "shot_range", "shot_damage", "stab_damage"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{where}.{name}", "must be > 0")


@dataclass(frozen=True)
class EnemySpec:
    kind: str
    stats: UnitStats

    def validate(self, where: str):
        if self.kind not in ENEMY_KINDS:
            raise ConfigError(f"{where}.kind", f"expected one of {ENEMY_KINDS}")
        if self.stats.has_shield:
            raise ConfigError(f"{where}.has_shield", "enemies have no shield")
        self.stats.validate(where)


@dataclass(frozen=True)
class Scenario:
    board_size: int = 20
    cover_count: int = 40
    turn_limit: int = 10
    # Scripted-rule parameters (documented knobs, defaults are canonical).
    kite_fraction: float = 0.5          # archers keep >= this fraction of range
    contact_close_fraction: float = 0.5  # contact heuristic shoots within this
    heroes: tuple[UnitStats, ...] = field(
        default_factory=lambda: (DEFAULT_HERO,) * 3
    )
    enemies: tuple[EnemySpec, ...] = field(
        default_factory=lambda: DEFAULT_ENEMIES
    )

    def validate(self):
        if self.board_size < 3:
            raise ConfigError("scenario.board_size", "must be >= 3")
        if self.turn_limit < 1:
            raise ConfigError("scenario.turn_limit", "must be >= 1")
        if len(self.heroes) != 3:
            raise ConfigError("scenario.heroes", "exactly 3 heroes required")
        if len(self.enemies) != 5:
            raise ConfigError("scenario.enemies", "exactly 5 enemies required")
        if self.cover_count < 0:
            raise ConfigError("scenario.cover_count", "must be >= 0")
        cells = self.board_size * self.board_size
        if self.cover_count + 8 > cells:
            raise ConfigError(
                "scenario.cover_count",
                f"{self.cover_count} covers + 8 units exceed {cells} cells",
            )
        if not 0.0 <= self.kite_fraction <= 1.0:
            raise ConfigError("scenario.kite_fraction", "must be in [0, 1]")
        if not 0.0 <= self.contact_close_fraction <= 1.0:
            raise ConfigError("scenario.contact_close_fraction", "must be in [0, 1]")
        for i, h in enumerate(self.heroes):
            h.validate(f"scenario.heroes[{i}]")
        for i, e in enumerate(self.enemies):
            e.validate(f"scenario.enemies[{i}]")
        return self

    @property
    def board_diagonal(self) -> float:
        d = self.board_size - 1
        return (2.0 * d * d) ** 0.5

    def to_dict(self) -> dict:
        return asdict(self)

    @staticmethod
    def from_dict(raw: dict) -> "Scenario":
        base = Scenario()
        try:
            heroes = tuple(
                UnitStats(**h) for h in raw.get("heroes", [asdict(s) for s in base.heroes])
            )
            enemies = tuple(
                EnemySpec(kind=e["kind"], stats=UnitStats(**e["stats"]))
                for e in raw.get("enemies", [asdict(s) for s in base.enemies])
            )
            scenario = Scenario(
                board_size=int(raw.get("board_size", base.board_size)),
                cover_count=int(raw.get("cover_count", base.cover_count)),
                turn_limit=int(raw.get("turn_limit", base.turn_limit)),
                kite_fraction=float(raw.get("kite_fraction", base.kite_fraction)),
                contact_close_fraction=float(
                    raw.get("contact_close_fraction", base.contact_close_fraction)
                ),
                heroes=heroes,
                enemies=enemies,
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError("scenario", f"malformed scenario: {exc}")
        return scenario.validate()


DEFAULT_HERO = UnitStats(
    max_health=10, move_budget=4, shot_range=6.0, shot_damage=3, stab_damage=4,
    has_shield=True,
)
DEFAULT_ENEMIES = (
    EnemySpec("brute", UnitStats(12, 2, 2.0, 4, 4)),
    EnemySpec("archer", UnitStats(5, 3, 8.0, 2, 2)),
    EnemySpec("archer", UnitStats(5, 3, 8.0, 2, 2)),
    EnemySpec("soldier", UnitStats(8, 3, 5.0, 3, 3)),
    EnemySpec("soldier", UnitStats(8, 3, 5.0, 3, 3)),
)


def default_scenario() -> Scenario:
    return Scenario().validate()


def load_config_file(path: str) -> dict:
    """Parse a YAML run config; returns the raw section mapping."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = yaml.safe_load(fh)
    except OSError as exc:
        raise ConfigError("config", f"cannot read {path}: {exc}")
    except yaml.YAMLError as exc:
        raise ConfigError("config", f"cannot parse {path}: {exc}")
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise ConfigError("config", "top level must be a mapping")
    return raw


def dump_yaml(data: dict) -> str:
    buf = io.StringIO()
    yaml.safe_dump(data, buf, sort_keys=False)
    return buf.getvalue()
