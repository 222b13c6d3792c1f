"""Coefficient intervals and their discrete lattices.

Each of the seven reward coefficients lives on a closed interval that is
discretized with a fixed step (0.1 for the style coefficients, 1 for the
win coefficient).  Training samples coefficients from these lattices;
evaluation may probe beyond the bounds.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ConfigError

# Canonical coefficient order, used everywhere a 7-vector appears.
COEFFICIENT_NAMES = (
    "r_Stab",
    "r_CvrShooting",
    "r_HeroShot",
    "r_UsefulShld",
    "r_NmyDamage",
    "r_HeroDistance",
    "r_Win",
)


def _snap(value: float) -> float:
    """Canonical one-decimal float for lattice values (kills 0.1 drift)."""
    return round(value * 10.0) / 10.0


@dataclass(frozen=True)
class CoefficientInterval:
    name: str
    lo: float
    hi: float
    step: float

    def __post_init__(self):
        if self.step <= 0:
            raise ConfigError(f"rewards.{self.name}.step", "step must be > 0")
        if self.lo > self.hi:
            raise ConfigError(
                f"rewards.{self.name}", f"min {self.lo} > max {self.hi}"
            )

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def half_width(self) -> float:
        return 0.5 * (self.hi - self.lo)

    @property
    def scale(self) -> float:
        """Per-term normalization denominator: max absolute bound."""
        return max(abs(self.lo), abs(self.hi))

    def lattice_size(self) -> int:
        if self.step > self.hi - self.lo:
            return 1
        return int(round((self.hi - self.lo) / self.step)) + 1

    def lattice(self) -> list[float]:
        return [_snap(self.lo + k * self.step) for k in range(self.lattice_size())]

    def on_lattice(self, value: float, tol: float = 1e-9) -> bool:
        if value < self.lo - tol or value > self.hi + tol:
            return False
        k = (value - self.lo) / self.step
        return abs(k - round(k)) < 1e-6

    def contains(self, value: float) -> bool:
        return self.lo <= value <= self.hi

    def widened(self, factor: float) -> "CoefficientInterval":
        """Interval stretched around its midpoint, keeping the step.

        Bounds are re-snapped to the step grid so the widened lattice still
        contains the original one.
        """
        hw = self.half_width * factor
        lo = self.mid - hw
        hi = self.mid + hw
        lo = self.mid - round((self.mid - lo) / self.step) * self.step
        hi = self.mid + round((hi - self.mid) / self.step) * self.step
        return CoefficientInterval(self.name, _snap(lo), _snap(hi), self.step)


@dataclass(frozen=True)
class RewardIntervals:
    """The seven coefficient intervals, in canonical order."""

    intervals: tuple[CoefficientInterval, ...]

    def __post_init__(self):
        names = tuple(iv.name for iv in self.intervals)
        if names != COEFFICIENT_NAMES:
            raise ConfigError("rewards", f"expected {COEFFICIENT_NAMES}, got {names}")

    def __iter__(self):
        return iter(self.intervals)

    def __getitem__(self, name: str) -> CoefficientInterval:
        for iv in self.intervals:
            if iv.name == name:
                return iv
        raise KeyError(name)

    def scales(self) -> list[float]:
        return [iv.scale for iv in self.intervals]

    def widened(self, factor: float) -> "RewardIntervals":
        return RewardIntervals(tuple(iv.widened(factor) for iv in self.intervals))

    @staticmethod
    def from_mapping(raw: dict) -> "RewardIntervals":
        ivs = []
        for name in COEFFICIENT_NAMES:
            if name not in raw:
                raise ConfigError(f"rewards.{name}", "missing interval")
            entry = raw[name]
            try:
                lo, hi = float(entry["min"]), float(entry["max"])
                step = float(entry.get("step", 1.0 if name == "r_Win" else 0.1))
            except (KeyError, TypeError, ValueError) as exc:
                raise ConfigError(f"rewards.{name}", f"malformed interval: {exc}")
            ivs.append(CoefficientInterval(name, lo, hi, step))
        return RewardIntervals(tuple(ivs))

    def to_mapping(self) -> dict:
        return {
            iv.name: {"min": iv.lo, "max": iv.hi, "step": iv.step}
            for iv in self.intervals
        }


def default_intervals() -> RewardIntervals:
    """The stock coefficient ranges used throughout training."""
    return RewardIntervals(
        (
            CoefficientInterval("r_Stab", -1.0, 3.0, 0.1),
            CoefficientInterval("r_CvrShooting", -2.0, 1.0, 0.1),
            CoefficientInterval("r_HeroShot", -1.0, 2.5, 0.1),
            CoefficientInterval("r_UsefulShld", -1.0, 2.5, 0.1),
            CoefficientInterval("r_NmyDamage", -3.5, 1.0, 0.1),
            CoefficientInterval("r_HeroDistance", -3.5, 3.5, 0.1),
            CoefficientInterval("r_Win", 0.0, 20.0, 1.0),
        )
    )
