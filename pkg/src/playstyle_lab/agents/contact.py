"""The rule-based melee-first hero controller.

Plays the three heroes independently, one micro-action per call: close the
gap to the nearest enemy, stab when adjacent, fall back to a shot when the
enemy stays close enough, never shield.
"""

from __future__ import annotations

from ..engine import actions as A
from ..engine import _kernels as K
from ..engine.state import GameState, HERO_PHASE, ONGOING
from ..errors import RuleViolation


def _nearest_enemy(state: GameState, hero: int) -> tuple[int, int]:
    """(enemy index, squared distance); ties by lower health then index."""
    units = state.units
    best, best_d, best_hp = -1, 1 << 30, 1 << 30
    hx, hy = int(units[hero, K.UX]), int(units[hero, K.UY])
    for e in range(K.N_HEROES, K.N_UNITS):
        if units[e, K.UHEALTH] <= 0:
            continue
        d = (int(units[e, K.UX]) - hx) ** 2 + (int(units[e, K.UY]) - hy) ** 2
        hp = int(units[e, K.UHEALTH])
        if d < best_d or (d == best_d and hp < best_hp):
            best, best_d, best_hp = e, d, hp
    return best, best_d


def _adjacent_enemy(state: GameState, hero: int) -> int:
    units = state.units
    best, best_hp = -1, 1 << 30
    for e in range(K.N_HEROES, K.N_UNITS):
        if units[e, K.UHEALTH] <= 0:
            continue
        dx = abs(int(units[e, K.UX]) - int(units[hero, K.UX]))
        dy = abs(int(units[e, K.UY]) - int(units[hero, K.UY]))
        if max(dx, dy) == 1 and units[e, K.UHEALTH] < best_hp:
            best, best_hp = e, int(units[e, K.UHEALTH])
    return best


def _step_toward(state: GameState, hero: int, target: int) -> int:
    """Greedy move direction toward the target, or -1 if none improves."""
    units, occ, size = state.units, state.occ, state.board_size
    tx, ty = int(units[target, K.UX]), int(units[target, K.UY])
    cx, cy = int(units[hero, K.UX]), int(units[hero, K.UY])
    best, best_d = -1, (cx - tx) ** 2 + (cy - ty) ** 2
    for d, (dx, dy) in enumerate(A.DIRECTIONS):
        nx, ny = cx + dx, cy + dy
        if not (0 <= nx < size and 0 <= ny < size):
            continue
        if occ[ny, nx] != K.OCC_EMPTY:
            continue
        nd = (nx - tx) ** 2 + (ny - ty) ** 2
        if nd < best_d:
            best, best_d = d, nd
    return best


def contact_heuristic_action(state: GameState, close_fraction: float | None = None) -> int:
    """Encoded action for the current state; end-turn once heroes are spent.

    Per hero, in index order: stab an adjacent enemy; otherwise walk in
    while adjacency is still reachable this turn; otherwise shoot the
    nearest enemy if it is within ``close_fraction`` of shot range;
    otherwise keep walking in.  A hero with nothing useful left passes.
    """
    if state.phase != HERO_PHASE:
        raise RuleViolation("hero_phase", "heuristic queried during enemy phase")
    if state.outcome != ONGOING:
        raise RuleViolation("ongoing", "heuristic queried on a finished game")
    if close_fraction is None:
        close_fraction = state.scenario.contact_close_fraction

    units = state.units
    for hero in range(K.N_HEROES):
        if units[hero, K.UHEALTH] <= 0:
            continue
        acted = units[hero, K.UACTED] != 0
        moves = int(units[hero, K.UMOVES])
        target, dist_sq = _nearest_enemy(state, hero)
        if target < 0:
            continue
        if not acted:
            adj = _adjacent_enemy(state, hero)
            if adj >= 0:
                return A.stab_action(hero, adj - K.N_HEROES)
        dx = abs(int(units[target, K.UX]) - int(units[hero, K.UX]))
        dy = abs(int(units[target, K.UY]) - int(units[hero, K.UY]))
        chebyshev = max(dx, dy)
        reachable = chebyshev - 1 <= moves
        if moves > 0 and chebyshev > 1 and reachable:
            d = _step_toward(state, hero, target)
            if d >= 0:
                return A.move_action(hero, d)
        if not acted:
            close_sq = (close_fraction ** 2) * state.ranges_sq[hero]
            if dist_sq <= state.ranges_sq[hero] and dist_sq <= close_sq:
                return A.shoot_action(hero, target - K.N_HEROES)
        if moves > 0:
            d = _step_toward(state, hero, target)
            if d >= 0:
                return A.move_action(hero, d)
        if not acted:
            return A.pass_action(hero)
        # hero fully spent; fall through to the next one
    return A.END_TURN
