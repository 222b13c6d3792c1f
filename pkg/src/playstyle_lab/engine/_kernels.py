# cython: boundscheck=False, wraparound=False, initializedcheck=False
# cython: cdivision=False
"""Hot simulation kernels, written in Cython pure-Python mode.

This file is both the compiled extension source (built as
``playstyle_lab.engine._ckernels``) and the interpreted fallback; the two
backends therefore share one implementation.  All functions operate on the
flat arrays owned by ``GameState`` (see engine.state for the layout) and
know nothing about Python-level game objects.
"""

import math

import cython
import numpy as np

# ---------------------------------------------------------------- layout --
# Occupancy codes (occ[y, x]): -1 empty, 0..7 unit index, 100 cover.
OCC_EMPTY = -1
OCC_COVER = 100

# Dynamic unit columns.
UX = 0
UY = 1
UHEALTH = 2
UMOVES = 3
UACTED = 4
USHIELD = 5
UCOOLDOWN = 6
UFRESH = 7
N_UNIT_COLS = 8

# Static stat columns.
STEAM = 0
SKIND = 1
SMAXHP = 2
SBUDGET = 3
SSHOTDMG = 4
SSTABDMG = 5
SHASSHIELD = 6
N_STAT_COLS = 7

TEAM_HERO = 0
TEAM_ENEMY = 1
KIND_HERO = 0
KIND_BRUTE = 1
KIND_ARCHER = 2
KIND_SOLDIER = 3

N_HEROES = 3
N_ENEMIES = 5
N_UNITS = 8

# Action sub-slot layout; must mirror engine.actions (checked by tests).
N_ACTIONS = 61
A_END_TURN = 60
A_SUB_PER_HERO = 20
A_SUB_MOVE = 0
A_SUB_SHOOT = 8
A_SUB_STAB = 13
A_SUB_SHIELD = 18
A_SUB_PASS = 19

# Event vector indices.
EV_STAB = 0
EV_CVR = 1
EV_SHOT = 2
EV_SHLD = 3
EV_NMY = 4
EV_DIST = 5
EV_WIN = 6

# Trace verbs (rows are [actor, verb, a, b, c, d]).
V_MOVE = 0          # a,b = from cell; c,d = to cell
V_SHOOT_HIT = 1     # a = target, b = damage, c = target health after
V_SHOOT_COVER = 2   # a = intended target, b,c = blocking cell
V_STAB = 3          # a = target, b = damage, c = target health after
V_SHIELD_ON = 4
V_SHIELD_ABSORB = 5  # a = attacker, actor = shielded hero, b = 0 shot / 1 stab
V_PASS = 6
V_SHOOT_BLOCKED = 7  # enemy shot into a cover: a = target, b,c = blocking cell

# Rule-violation codes returned by apply_hero_action.
OK = 0
E_INDEX = 1
E_HERO_DEAD = 2
E_NO_MOVES = 3
E_OOB = 4
E_OCCUPIED = 5
E_TARGET_DEAD = 6
E_RANGE = 7
E_ADJACENCY = 8
E_SHIELD = 9
E_ACTED = 10

VIOLATION_NAMES = {
    E_INDEX: "action_index",
    E_HERO_DEAD: "hero_alive",
    E_NO_MOVES: "moves_left",
    E_OOB: "in_bounds",
    E_OCCUPIED: "destination_unoccupied",
    E_TARGET_DEAD: "target_alive",
    E_RANGE: "shot_range",
    E_ADJACENCY: "stab_adjacency",
    E_SHIELD: "shield_available",
    E_ACTED: "one_action_per_turn",
}

# Compass directions, canonical order N, NE, E, SE, S, SW, W, NW (+y north).
_DXY = np.array(
    [[0, 1], [1, 1], [1, 0], [1, -1], [0, -1], [-1, -1], [-1, 0], [-1, 1]],
    dtype=np.int32,
)


# ------------------------------------------------------------- geometry --
@cython.ccall
def line_blocked(
    occ: cython.int[:, :],
    size: cython.int,
    x0: cython.int,
    y0: cython.int,
    x1: cython.int,
    y1: cython.int,
) -> cython.int:
    """1 if a cover cell lies strictly between the two cell centers.

    Walks every cell whose interior the open segment crosses (integer
    arithmetic only).  A crossing exactly through a cell corner steps
    diagonally, so it does not clip the two side cells; the walk is
    symmetric in its endpoints.
    """
    dx: cython.int = x1 - x0
    dy: cython.int = y1 - y0
    adx: cython.int = dx if dx >= 0 else -dx
    ady: cython.int = dy if dy >= 0 else -dy
    sx: cython.int = 1 if dx > 0 else -1
    sy: cython.int = 1 if dy > 0 else -1
    cx: cython.int = x0
    cy: cython.int = y0
    k: cython.int = 1
    m: cython.int = 1
    lhs: cython.int
    rhs: cython.int
    while True:
        if k <= adx and m <= ady:
            # next x-boundary at t=(2k-1)/(2adx), next y at t=(2m-1)/(2ady)
            lhs = (2 * k - 1) * ady
            rhs = (2 * m - 1) * adx
            if lhs == rhs:
                cx += sx
                cy += sy
                k += 1
                m += 1
            elif lhs < rhs:
                cx += sx
                k += 1
            else:
                cy += sy
                m += 1
        elif k <= adx:
            cx += sx
            k += 1
        elif m <= ady:
            cy += sy
            m += 1
        else:
            return 0
        if cx == x1 and cy == y1:
            return 0
        if occ[cy, cx] == OCC_COVER:
            return 1


@cython.ccall
def hero_distance(units: cython.int[:, :], n_heroes: cython.int) -> cython.double:
    """Mean pairwise Euclidean distance between living heroes (0 if < 2)."""
    total: cython.double = 0.0
    pairs: cython.int = 0
    i: cython.int
    j: cython.int
    dx: cython.double
    dy: cython.double
    for i in range(n_heroes):
        if units[i, UHEALTH] <= 0:
            continue
        for j in range(i + 1, n_heroes):
            if units[j, UHEALTH] <= 0:
                continue
            dx = units[i, UX] - units[j, UX]
            dy = units[i, UY] - units[j, UY]
            total += math.sqrt(dx * dx + dy * dy)
            pairs += 1
    if pairs == 0:
        return 0.0
    return total / pairs


# ------------------------------------------------------------- legality --
@cython.cfunc
def _dist_sq(units: cython.int[:, :], a: cython.int, b: cython.int) -> cython.int:
    dx: cython.int = units[a, UX] - units[b, UX]
    dy: cython.int = units[a, UY] - units[b, UY]
    return dx * dx + dy * dy


@cython.cfunc
def _chebyshev(units: cython.int[:, :], a: cython.int, b: cython.int) -> cython.int:
    dx: cython.int = units[a, UX] - units[b, UX]
    dy: cython.int = units[a, UY] - units[b, UY]
    if dx < 0:
        dx = -dx
    if dy < 0:
        dy = -dy
    return dx if dx >= dy else dy


@cython.ccall
def legal_mask(
    units: cython.int[:, :],
    stats: cython.int[:, :],
    ranges_sq: cython.double[:],
    occ: cython.int[:, :],
    size: cython.int,
    out: cython.uchar[:],
):
    """Fill the 61-entry legality mask for the hero phase."""
    dxy: cython.int[:, :] = _DXY
    h: cython.int
    d: cython.int
    e: cython.int
    base: cython.int
    nx: cython.int
    ny: cython.int
    i: cython.int
    for i in range(N_ACTIONS):
        out[i] = 0
    out[A_END_TURN] = 1
    for h in range(N_HEROES):
        if units[h, UHEALTH] <= 0:
            continue
        base = h * A_SUB_PER_HERO
        if units[h, UMOVES] > 0:
            for d in range(8):
                nx = units[h, UX] + dxy[d, 0]
                ny = units[h, UY] + dxy[d, 1]
                if 0 <= nx < size and 0 <= ny < size and occ[ny, nx] == OCC_EMPTY:
                    out[base + A_SUB_MOVE + d] = 1
        if units[h, UACTED] == 0:
            for e in range(N_ENEMIES):
                if units[N_HEROES + e, UHEALTH] <= 0:
                    continue
                if _dist_sq(units, h, N_HEROES + e) <= ranges_sq[h]:
                    out[base + A_SUB_SHOOT + e] = 1
                if _chebyshev(units, h, N_HEROES + e) == 1:
                    out[base + A_SUB_STAB + e] = 1
            if (
                stats[h, SHASSHIELD] == 1
                and units[h, USHIELD] == 0
                and units[h, UCOOLDOWN] == 0
            ):
                out[base + A_SUB_SHIELD] = 1
            out[base + A_SUB_PASS] = 1


# ------------------------------------------------------ hero transitions --
@cython.cfunc
def _deal_damage(
    units: cython.int[:, :],
    occ: cython.int[:, :],
    target: cython.int,
    damage: cython.int,
) -> cython.int:
    """Apply damage; returns resulting health.  Dead units vacate their cell."""
    hp: cython.int = units[target, UHEALTH] - damage
    if hp < 0:
        hp = 0
    units[target, UHEALTH] = hp
    if hp == 0:
        occ[units[target, UY], units[target, UX]] = OCC_EMPTY
    return hp


@cython.ccall
def apply_hero_action(
    units: cython.int[:, :],
    stats: cython.int[:, :],
    ranges_sq: cython.double[:],
    occ: cython.int[:, :],
    size: cython.int,
    action: cython.int,
    ev: cython.double[:],
    trace: cython.int[:, :],
    tlen: cython.int,
) -> cython.int:
    """Validate and apply a non-end-turn hero action.

    Returns a violation code (0 = applied); on violation nothing is
    mutated.  Appends trace rows starting at ``tlen``; the new trace length
    is ``tlen + 1`` on success (one row per action).
    """
    if action < 0 or action >= A_END_TURN:
        return E_INDEX
    h: cython.int = action // A_SUB_PER_HERO
    sub: cython.int = action - h * A_SUB_PER_HERO
    if units[h, UHEALTH] <= 0:
        return E_HERO_DEAD
    dxy: cython.int[:, :] = _DXY
    nx: cython.int
    ny: cython.int
    e: cython.int
    hp: cython.int
    if sub < A_SUB_SHOOT:  # move
        if units[h, UMOVES] <= 0:
            return E_NO_MOVES
        nx = units[h, UX] + dxy[sub, 0]
        ny = units[h, UY] + dxy[sub, 1]
        if nx < 0 or nx >= size or ny < 0 or ny >= size:
            return E_OOB
        if occ[ny, nx] != OCC_EMPTY:
            return E_OCCUPIED
        trace[tlen, 0] = h
        trace[tlen, 1] = V_MOVE
        trace[tlen, 2] = units[h, UX]
        trace[tlen, 3] = units[h, UY]
        trace[tlen, 4] = nx
        trace[tlen, 5] = ny
        occ[units[h, UY], units[h, UX]] = OCC_EMPTY
        occ[ny, nx] = h
        units[h, UX] = nx
        units[h, UY] = ny
        units[h, UMOVES] -= 1
        return OK
    if sub < A_SUB_STAB:  # shoot
        if units[h, UACTED] != 0:
            return E_ACTED
        e = N_HEROES + (sub - A_SUB_SHOOT)
        if units[e, UHEALTH] <= 0:
            return E_TARGET_DEAD
        if _dist_sq(units, h, e) > ranges_sq[h]:
            return E_RANGE
        units[h, UACTED] = 1
        if line_blocked(occ, size, units[h, UX], units[h, UY], units[e, UX], units[e, UY]):
            ev[EV_CVR] += 1.0
            trace[tlen, 0] = h
            trace[tlen, 1] = V_SHOOT_COVER
            trace[tlen, 2] = e
            trace[tlen, 3] = 0
            trace[tlen, 4] = 0
            trace[tlen, 5] = 0
        else:
            hp = _deal_damage(units, occ, e, stats[h, SSHOTDMG])
            ev[EV_SHOT] += 1.0
            trace[tlen, 0] = h
            trace[tlen, 1] = V_SHOOT_HIT
            trace[tlen, 2] = e
            trace[tlen, 3] = stats[h, SSHOTDMG]
            trace[tlen, 4] = hp
            trace[tlen, 5] = 0
        return OK
    if sub < A_SUB_SHIELD:  # stab
        if units[h, UACTED] != 0:
            return E_ACTED
        e = N_HEROES + (sub - A_SUB_STAB)
        if units[e, UHEALTH] <= 0:
            return E_TARGET_DEAD
        if _chebyshev(units, h, e) != 1:
            return E_ADJACENCY
        units[h, UACTED] = 1
        hp = _deal_damage(units, occ, e, stats[h, SSTABDMG])
        ev[EV_STAB] += 1.0
        trace[tlen, 0] = h
        trace[tlen, 1] = V_STAB
        trace[tlen, 2] = e
        trace[tlen, 3] = stats[h, SSTABDMG]
        trace[tlen, 4] = hp
        trace[tlen, 5] = 0
        return OK
    if sub == A_SUB_SHIELD:
        if units[h, UACTED] != 0:
            return E_ACTED
        if (
            stats[h, SHASSHIELD] != 1
            or units[h, USHIELD] != 0
            or units[h, UCOOLDOWN] != 0
        ):
            return E_SHIELD
        units[h, UACTED] = 1
        units[h, USHIELD] = 1
        trace[tlen, 0] = h
        trace[tlen, 1] = V_SHIELD_ON
        trace[tlen, 2] = 0
        trace[tlen, 3] = 0
        trace[tlen, 4] = 0
        trace[tlen, 5] = 0
        return OK
    # pass: give up the action and any remaining movement
    if units[h, UACTED] != 0:
        return E_ACTED
    units[h, UACTED] = 1
    units[h, UMOVES] = 0
    trace[tlen, 0] = h
    trace[tlen, 1] = V_PASS
    trace[tlen, 2] = 0
    trace[tlen, 3] = 0
    trace[tlen, 4] = 0
    trace[tlen, 5] = 0
    return OK


# ---------------------------------------------------------- enemy phase --
@cython.cfunc
def _nearest_hero(units: cython.int[:, :], idx: cython.int) -> cython.int:
    """Nearest living hero; ties broken by lower health, then lower index."""
    best: cython.int = -1
    best_d: cython.int = 1 << 30
    best_hp: cython.int = 1 << 30
    h: cython.int
    d: cython.int
    for h in range(N_HEROES):
        if units[h, UHEALTH] <= 0:
            continue
        d = _dist_sq(units, idx, h)
        if d < best_d or (d == best_d and units[h, UHEALTH] < best_hp):
            best = h
            best_d = d
            best_hp = units[h, UHEALTH]
    return best


@cython.cfunc
def _nearest_visible_hero(
    units: cython.int[:, :],
    occ: cython.int[:, :],
    size: cython.int,
    ranges_sq: cython.double[:],
    idx: cython.int,
) -> cython.int:
    """Nearest living hero within shot range with a clear line, or -1."""
    best: cython.int = -1
    best_d: cython.int = 1 << 30
    best_hp: cython.int = 1 << 30
    h: cython.int
    d: cython.int
    for h in range(N_HEROES):
        if units[h, UHEALTH] <= 0:
            continue
        d = _dist_sq(units, idx, h)
        if d > ranges_sq[idx]:
            continue
        if line_blocked(occ, size, units[idx, UX], units[idx, UY], units[h, UX], units[h, UY]):
            continue
        if d < best_d or (d == best_d and units[h, UHEALTH] < best_hp):
            best = h
            best_d = d
            best_hp = units[h, UHEALTH]
    return best


@cython.cfunc
def _greedy_step(
    units: cython.int[:, :],
    occ: cython.int[:, :],
    size: cython.int,
    idx: cython.int,
    tx: cython.int,
    ty: cython.int,
    flee: cython.int,
) -> cython.int:
    """Direction index of the strictly improving step, or -1.

    Improvement is squared Euclidean distance to (tx, ty): smaller when
    approaching, larger when fleeing.  Ties break on canonical direction
    order.
    """
    dxy: cython.int[:, :] = _DXY
    cx: cython.int = units[idx, UX]
    cy: cython.int = units[idx, UY]
    cur: cython.int = (cx - tx) * (cx - tx) + (cy - ty) * (cy - ty)
    best: cython.int = -1
    best_d: cython.int = cur
    d: cython.int
    nx: cython.int
    ny: cython.int
    nd: cython.int
    for d in range(8):
        nx = cx + dxy[d, 0]
        ny = cy + dxy[d, 1]
        if nx < 0 or nx >= size or ny < 0 or ny >= size:
            continue
        if occ[ny, nx] != OCC_EMPTY:
            continue
        nd = (nx - tx) * (nx - tx) + (ny - ty) * (ny - ty)
        if flee == 1:
            if nd > best_d:
                best = d
                best_d = nd
        else:
            if nd < best_d:
                best = d
                best_d = nd
    return best


@cython.cfunc
def _move_unit(
    units: cython.int[:, :],
    occ: cython.int[:, :],
    idx: cython.int,
    d: cython.int,
    trace: cython.int[:, :],
    tlen: cython.int,
) -> cython.int:
    dxy: cython.int[:, :] = _DXY
    nx: cython.int = units[idx, UX] + dxy[d, 0]
    ny: cython.int = units[idx, UY] + dxy[d, 1]
    trace[tlen, 0] = idx
    trace[tlen, 1] = V_MOVE
    trace[tlen, 2] = units[idx, UX]
    trace[tlen, 3] = units[idx, UY]
    trace[tlen, 4] = nx
    trace[tlen, 5] = ny
    occ[units[idx, UY], units[idx, UX]] = OCC_EMPTY
    occ[ny, nx] = idx
    units[idx, UX] = nx
    units[idx, UY] = ny
    units[idx, UMOVES] -= 1
    return tlen + 1


@cython.cfunc
def _enemy_attack(
    units: cython.int[:, :],
    stats: cython.int[:, :],
    occ: cython.int[:, :],
    size: cython.int,
    idx: cython.int,
    target: cython.int,
    stab: cython.int,
    ev: cython.double[:],
    trace: cython.int[:, :],
    tlen: cython.int,
) -> cython.int:
    """Resolve one enemy attack (stab=1 melee, else shot). Returns trace len."""
    damage: cython.int
    hp: cython.int
    if stab == 0 and line_blocked(
        occ, size, units[idx, UX], units[idx, UY], units[target, UX], units[target, UY]
    ):
        trace[tlen, 0] = idx
        trace[tlen, 1] = V_SHOOT_BLOCKED
        trace[tlen, 2] = target
        trace[tlen, 3] = 0
        trace[tlen, 4] = 0
        trace[tlen, 5] = 0
        return tlen + 1
    if units[target, USHIELD] == 1:
        units[target, USHIELD] = 0
        units[target, UCOOLDOWN] = 2
        units[target, UFRESH] = 1
        ev[EV_SHLD] += 1.0
        trace[tlen, 0] = target
        trace[tlen, 1] = V_SHIELD_ABSORB
        trace[tlen, 2] = idx
        trace[tlen, 3] = stab
        trace[tlen, 4] = 0
        trace[tlen, 5] = 0
        return tlen + 1
    damage = stats[idx, SSTABDMG] if stab == 1 else stats[idx, SSHOTDMG]
    hp = _deal_damage(units, occ, target, damage)
    ev[EV_NMY] += 1.0
    trace[tlen, 0] = idx
    trace[tlen, 1] = V_STAB if stab == 1 else V_SHOOT_HIT
    trace[tlen, 2] = target
    trace[tlen, 3] = damage
    trace[tlen, 4] = hp
    trace[tlen, 5] = 0
    return tlen + 1


@cython.ccall
def enemy_act(
    units: cython.int[:, :],
    stats: cython.int[:, :],
    ranges_sq: cython.double[:],
    occ: cython.int[:, :],
    size: cython.int,
    idx: cython.int,
    kite_fraction: cython.double,
    ev: cython.double[:],
    trace: cython.int[:, :],
    tlen: cython.int,
) -> cython.int:
    """Run one enemy's scripted micro-turn; returns the new trace length.

    Behavior rules per kind:
      Brute   - advance toward the nearest hero while out of reach, then
                stab if adjacent else shoot if in range with a clear line.
      Archer  - retreat while closer than kite_fraction * shot range,
                advance while out of shot range, then shoot the nearest
                visible hero.
      Soldier - stab if adjacent; else advance to shot range and shoot if
                the line is clear, stabbing instead when adjacent.
    """
    if units[idx, UHEALTH] <= 0:
        return tlen
    target: cython.int = _nearest_hero(units, idx)
    if target < 0:
        return tlen
    kind: cython.int = stats[idx, SKIND]
    d: cython.int
    vis: cython.int
    d2: cython.double

    if kind == KIND_ARCHER:
        while units[idx, UMOVES] > 0:
            target = _nearest_hero(units, idx)
            d2 = _dist_sq(units, idx, target)
            if d2 < kite_fraction * kite_fraction * ranges_sq[idx]:
                d = _greedy_step(units, occ, size, idx, units[target, UX], units[target, UY], 1)
            elif d2 > ranges_sq[idx]:
                d = _greedy_step(units, occ, size, idx, units[target, UX], units[target, UY], 0)
            else:
                break
            if d < 0:
                break
            tlen = _move_unit(units, occ, idx, d, trace, tlen)
        vis = _nearest_visible_hero(units, occ, size, ranges_sq, idx)
        if vis >= 0:
            tlen = _enemy_attack(units, stats, occ, size, idx, vis, 0, ev, trace, tlen)
        return tlen

    if kind == KIND_SOLDIER and _chebyshev(units, idx, target) == 1:
        return _enemy_attack(units, stats, occ, size, idx, target, 1, ev, trace, tlen)

    # Brute and Soldier: close in until the target is attackable.
    while units[idx, UMOVES] > 0:
        target = _nearest_hero(units, idx)
        if _chebyshev(units, idx, target) == 1:
            break
        if _dist_sq(units, idx, target) <= ranges_sq[idx] and not line_blocked(
            occ, size, units[idx, UX], units[idx, UY], units[target, UX], units[target, UY]
        ):
            break
        d = _greedy_step(units, occ, size, idx, units[target, UX], units[target, UY], 0)
        if d < 0:
            break
        tlen = _move_unit(units, occ, idx, d, trace, tlen)
    target = _nearest_hero(units, idx)
    if _chebyshev(units, idx, target) == 1:
        return _enemy_attack(units, stats, occ, size, idx, target, 1, ev, trace, tlen)
    if _dist_sq(units, idx, target) <= ranges_sq[idx]:
        vis = _nearest_visible_hero(units, occ, size, ranges_sq, idx)
        if vis >= 0:
            return _enemy_attack(units, stats, occ, size, idx, vis, 0, ev, trace, tlen)
    return tlen


@cython.ccall
def run_enemy_phase(
    units: cython.int[:, :],
    stats: cython.int[:, :],
    ranges_sq: cython.double[:],
    occ: cython.int[:, :],
    size: cython.int,
    kite_fraction: cython.double,
    ev: cython.double[:],
    trace: cython.int[:, :],
    tlen: cython.int,
) -> cython.int:
    """All living enemies act in index order; returns the new trace length."""
    e: cython.int
    for e in range(N_HEROES, N_HEROES + N_ENEMIES):
        tlen = enemy_act(
            units, stats, ranges_sq, occ, size, e, kite_fraction, ev, trace, tlen
        )
    return tlen


@cython.ccall
def end_turn_bookkeeping(units: cython.int[:, :], stats: cython.int[:, :]):
    """Reset per-turn unit fields and tick shield cooldowns.

    A cooldown set this very turn (fresh flag) is not ticked, so a consumed
    shield stays unavailable for the two following turns.
    """
    i: cython.int
    for i in range(N_UNITS):
        units[i, UMOVES] = stats[i, SBUDGET]
        units[i, UACTED] = 0
        if units[i, UFRESH] == 1:
            units[i, UFRESH] = 0
        elif units[i, UCOOLDOWN] > 0:
            units[i, UCOOLDOWN] -= 1


@cython.ccall
def count_alive(units: cython.int[:, :], lo: cython.int, hi: cython.int) -> cython.int:
    n: cython.int = 0
    i: cython.int
    for i in range(lo, hi):
        if units[i, UHEALTH] > 0:
            n += 1
    return n
