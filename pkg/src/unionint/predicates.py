"""Decision procedures for the intersection properties of set families.

Every ``is_*`` predicate has a ``find_*`` twin returning the first violating
configuration (or ``None``); the boolean form is just ``find_* is None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from unionint.errors import ParamOutOfRange
from unionint.setcore import Family, SetMask, full_mask, popcount


@dataclass(frozen=True)
class PosetPattern:
    """The two-level poset K_xy: x bottom elements, each below all y top elements."""

    x: int
    y: int

    def __post_init__(self):
        if self.x < 1 or self.y < 1:
            raise ParamOutOfRange(f"K_xy needs x, y >= 1, got ({self.x}, {self.y})")


@dataclass(frozen=True)
class SunflowerCheck:
    center: SetMask
    is_sunflower: bool


def _positive(name: str, v: int) -> None:
    if v < 1:
        raise ParamOutOfRange(f"{name} must be >= 1, got {v}")


# --- l-intersecting ---------------------------------------------------------


def find_l_violation(F: Family, l: int) -> tuple[SetMask, SetMask] | None:
    """First pair (A, B), possibly A == B, with |A & B| < l."""
    _positive("l", l)
    ms = F.members
    for i, a in enumerate(ms):
        for b in ms[i:]:
            if popcount(a & b) < l:
                return a, b
    return None


def is_l_intersecting(F: Family, l: int) -> bool:
    return find_l_violation(F, l) is None


# --- union-l-intersecting ---------------------------------------------------


def _pair_unions(members: tuple[int, ...]) -> dict[int, tuple[int, int]]:
    unions: dict[int, tuple[int, int]] = {}
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            unions.setdefault(a | b, (a, b))
    return unions


def find_union_l_violation(F: Family, l: int) -> tuple[SetMask, SetMask, SetMask, SetMask] | None:
    """First (F1, F2, G1, G2) with F1 != F2, G1 != G2 and |(F1|F2) & (G1|G2)| < l.

    The two pairs may share members or coincide.
    """
    _positive("l", l)
    unions = _pair_unions(F.members)
    keys = sorted(unions)
    for i, u in enumerate(keys):
        for v in keys[i:]:
            if popcount(u & v) < l:
                return unions[u] + unions[v]
    return None


def is_union_l_intersecting(F: Family, l: int) -> bool:
    return find_union_l_violation(F, l) is None


# --- (s,t)-union-intersecting -----------------------------------------------
#
# A violation is a pair of disjoint member groups S (size s) and T (size t)
# with union(S) & union(T) empty.  Put u = union(S): then S sits inside u and
# T inside the complement of u.  Conversely any u with enough members below u
# and below ~u yields a violation; the empty set is the only member that can
# lie below both, which is what the "- has_empty" term accounts for.


def _subset_counts(n: int, members: tuple[int, ...]) -> list[int]:
    c = [0] * (1 << n)
    for m in members:
        c[m] += 1
    for p in range(n):
        bit = 1 << p
        for u in range(1 << n):
            if u & bit:
                c[u] += c[u ^ bit]
    return c


def _pick_groups(members, u: int, comp: int, s: int, t: int):
    below_u = [m for m in members if m & ~u == 0]
    below_c = [m for m in members if m & ~comp == 0]
    # keep the empty set (if present) for S only when S cannot do without it
    nonempty_u = [m for m in below_u if m]
    group_s = nonempty_u[:s] if len(nonempty_u) >= s else below_u[:s]
    taken = set(group_s)
    group_t = [m for m in below_c if m not in taken][:t]
    return tuple(group_s), tuple(group_t)


def _st_violation_by_counts(F: Family, s: int, t: int):
    n = F.n
    full = full_mask(n)
    c = _subset_counts(n, F.members)
    e = 1 if F.members and F.members[0] == 0 else 0
    for u in range(1 << n):
        a = c[u]
        if a < s:
            continue
        b = c[full ^ u]
        if b >= t and a + b - e >= s + t:
            return _pick_groups(F.members, u, full ^ u, s, t)
    return None


def _st_violation_by_groups(F: Family, s: int, t: int):
    members = F.members
    for group in combinations(members, s):
        u = 0
        for m in group:
            u |= m
        chosen = set(group)
        rest = [m for m in members if m & u == 0 and m not in chosen]
        if len(rest) >= t:
            return tuple(group), tuple(rest[:t])
    return None


def find_st_violation(F: Family, s: int, t: int) -> tuple[tuple[SetMask, ...], tuple[SetMask, ...]] | None:
    """First pair of disjoint groups (S, T), |S| = s, |T| = t, whose unions are disjoint."""
    _positive("s", s)
    _positive("t", t)
    m = len(F)
    if m < s + t:
        return None
    n = F.n
    # pick whichever exact method is cheaper for this shape of input
    cost_counts = (n + 1) << n
    cost_groups = comb(m, min(s, t)) * m
    if s > t:
        swapped = _st_violation_by_groups(F, t, s) if cost_groups < cost_counts else _st_violation_by_counts(F, t, s)
        return None if swapped is None else (swapped[1], swapped[0])
    if cost_groups < cost_counts:
        return _st_violation_by_groups(F, s, t)
    return _st_violation_by_counts(F, s, t)


def is_st_union_intersecting(F: Family, s: int, t: int) -> bool:
    return find_st_violation(F, s, t) is None


# --- K_xy containment -------------------------------------------------------


def find_pattern(F: Family, P: PosetPattern) -> tuple[tuple[SetMask, ...], tuple[SetMask, ...]] | None:
    """Distinct members A_1..A_x, B_1..B_y with every A_i a subset of every B_j."""
    x, y = P.x, P.y
    ms = F.members
    if len(ms) < x + y:
        return None
    # an upper set needs at least x proper subsets in F
    below = {b: [a for a in ms if a != b and a & ~b == 0] for b in ms}
    tops = [b for b in ms if len(below[b]) >= x]
    for group in combinations(tops, y):
        meet = full_mask(F.n)
        for b in group:
            meet &= b
        chosen = set(group)
        bottoms = [a for a in ms if a & ~meet == 0 and a not in chosen]
        if len(bottoms) >= x:
            return tuple(bottoms[:x]), tuple(group)
    return None


def contains_pattern(F: Family, P: PosetPattern) -> bool:
    return find_pattern(F, P) is not None


# --- sunflowers -------------------------------------------------------------


def sunflower_check(sets: Family) -> SunflowerCheck:
    """Whether all pairwise intersections agree; a single set is its own center."""
    ms = sets.members
    if not ms:
        raise ParamOutOfRange("sunflower_check needs at least one set")
    if len(ms) == 1:
        return SunflowerCheck(ms[0], True)
    center = ms[0] & ms[1]
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            if a & b != center:
                return SunflowerCheck(0, False)
    return SunflowerCheck(center, True)
