"""Constructive sunflower extraction by induction on the set size."""

from __future__ import annotations

from dataclasses import dataclass

from unionint.bounds import sunflower_threshold
from unionint.errors import NotUniform, ParamOutOfRange
from unionint.setcore import Family, SetMask, popcount


@dataclass(frozen=True)
class Sunflower:
    center: SetMask
    petals: Family


def _disjoint_greedy(masks: list[int]) -> list[int]:
    chosen, used = [], 0
    for m in masks:
        if m & used == 0:
            chosen.append(m)
            used |= m
    return chosen


def _extract(masks: list[int], r: int) -> tuple[int, list[int]] | None:
    # masks: distinct, equal size, ascending
    if not masks:
        return None
    if r == 1:
        return masks[0], [masks[0]]
    disjoint = _disjoint_greedy(masks)
    if len(disjoint) >= r:
        return 0, disjoint[:r]
    union = 0
    for m in disjoint:
        union |= m
    while union:
        low = union & -union
        union ^= low
        link = sorted(m ^ low for m in masks if m & low)
        if len(link) < r:
            continue
        found = _extract(link, r)
        if found is not None:
            center, petals = found
            return center | low, [p | low for p in petals]
    return None


def extract_sunflower(A: Family, r: int) -> Sunflower | None:
    """An r-petal sunflower inside the uniform family A, or None if none was found.

    Guaranteed to succeed when |A| > k!(r-1)^k.  Disjoint petals are picked
    greedily in mask order; otherwise each element x of the greedy union is
    tried in increasing order on the link {S - x : x in S}.
    """
    if r < 1:
        raise ParamOutOfRange(f"r must be >= 1, got {r}")
    if not A.is_uniform():
        raise NotUniform("extract_sunflower needs a uniform family")
    found = _extract(list(A.members), r)
    if found is None:
        return None
    center, petals = found
    return Sunflower(center, Family.from_masks(A.n, petals))


def guaranteed(A: Family, r: int) -> bool:
    """Whether |A| is above the size that forces an r-petal sunflower."""
    if not A.members:
        return False
    k = popcount(A.members[0])
    return len(A) > sunflower_threshold(k, r)
