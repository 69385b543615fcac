"""Witness families that meet the bounds in :mod:`unionint.bounds` with equality.

The distinguished ("fixed") element is always element 1, i.e. bit 0.
"""

from __future__ import annotations

from typing import Sequence

from unionint.bounds import ak_bound, f_value
from unionint.errors import BadExtras, ParamOutOfRange
from unionint.setcore import Family, k_subsets, mask_from_elements, popcount

FIXED = 1  # bit of element 1


def _at_least(n: int, size: int) -> list[int]:
    return [m for m in range(1 << n) if popcount(m) >= size]


def construct_ak_family(n: int, k: int, l: int, i: int) -> Family:
    """k-subsets of [n] with at least l+i elements inside [l+2i]."""
    if not 1 <= l <= k <= n:
        raise ParamOutOfRange(f"need 1 <= l <= k <= n, got n={n}, k={k}, l={l}")
    if not 0 <= i <= (n - l) // 2:
        raise ParamOutOfRange(f"i={i} outside 0..{(n - l) // 2}")
    window = (1 << (l + 2 * i)) - 1
    return Family(n, tuple(m for m in k_subsets(n, k) if popcount(m & window) >= l + i))


def _best_ak_family(n: int, k: int, l: int) -> list[int]:
    if k < l:
        return []
    rep = ak_bound(n, k, l)
    return list(construct_ak_family(n, k, l, rep.argmax).members)


def construct_union_l_extremal(n: int, l: int) -> Family:
    if n < 3 or l < 1:
        raise ParamOutOfRange(f"need n >= 3 and l >= 1, got n={n}, l={l}")
    if l >= n + 3:
        raise ParamOutOfRange(f"l={l} >= n+3 is degenerate")
    if (n + l) % 2 == 0:
        return Family(n, tuple(_at_least(n, (n + l) // 2 - 1)))
    k = (n + l - 3) // 2
    return Family.from_masks(n, _at_least(n, (n + l - 1) // 2) + _best_ak_family(n, k, l))


def construct_st_extremal(n: int, s: int, t: int) -> Family:
    """Best construction known for (s,t); for s+t >= 5 it realises the lower bound."""
    if n < 3 or s < 1 or t < 1:
        raise ParamOutOfRange(f"need n >= 3 and s, t >= 1, got n={n}, s={s}, t={t}")
    s, t = min(s, t), max(s, t)
    if (s, t) == (1, 1):
        return Family(n, tuple(m for m in range(1 << n) if m & FIXED))
    if s == 1:
        # t >= 4 reuses the (1,3) family
        if n % 2 == 0:
            return Family(n, tuple(_at_least(n, n // 2)))
        mid = k_subsets(n, (n - 1) // 2)
        if (s, t) == (1, 2):
            mid = [m for m in mid if m & FIXED]
        else:
            mid = [m for m in mid if not m & FIXED]
        return Family.from_masks(n, _at_least(n, (n + 1) // 2) + mid)
    # (2,2) and every s >= 2, t >= 3
    return construct_union_l_extremal(n, 1)


def construct_uniform_star_plus(n: int, k: int, s: int, extras: Sequence[Sequence[int]] | None = None) -> Family:
    """All k-sets through element 1, plus s-1 further k-sets that avoid it.

    Default extras are the s-1 smallest such sets in mask (colex) order.
    """
    if not 1 <= k <= n:
        raise ParamOutOfRange(f"need 1 <= k <= n, got n={n}, k={k}")
    if s < 1:
        raise ParamOutOfRange(f"s must be >= 1, got {s}")
    layer = k_subsets(n, k)
    star = [m for m in layer if m & FIXED]
    if extras is None:
        avoid = [m for m in layer if not m & FIXED]
        if len(avoid) < s - 1:
            raise ParamOutOfRange(f"only {len(avoid)} k-sets avoid element 1, need {s - 1}")
        extra_masks = avoid[: s - 1]
    else:
        if len(extras) != s - 1:
            raise BadExtras(f"need exactly {s - 1} extra sets, got {len(extras)}")
        try:
            extra_masks = [mask_from_elements(n, e) for e in extras]
        except ValueError as exc:
            raise BadExtras(str(exc)) from exc
        for e, m in zip(extras, extra_masks):
            if len(e) != k or popcount(m) != k:
                raise BadExtras(f"extra set {list(e)} is not a {k}-set")
            if m & FIXED:
                raise BadExtras(f"extra set {list(e)} contains the fixed element 1")
        if len(set(extra_masks)) != len(extra_masks):
            raise BadExtras("extra sets contain duplicates")
    return Family.from_masks(n, star + extra_masks)


def construction_target(n: int, s: int, t: int) -> int:
    """Size the (s,t) construction is expected to reach (exact value or lower bound)."""
    return f_value(n, s, t).value
