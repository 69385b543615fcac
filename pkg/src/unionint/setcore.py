"""Set families over a ground set [n] stored as integer bit masks.

Element ``p`` (1-based, as users write it) lives at bit ``p - 1``.  A
:class:`Family` keeps its members as a strictly increasing tuple of masks,
so two families are equal exactly when their tuples are equal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from unionint.errors import DuplicateSet, ElementOutOfRange, NOutOfRange, ParamOutOfRange

MAX_N = 30

# SetMask: a plain int whose bits at positions >= n are zero.
SetMask = int


def full_mask(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def mask_from_elements(n: int, elements: Iterable[int]) -> SetMask:
    mask = 0
    for e in elements:
        if not isinstance(e, int) or isinstance(e, bool) or not 1 <= e <= n:
            raise ElementOutOfRange(f"element {e!r} not in 1..{n}")
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask: SetMask) -> list[int]:
    out = []
    p = 1
    while mask:
        if mask & 1:
            out.append(p)
        mask >>= 1
        p += 1
    return out


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_N:
        raise NOutOfRange(f"n must be in 1..{MAX_N}, got {n!r}")


@dataclass(frozen=True)
class Family:
    """Duplicate-free family of subsets of [n], sorted by mask value."""

    n: int
    members: tuple[SetMask, ...] = ()

    def __post_init__(self):
        _check_n(self.n)
        limit = 1 << self.n
        prev = -1
        for m in self.members:
            if not 0 <= m < limit:
                raise ElementOutOfRange(f"mask {m:#x} has bits outside [{self.n}]")
            if m <= prev:
                if m == prev:
                    raise DuplicateSet(f"duplicate set {elements_of(m)}")
                raise ValueError("members must be strictly increasing; use Family.from_masks")
            prev = m

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[SetMask]) -> "Family":
        ms = sorted(masks)
        for a, b in zip(ms, ms[1:]):
            if a == b:
                raise DuplicateSet(f"duplicate set {elements_of(a)}")
        return cls(n, tuple(ms))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[SetMask]:
        return iter(self.members)

    def __contains__(self, mask: object) -> bool:
        return mask in self._lookup

    @property
    def _lookup(self) -> frozenset:
        # cached lazily; frozen dataclass so go through object.__setattr__
        try:
            return self.__dict__["_lookup_cache"]
        except KeyError:
            s = frozenset(self.members)
            object.__setattr__(self, "_lookup_cache", s)
            return s

    def to_lists(self) -> list[list[int]]:
        return [elements_of(m) for m in self.members]

    def with_masks(self, masks: Iterable[SetMask]) -> "Family":
        return Family.from_masks(self.n, masks)

    def is_uniform(self) -> bool:
        return len({popcount(m) for m in self.members}) <= 1

    def __repr__(self) -> str:
        return f"Family(n={self.n}, sets={self.to_lists()})"


def make_family(n: int, sets: Sequence[Sequence[int]]) -> Family:
    """Build a canonical family from 1-based element lists.

    Duplicate sets are an error, never merged.
    """
    _check_n(n)
    return Family.from_masks(n, (mask_from_elements(n, s) for s in sets))


def power_set(n: int) -> Family:
    return Family(n, tuple(range(1 << n)))


def k_subsets(n: int, k: int) -> list[SetMask]:
    """All k-subsets of [n] as masks, ascending by value."""
    if not 0 <= k <= n:
        return []
    masks = [sum(1 << p for p in c) for c in combinations(range(n), k)]
    masks.sort()
    return masks


def level(F: Family, i: int) -> Family:
    if not 0 <= i <= F.n:
        raise ParamOutOfRange(f"level {i} outside 0..{F.n}")
    return Family(F.n, tuple(m for m in F.members if popcount(m) == i))


def level_sizes(F: Family) -> list[int]:
    sizes = [0] * (F.n + 1)
    for m in F.members:
        sizes[popcount(m)] += 1
    return sizes


def complement_family(F: Family) -> Family:
    full = full_mask(F.n)
    return Family.from_masks(F.n, (full ^ m for m in F.members))


def self_complementary_core(F: Family) -> Family:
    """Members of F whose complement is also a member."""
    full = full_mask(F.n)
    present = F._lookup
    return Family(F.n, tuple(m for m in F.members if full ^ m in present))


def upset_closure(n: int, masks: Iterable[SetMask]) -> Family:
    """Smallest upset of subsets of [n] containing ``masks``."""
    full = full_mask(n)
    seen: set[int] = set()
    for m in masks:
        free = full & ~m
        sub = free
        while True:
            seen.add(m | sub)
            if sub == 0:
                break
            sub = (sub - 1) & free
    return Family.from_masks(n, seen)


def is_upset(F: Family) -> bool:
    present = F._lookup
    n = F.n
    for m in F.members:
        for p in range(n):
            bit = 1 << p
            if not m & bit and (m | bit) not in present:
                return False
    return True


def _first_violating_pair(n: int, members: list[int], present: set[int]) -> tuple[int, int] | None:
    # smallest |B - A| is always 1 when any violation exists; scan A ascending,
    # then B ascending among one-element extensions
    for a in members:
        for p in range(n):
            bit = 1 << p
            if not a & bit and (a | bit) not in present:
                return a, a | bit
    return None


def compress_to_upset(F: Family) -> Family:
    """Repeatedly replace a member A by a missing superset B until F is an upset.

    The pair chosen at each step minimises |B - A|, then the mask of A, then
    the mask of B.  Each step raises the total cardinality by one, so the
    loop stops after at most n*|F| steps.
    """
    members = sorted(F.members)
    present = set(members)
    while True:
        pair = _first_violating_pair(F.n, members, present)
        if pair is None:
            return Family(F.n, tuple(members))
        a, b = pair
        present.discard(a)
        present.add(b)
        members = sorted(present)


# --- problem parameters -----------------------------------------------------

UNION_L = "union-l"
ST = "st"
UNIFORM = "uniform"


@dataclass(frozen=True)
class ProblemSpec:
    """Parameter bundle naming one extremal problem.

    Use the constructors :meth:`union_l`, :meth:`st` and :meth:`uniform`;
    they validate the ranges and put ``s <= t``.
    """

    n: int
    regime: str
    l: int | None = None
    s: int | None = None
    t: int | None = None
    k: int | None = None

    @classmethod
    def union_l(cls, n: int, l: int) -> "ProblemSpec":
        if n < 3 or n > MAX_N:
            raise ParamOutOfRange(f"union-l problems need 3 <= n <= {MAX_N}, got n={n}")
        if l < 1:
            raise ParamOutOfRange(f"l must be positive, got {l}")
        return cls(n, UNION_L, l=l)

    @classmethod
    def st(cls, n: int, s: int, t: int) -> "ProblemSpec":
        if n < 3 or n > MAX_N:
            raise ParamOutOfRange(f"(s,t) problems need 3 <= n <= {MAX_N}, got n={n}")
        if s < 1 or t < 1:
            raise ParamOutOfRange(f"s and t must be positive, got s={s}, t={t}")
        s, t = min(s, t), max(s, t)
        return cls(n, ST, s=s, t=t)

    @classmethod
    def uniform(cls, n: int, k: int, s: int, t: int) -> "ProblemSpec":
        if not 1 <= k <= n <= MAX_N:
            raise ParamOutOfRange(f"uniform problems need 1 <= k <= n <= {MAX_N}, got n={n}, k={k}")
        if s < 1 or t < 1:
            raise ParamOutOfRange(f"s and t must be positive, got s={s}, t={t}")
        s, t = min(s, t), max(s, t)
        return cls(n, UNIFORM, s=s, t=t, k=k)

    def describe(self) -> str:
        if self.regime == UNION_L:
            return f"UnionL(n={self.n}, l={self.l})"
        if self.regime == ST:
            return f"ST(n={self.n}, s={self.s}, t={self.t})"
        return f"Uniform(n={self.n}, k={self.k}, s={self.s}, t={self.t})"

    def as_dict(self) -> dict:
        d = {"n": self.n, "regime": self.regime}
        for key in ("l", "s", "t", "k"):
            v = getattr(self, key)
            if v is not None:
                d[key] = v
        return d


# --- family file format -----------------------------------------------------


def family_to_json(F: Family) -> str:
    """Canonical text form: one JSON object, sets ordered by mask, newline-terminated."""
    return json.dumps({"n": F.n, "sets": F.to_lists()}) + "\n"


def family_to_obj(F: Family) -> dict:
    return {"n": F.n, "sets": F.to_lists()}


def family_from_obj(obj: object) -> Family:
    if not isinstance(obj, dict) or "n" not in obj or "sets" not in obj:
        raise ValueError("family document needs fields 'n' and 'sets'")
    n = obj["n"]
    sets = obj["sets"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("'n' must be an integer")
    if not isinstance(sets, list):
        raise ValueError("'sets' must be a list of lists")
    for s in sets:
        if not isinstance(s, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in s):
            raise ValueError("each set must be a list of integers")
        if any(b <= a for a, b in zip(s, s[1:])):
            raise ValueError(f"set {s} is not strictly increasing")
    return make_family(n, sets)


def family_from_json(text: str) -> Family:
    return family_from_obj(json.loads(text))


def read_family(path: str) -> Family:
    with open(path, encoding="utf-8") as fh:
        return family_from_json(fh.read())


def write_family(F: Family, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(family_to_json(F))
