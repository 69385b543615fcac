"""Seeded random families for property checks.

All functions take a :class:`random.Random` so callers control the seed.
"""

from __future__ import annotations

import random

from unionint.predicates import is_l_intersecting, is_union_l_intersecting
from unionint.setcore import Family, k_subsets, popcount, upset_closure


def random_family(n: int, rng: random.Random, density: float | None = None) -> Family:
    """Each subset of [n] joins independently with probability ``density`` (random if None)."""
    p = rng.random() if density is None else density
    return Family(n, tuple(m for m in range(1 << n) if rng.random() < p))


def random_uniform_family(n: int, k: int, size: int, rng: random.Random) -> Family:
    layer = k_subsets(n, k)
    if size > len(layer):
        raise ValueError(f"only {len(layer)} {k}-subsets of [{n}], asked for {size}")
    return Family.from_masks(n, rng.sample(layer, size))


def random_upset(n: int, rng: random.Random) -> Family:
    """Up-closure of a random handful of generators, biased toward larger sets."""
    count = rng.randint(0, n + 1)
    gens = []
    for _ in range(count):
        size = rng.choice(range(n // 2, n + 1)) if rng.random() < 0.75 else rng.randint(0, n)
        gens.append(sum(1 << p for p in rng.sample(range(n), size)))
    return upset_closure(n, gens)


def random_union_l_upset(n: int, l: int, rng: random.Random) -> Family:
    """A random upset that is union-l-intersecting.

    Starts from the empty upset and merges in the up-closure of random sets,
    keeping each merge only if the property survives; stops at a random point.
    """
    order = list(range(1 << n))
    rng.shuffle(order)
    stop = rng.randint(1, len(order))
    current: set[int] = set()
    for m in order[:stop]:
        if m in current:
            continue
        cand = set(upset_closure(n, [m]).members) | current
        F = Family.from_masks(n, cand)
        if is_union_l_intersecting(F, l):
            current = cand
    return Family.from_masks(n, current)


def random_t_intersecting(n: int, t: int, rng: random.Random) -> Family:
    """A random t-intersecting family grown greedily from a shuffled power set."""
    order = [m for m in range(1 << n) if popcount(m) >= t]
    rng.shuffle(order)
    stop = rng.randint(0, len(order))
    chosen: list[int] = []
    for m in order[:stop]:
        if all(popcount(m & x) >= t for x in chosen):
            chosen.append(m)
    F = Family.from_masks(n, chosen)
    assert is_l_intersecting(F, t)
    return F
