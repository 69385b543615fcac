"""Deliberately naive reference implementations, independent of the package code paths."""

from itertools import combinations

from unionint.setcore import Family


def subsets_of(n):
    return list(range(1 << n))


def naive_l_intersecting(F, l):
    return all(bin(a & b).count("1") >= l for a in F for b in F)


def naive_union_l(F, l):
    ms = list(F)
    for f1 in ms:
        for f2 in ms:
            if f1 == f2:
                continue
            for g1 in ms:
                for g2 in ms:
                    if g1 == g2:
                        continue
                    if bin((f1 | f2) & (g1 | g2)).count("1") < l:
                        return False
    return True


def naive_st(F, s, t):
    ms = list(F)
    for S in combinations(ms, s):
        rest = [m for m in ms if m not in S]
        us = 0
        for m in S:
            us |= m
        for T in combinations(rest, t):
            ut = 0
            for m in T:
                ut |= m
            if us & ut == 0:
                return False
    return True


def naive_pattern(F, x, y):
    ms = list(F)
    for A in combinations(ms, x):
        rest = [m for m in ms if m not in A]
        for B in combinations(rest, y):
            if all(a & ~b == 0 for a in A for b in B):
                return True
    return False


def naive_is_upset(F):
    s = set(F)
    n = F.n
    return all(b in s for a in F for b in range(1 << n) if a & ~b == 0)


def naive_max(n, pred):
    """Max |F| over every family of subsets of [n] (2^(2^n) families)."""
    best, arg = -1, None
    subsets = subsets_of(n)
    for code in range(1 << len(subsets)):
        if bin(code).count("1") <= best:
            continue
        ms = tuple(m for i, m in enumerate(subsets) if code >> i & 1)
        F = Family(n, ms)
        if pred(F):
            best, arg = len(F), F
    return best, arg
