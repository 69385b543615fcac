import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_l_intersecting, naive_pattern, naive_st, naive_union_l
from unionint.constructions import construct_ak_family, construct_st_extremal
from unionint.errors import ParamOutOfRange
from unionint.predicates import (
    PosetPattern,
    contains_pattern,
    find_l_violation,
    find_pattern,
    find_st_violation,
    find_union_l_violation,
    is_l_intersecting,
    is_st_union_intersecting,
    is_union_l_intersecting,
    sunflower_check,
)
from unionint.setcore import Family, make_family, power_set, self_complementary_core


@st.composite
def small_families(draw, min_n=1, max_n=4, max_size=10):
    n = draw(st.integers(min_n, max_n))
    masks = draw(st.sets(st.integers(0, (1 << n) - 1), max_size=max_size))
    return Family.from_masks(n, masks)


# --- examples -----------------------------------------------------------------


def test_l_intersecting_examples():
    assert is_l_intersecting(make_family(4, [[1, 2], [1, 3], [1, 4]]), 1)
    assert not is_l_intersecting(make_family(4, [[1, 2], [3, 4]]), 1)
    F1 = construct_ak_family(6, 3, 1, 1)
    assert is_l_intersecting(F1, 1)


def test_l_intersecting_counts_self_pairs():
    # a 1-set cannot be 2-intersecting with itself
    assert not is_l_intersecting(make_family(3, [[1]]), 2)
    assert is_l_intersecting(Family(3), 5)


def test_union_l_all_large_sets():
    F = Family(3, tuple(m for m in range(8) if bin(m).count("1") >= 2))
    assert is_union_l_intersecting(F, 3)


def test_union_l_four_two_sets_is_admissible():
    # every union of two distinct members has 3+ of the 4 points
    F = make_family(4, [[1, 2], [3, 4], [1, 3], [2, 4]])
    assert naive_union_l(F, 1)
    assert is_union_l_intersecting(F, 1)
    assert is_union_l_intersecting(F, 2)
    assert not is_union_l_intersecting(F, 3)


def test_union_l_violation_witness():
    F = make_family(4, [[1], [3], [1, 2], [3, 4], [1, 3], [2, 4]])
    w = find_union_l_violation(F, 1)
    assert w is not None
    f1, f2, g1, g2 = w
    assert f1 != f2 and g1 != g2
    assert (f1 | f2) & (g1 | g2) == 0
    assert w == (0b0001, 0b0011, 0b0100, 0b1100)


def test_union_l_vacuous_for_single_member():
    assert is_union_l_intersecting(make_family(3, [[1]]), 7)


def test_st_examples():
    star = Family(3, tuple(m for m in range(8) if m & 1))
    assert is_st_union_intersecting(star, 1, 1)
    assert not is_st_union_intersecting(make_family(4, [[1, 2], [3, 4], [1]]), 1, 1)
    F = make_family(6, [[1, 2], [1, 3], [1, 4], [1, 5], [1, 6], [2, 3]])
    assert is_st_union_intersecting(F, 2, 2)
    assert naive_st(F, 2, 2)


def test_st_vacuous_when_too_few_members():
    assert is_st_union_intersecting(make_family(3, [[1], [2]]), 1, 2)


def test_st_empty_set_counts_once():
    # {}, {1}, {2}: groups ({}), ({1},{2}) have disjoint unions
    F = make_family(3, [[], [1], [2]])
    assert not is_st_union_intersecting(F, 1, 2)
    # only two members besides the empty set cannot fill s + t = 4 slots disjointly
    assert is_st_union_intersecting(make_family(3, [[], [1, 2]]), 1, 1) is False
    assert is_st_union_intersecting(make_family(3, [[]]), 1, 1)


def test_pattern_examples():
    chain = make_family(3, [[1], [1, 2], [1, 2, 3]])
    assert contains_pattern(chain, PosetPattern(1, 2))
    anti = Family(4, tuple(m for m in range(16) if bin(m).count("1") == 2))
    for x, y in [(1, 1), (1, 2), (2, 1), (2, 2)]:
        assert not contains_pattern(anti, PosetPattern(x, y))
    F = make_family(4, [[1], [2], [1, 2, 3], [1, 2, 4]])
    assert contains_pattern(F, PosetPattern(2, 2))
    assert find_pattern(F, PosetPattern(2, 2)) == ((0b0001, 0b0010), (0b0111, 0b1011))


def test_pattern_requires_positive_sizes():
    with pytest.raises(ParamOutOfRange):
        PosetPattern(0, 1)


def test_sunflower_check_examples():
    r = sunflower_check(make_family(4, [[1, 2], [1, 3], [1, 4]]))
    assert r.is_sunflower and r.center == 0b0001
    r = sunflower_check(make_family(3, [[1], [2], [3]]))
    assert r.is_sunflower and r.center == 0
    assert not sunflower_check(make_family(3, [[1, 2], [2, 3], [1, 3]])).is_sunflower
    single = sunflower_check(make_family(3, [[1, 3]]))
    assert single.is_sunflower and single.center == 0b101
    with pytest.raises(ParamOutOfRange):
        sunflower_check(Family(3))


# --- agreement with naive oracles -------------------------------------------


@given(small_families(), st.integers(1, 3))
def test_l_matches_naive(F, l):
    assert is_l_intersecting(F, l) == naive_l_intersecting(F, l)
    w = find_l_violation(F, l)
    if w is not None:
        assert bin(w[0] & w[1]).count("1") < l


@given(small_families(max_size=8), st.integers(1, 3))
@settings(max_examples=150)
def test_union_l_matches_naive(F, l):
    assert is_union_l_intersecting(F, l) == naive_union_l(F, l)


@given(small_families(max_n=5, max_size=9), st.integers(1, 3), st.integers(1, 3))
@settings(max_examples=300)
def test_st_matches_naive(F, s, t):
    expected = naive_st(F, s, t)
    assert is_st_union_intersecting(F, s, t) == expected
    w = find_st_violation(F, s, t)
    assert (w is None) == expected
    if w is not None:
        S, T = w
        assert len(S) == s and len(T) == t
        assert len(set(S) | set(T)) == s + t
        us = ut = 0
        for m in S:
            us |= m
        for m in T:
            ut |= m
        assert us & ut == 0


def test_st_both_methods_agree():
    # large n routes to the group method, small n to the counting method
    from unionint.predicates import _st_violation_by_counts, _st_violation_by_groups

    rng = random.Random(3)
    for _ in range(400):
        n = rng.randint(1, 6)
        F = Family(n, tuple(m for m in range(1 << n) if rng.random() < 0.3))
        for s, t in [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)]:
            a = _st_violation_by_counts(F, s, t) is None if len(F) >= s + t else True
            b = _st_violation_by_groups(F, s, t) is None if len(F) >= s + t else True
            assert a == b


def test_st_large_n_group_route():
    F = make_family(30, [[1, 2], [1, 30], [29, 30], [3, 4]])
    assert not is_st_union_intersecting(F, 1, 1)
    assert is_st_union_intersecting(make_family(30, [[1, 2], [1, 30], [1, 29]]), 1, 2)


@given(small_families(max_size=7), st.integers(1, 2), st.integers(1, 2))
def test_pattern_matches_naive(F, x, y):
    assert contains_pattern(F, PosetPattern(x, y)) == naive_pattern(F, x, y)


# --- structural properties --------------------------------------------------


@given(small_families(max_n=4, max_size=9), st.data())
@settings(max_examples=150)
def test_predicates_are_downward_closed(F, data):
    if not F.members:
        return
    drop = data.draw(st.sampled_from(F.members))
    G = Family(F.n, tuple(m for m in F.members if m != drop))
    for l in (1, 2):
        if is_l_intersecting(F, l):
            assert is_l_intersecting(G, l)
        if is_union_l_intersecting(F, l):
            assert is_union_l_intersecting(G, l)
    for s, t in [(1, 1), (1, 2), (2, 2)]:
        if is_st_union_intersecting(F, s, t):
            assert is_st_union_intersecting(G, s, t)


@given(small_families(max_n=4, max_size=10), st.integers(2, 4))
def test_union_l_monotone_in_l(F, l):
    if is_union_l_intersecting(F, l):
        assert is_union_l_intersecting(F, l - 1)


@given(small_families(max_n=5, max_size=10), st.integers(1, 3), st.integers(1, 3))
def test_st_symmetric(F, s, t):
    assert is_st_union_intersecting(F, s, t) == is_st_union_intersecting(F, t, s)


@given(small_families(max_n=4, max_size=10))
def test_union_1_implies_22(F):
    if is_union_l_intersecting(F, 1):
        assert is_st_union_intersecting(F, 2, 2)


def _admissible_sample(rng, n, s, t):
    """Random subfamily of a known admissible family, plus a few random extras."""
    base = list(construct_st_extremal(n, s, t).members)
    keep = [m for m in base if rng.random() < 0.8]
    extra = [m for m in range(1 << n) if rng.random() < 0.1]
    return Family.from_masks(n, set(keep) | set(extra))


def test_core_is_pattern_free():
    rng = random.Random(11)
    checked = 0
    for _ in range(600):
        n = rng.randint(3, 5)
        s = rng.randint(1, 2)
        t = rng.randint(s, 3)
        F = _admissible_sample(rng, n, s, t)
        if not is_st_union_intersecting(F, s, t):
            continue
        checked += 1
        G = self_complementary_core(F)
        assert not contains_pattern(G, PosetPattern(s, t))
    assert checked > 100


def test_full_power_set_not_intersecting():
    P = power_set(3)
    assert not is_union_l_intersecting(P, 1)
    assert not is_st_union_intersecting(P, 1, 1)
