import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_is_upset
from unionint.errors import DuplicateSet, ElementOutOfRange, NOutOfRange
from unionint.predicates import is_l_intersecting, is_st_union_intersecting, is_union_l_intersecting
from unionint.setcore import (
    Family,
    ProblemSpec,
    complement_family,
    compress_to_upset,
    family_from_json,
    family_to_json,
    is_upset,
    level,
    make_family,
    power_set,
    self_complementary_core,
)


@st.composite
def families(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    masks = draw(st.sets(st.integers(0, (1 << n) - 1)))
    return Family.from_masks(n, masks)


def test_make_family_encodes_bits():
    F = make_family(3, [[1], [1, 2]])
    assert F.n == 3
    assert F.members == (0b001, 0b011)
    assert F.to_lists() == [[1], [1, 2]]


def test_make_family_sorts_input():
    assert make_family(3, [[2, 3], [1]]).members == (0b001, 0b110)


def test_make_family_rejects_duplicates():
    with pytest.raises(DuplicateSet):
        make_family(3, [[1], [1]])


def test_make_family_rejects_out_of_range():
    with pytest.raises(ElementOutOfRange):
        make_family(2, [[3]])
    with pytest.raises(ElementOutOfRange):
        make_family(2, [[0]])


@pytest.mark.parametrize("n", [0, 31, -1])
def test_make_family_rejects_bad_n(n):
    with pytest.raises(NOutOfRange):
        make_family(n, [])


def test_level_examples():
    P = power_set(3)
    assert level(P, 2).to_lists() == [[1, 2], [1, 3], [2, 3]]
    assert len(level(Family(3), 1)) == 0
    F = make_family(3, [[1], [1, 2], [2, 3]])
    assert level(F, 2).to_lists() == [[1, 2], [2, 3]]


def test_complement_examples():
    assert complement_family(make_family(3, [[1]])).to_lists() == [[2, 3]]
    F = make_family(3, [[], [1, 2, 3]])
    assert complement_family(F) == F


def test_self_complementary_core_examples():
    F = make_family(3, [[1], [2, 3], [1, 2]])
    assert self_complementary_core(F).to_lists() == [[1], [2, 3]]
    assert self_complementary_core(power_set(4)) == power_set(4)


def test_is_upset_examples():
    assert is_upset(make_family(3, [[1, 2], [1, 2, 3]]))
    assert not is_upset(make_family(3, [[1]]))
    assert is_upset(Family(3))
    assert is_upset(power_set(3))


def test_compress_examples():
    assert compress_to_upset(make_family(2, [[1]])).to_lists() == [[1, 2]]
    up = make_family(3, [[1, 2], [1, 3], [1, 2, 3]])
    assert compress_to_upset(up) == up


def test_compress_pinned_output():
    # pinned by running the deterministic rule by hand:
    # {1}->{1,3}, then {2}->{2,3}, then {1,2}->{1,2,3}
    F = make_family(3, [[1], [2], [1, 2]])
    assert compress_to_upset(F).to_lists() == [[1, 3], [2, 3], [1, 2, 3]]


def test_json_round_trip_is_byte_identical(tmp_path):
    F = make_family(4, [[2, 3], [1], [1, 2, 3, 4]])
    text = family_to_json(F)
    assert text == '{"n": 4, "sets": [[1], [2, 3], [1, 2, 3, 4]]}\n'
    assert family_to_json(family_from_json(text)) == text


def test_json_rejects_unsorted_inner_lists():
    with pytest.raises(ValueError):
        family_from_json('{"n": 3, "sets": [[2, 1]]}')
    with pytest.raises(DuplicateSet):
        family_from_json('{"n": 3, "sets": [[1], [1]]}')


def test_problem_spec_normalises_s_t():
    spec = ProblemSpec.st(5, 3, 1)
    assert (spec.s, spec.t) == (1, 3)
    with pytest.raises(ValueError):
        ProblemSpec.st(2, 1, 1)
    with pytest.raises(ValueError):
        ProblemSpec.uniform(3, 4, 1, 1)


@given(families())
def test_complement_is_involution(F):
    G = complement_family(F)
    assert len(G) == len(F)
    assert complement_family(G) == F


@given(families())
def test_core_size_and_invariance(F):
    G = self_complementary_core(F)
    assert complement_family(G) == G
    assert len(G) >= 2 * len(F) - 2 ** F.n


@given(families())
def test_levels_partition(F):
    assert sum(len(level(F, i)) for i in range(F.n + 1)) == len(F)


@given(families())
def test_is_upset_matches_naive(F):
    assert is_upset(F) == naive_is_upset(F)


@given(families())
def test_json_round_trip(F):
    assert family_from_json(family_to_json(F)) == F


@given(families())
@settings(max_examples=200)
def test_compression_keeps_size_and_gives_upset(F):
    C = compress_to_upset(F)
    assert len(C) == len(F)
    assert is_upset(C)


def test_compression_preserves_predicates_seeded():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(3, 5)
        F = Family(n, tuple(m for m in range(1 << n) if rng.random() < rng.random()))
        C = compress_to_upset(F)
        for l in (1, 2, 3):
            if is_union_l_intersecting(F, l):
                assert is_union_l_intersecting(C, l)
            if is_l_intersecting(F, l):
                assert is_l_intersecting(C, l)
        for s in range(1, 5):
            for t in range(s, 6 - s):
                if is_st_union_intersecting(F, s, t):
                    assert is_st_union_intersecting(C, s, t)
