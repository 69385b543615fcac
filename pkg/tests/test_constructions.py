import pytest

from unionint.bounds import ak_bound, f_value, union_l_upper_bound, uniform_upper_bound
from unionint.constructions import (
    construct_ak_family,
    construct_st_extremal,
    construct_uniform_star_plus,
    construct_union_l_extremal,
    construction_target,
)
from unionint.errors import BadExtras, ParamOutOfRange
from unionint.predicates import is_l_intersecting, is_st_union_intersecting, is_union_l_intersecting
from unionint.setcore import make_family


def test_ak_family_examples():
    star = construct_ak_family(6, 2, 1, 0)
    assert len(star) == 5 and all(m & 1 for m in star.members)
    assert construct_ak_family(6, 2, 1, 1).to_lists() == [[1, 2], [1, 3], [2, 3]]


@pytest.mark.parametrize("n,k,l", [(6, 3, 1), (7, 3, 1), (8, 4, 2), (9, 5, 2), (8, 3, 1)])
def test_ak_families_are_intersecting_and_sized(n, k, l):
    rep = ak_bound(n, k, l)
    for i in range((n - l) // 2 + 1):
        F = construct_ak_family(n, k, l, i)
        assert is_l_intersecting(F, l)
        assert len(F) <= rep.value
    assert len(construct_ak_family(n, k, l, rep.argmax)) == rep.value


def test_union_l_examples():
    F = construct_union_l_extremal(3, 1)
    assert len(F) == 7
    F = construct_union_l_extremal(4, 1)
    assert len(F) == 12 and [1] in F.to_lists()
    assert len(construct_union_l_extremal(3, 2)) == 4


@pytest.mark.parametrize("n", [3, 4, 5, 6])
@pytest.mark.parametrize("l", [1, 2, 3])
def test_union_l_tight(n, l):
    F = construct_union_l_extremal(n, l)
    assert len(F) == union_l_upper_bound(n, l).value
    assert is_union_l_intersecting(F, l)


def test_st_examples():
    assert construct_st_extremal(3, 1, 1).to_lists() == [[1], [1, 2], [1, 3], [1, 2, 3]]
    F = construct_st_extremal(5, 1, 3)
    assert len(F) == 22
    pairs = [s for s in F.to_lists() if len(s) == 2]
    assert pairs == sorted([[a, b] for a in range(2, 6) for b in range(a + 1, 6)], key=lambda s: (1 << (s[0] - 1)) | (1 << (s[1] - 1)))
    F = construct_st_extremal(4, 2, 2)
    assert len(F) == 12 and [1] in F.to_lists()


@pytest.mark.parametrize("n", [3, 4, 5, 6])
@pytest.mark.parametrize("s,t", [(1, 1), (1, 2), (2, 2), (1, 3), (1, 4), (2, 3)])
def test_st_constructions_meet_target(n, s, t):
    F = construct_st_extremal(n, s, t)
    assert len(F) == construction_target(n, s, t) == f_value(n, s, t).value
    assert is_st_union_intersecting(F, s, t)


def test_uniform_star_plus_examples():
    F = construct_uniform_star_plus(6, 2, 2)
    assert len(F) == 6 and [2, 3] in F.to_lists()
    assert is_st_union_intersecting(F, 2, 2)
    assert len(construct_uniform_star_plus(8, 3, 1)) == 21
    F = construct_uniform_star_plus(5, 2, 3)
    assert [s for s in F.to_lists() if 1 not in s] == [[2, 3], [2, 4]]
    assert len(F) == uniform_upper_bound(5, 2, 3).value


def test_uniform_star_plus_explicit_extras():
    F = construct_uniform_star_plus(6, 2, 2, extras=[[4, 5]])
    assert [4, 5] in F.to_lists()


@pytest.mark.parametrize("extras", [[[1, 2]], [[2, 3, 4]], [[2, 9]], [[2, 3], [2, 4]], []])
def test_uniform_star_plus_bad_extras(extras):
    with pytest.raises(BadExtras):
        construct_uniform_star_plus(6, 2, 2, extras=extras)


def test_parameter_errors():
    with pytest.raises(ParamOutOfRange):
        construct_st_extremal(2, 1, 1)
    with pytest.raises(ParamOutOfRange):
        construct_ak_family(6, 2, 3, 0)
    with pytest.raises(ParamOutOfRange):
        construct_union_l_extremal(3, 6)


def test_make_family_equivalence():
    assert construct_st_extremal(3, 1, 1) == make_family(3, [[1], [1, 2], [1, 3], [1, 2, 3]])
