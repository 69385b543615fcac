import random
from math import comb

import pytest

from unionint.constructions import construct_union_l_extremal
from unionint.errors import NoEdges, ParamOutOfRange, PreconditionFailed
from unionint.generators import random_t_intersecting, random_union_l_upset
from unionint.matching import (
    MatchingCertificate,
    disjointness_matching,
    hopcroft_karp,
    verify_katona_inequalities,
    verify_level_inequalities,
)
from unionint.setcore import Family, power_set


def test_matching_examples():
    c = disjointness_matching(3, 0, 1)
    assert c.pairs == ((0, 0b001),) and c.covered == "lower"
    c = disjointness_matching(5, 1, 3)
    assert len(c.pairs) == 5 and c.verify()
    with pytest.raises(NoEdges):
        disjointness_matching(4, 2, 3)
    with pytest.raises(ParamOutOfRange):
        disjointness_matching(4, 3, 1)


@pytest.mark.parametrize("n", range(0, 9))
def test_all_small_certificates(n):
    for i in range(n + 1):
        for j in range(i, n - i + 1):
            c = disjointness_matching(n, i, j)
            assert c.verify()
            assert len(c.pairs) == min(comb(n, i), comb(n, j))


def test_verify_detects_tampering():
    c = disjointness_matching(4, 1, 2)
    bad = MatchingCertificate(c.n, c.i, c.j, c.pairs[:-1], c.covered)
    assert not bad.verify()
    a, b = c.pairs[0]
    clash = MatchingCertificate(c.n, c.i, c.j, ((a, b | a),) + c.pairs[1:], c.covered)
    assert not clash.verify()


def test_hopcroft_karp_small_graph():
    # left 0 -> {0,1}, left 1 -> {0}: perfect matching needs 0->1
    assert hopcroft_karp([[0, 1], [0]], 2) == [1, 0]
    assert hopcroft_karp([[0], [0]], 1).count(-1) == 1


def test_level_examples():
    rep = verify_level_inequalities(construct_union_l_extremal(4, 2), 2)
    assert rep.passed
    with pytest.raises(PreconditionFailed):
        verify_level_inequalities(power_set(3), 1)
    assert verify_level_inequalities(Family(4), 1).passed


def test_katona_examples():
    F = Family(5, tuple(m for m in range(32) if bin(m).count("1") >= 3))
    assert verify_katona_inequalities(F, 1).passed
    star = Family(4, tuple(m for m in range(16) if m & 1))
    assert verify_katona_inequalities(star, 1).passed
    assert verify_katona_inequalities(Family(4), 1).passed
    with pytest.raises(PreconditionFailed):
        verify_katona_inequalities(Family(3, (1, 2)), 1)


def test_level_report_rows():
    rep = verify_level_inequalities(construct_union_l_extremal(5, 1), 1)
    assert [(r.i, r.j) for r in rep.rows] == [(0, 3), (1, 2)]
    assert rep.as_dict()["passed"] is True


def test_random_union_l_upsets_satisfy_inequalities():
    rng = random.Random(2)
    for _ in range(150):
        n = rng.randint(3, 5)
        l = rng.randint(1, 3)
        F = random_union_l_upset(n, l, rng)
        assert verify_level_inequalities(F, l).passed


def test_random_t_intersecting_satisfy_katona():
    rng = random.Random(4)
    for _ in range(300):
        n = rng.randint(3, 6)
        t = rng.randint(1, 3)
        F = random_t_intersecting(n, t, rng)
        assert verify_katona_inequalities(F, t).passed
