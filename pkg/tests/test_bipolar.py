from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bfshvs.algebra import AbelianGroup
from bfshvs.bipolar import BipolarFuzzySet, bfs_negate, bfs_pointwise, degree, join, meet, validate_bfs
from bfshvs.fixtures import parity_bfs

Z4 = AbelianGroup.cyclic_product(4)


def test_degree_parsing_is_exact():
    assert degree("0.3") == Fraction(3, 10)
    assert degree("-2/5") == Fraction(-2, 5)
    with pytest.raises((TypeError, ValueError)):
        degree(0.3)


def test_extremes_validate():
    assert validate_bfs(BipolarFuzzySet.constant(4, 1, -1)).ok


def test_parity_bfs_validates():
    assert validate_bfs(parity_bfs()).ok


def test_out_of_range_witness():
    b = BipolarFuzzySet.of(["3/2", 0], [0, 0])
    report = validate_bfs(b)
    assert not report.ok
    assert (0, "pos", Fraction(3, 2)) in [tuple(f) for f in report.failures]


def test_negate_class_constant_unchanged():
    b = parity_bfs()
    assert bfs_negate(b, Z4) == b


def test_negate_moves_delta():
    b = BipolarFuzzySet.of([0, 1, 0, 0], [0, 0, 0, 0])
    assert bfs_negate(b, Z4).pos == tuple(map(Fraction, (0, 0, 0, 1)))


def test_pointwise_examples():
    a = BipolarFuzzySet.constant(4, "1/2", "-2/5")
    b = BipolarFuzzySet.constant(4, "3/10", "-1/5")
    assert set(bfs_pointwise("min", "pos", a, b).pos) == {Fraction(3, 10)}
    assert set(bfs_pointwise("max", "neg", a, b).neg) == {Fraction(-1, 5)}
    assert bfs_pointwise("min", "pos", a, a) == a


fracs = st.fractions(min_value=0, max_value=1, max_denominator=12)
negs = st.fractions(min_value=-1, max_value=0, max_denominator=12)
bfs = st.builds(lambda p, n: BipolarFuzzySet.of(p, n), st.lists(fracs, min_size=4, max_size=4),
                st.lists(negs, min_size=4, max_size=4))


@given(bfs)
def test_negate_involution(b):
    assert bfs_negate(bfs_negate(b, Z4), Z4) == b


@given(bfs, bfs)
def test_meet_join_commute(a, b):
    assert meet(a, b) == meet(b, a) and join(a, b) == join(b, a)


@given(bfs, bfs)
def test_absorption(a, b):
    assert meet(a, join(a, b)) == a and join(a, meet(a, b)) == a


@given(bfs, bfs, bfs)
def test_meet_associates(a, b, c):
    assert meet(meet(a, b), c) == meet(a, meet(b, c))
