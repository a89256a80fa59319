from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bfshvs.bipolar import BipolarFuzzySet
from bfshvs.fixtures import parity_soft_set
from bfshvs.soft import (
    BipolarFuzzySoftSet,
    and_product,
    extended_intersection,
    family_union,
    intersection,
    is_subset,
    or_product,
    restricted_union,
    union,
)

half, seven = Fraction(1, 2), Fraction(7, 10)


@pytest.fixture
def F():
    return parity_soft_set()


def test_subset_reflexive(F):
    assert is_subset(F, F) == (True, None)


def test_restriction_is_subset(F):
    assert is_subset(F.restrict(["c"]), F.restrict(["c", "d"]))[0]


def test_subset_witness():
    big = BipolarFuzzySoftSet(2, {"c": BipolarFuzzySet.of([1, 0], [0, 0])})
    small = BipolarFuzzySoftSet(2, {"c": BipolarFuzzySet.of(["1/2", 0], [0, 0])})
    ok, w = is_subset(big, small)
    assert not ok and (w.param, w.element, w.component) == ("c", 0, "pos")


def test_subset_missing_param(F):
    ok, w = is_subset(F, F.restrict(["c"]))
    assert not ok and w.component == "param"


def test_intersection_examples(F):
    assert intersection(F, F) == F
    r = intersection(F.restrict("cd"), F.restrict("de"))
    assert r.params == ("d",) and r["d"] == F["d"]
    cd = intersection(F.restrict("c"), BipolarFuzzySoftSet(4, {"c": F["d"]}))
    assert cd["c"][0] == (half, Fraction(-2, 5))


def test_extended_intersection(F):
    assert extended_intersection(F, F) == F
    r = extended_intersection(F.restrict("c"), F.restrict("cd"))
    assert r == F.restrict("cd")
    disjoint = extended_intersection(F.restrict("c"), F.restrict("e"))
    assert disjoint == F.restrict("ce")


def test_union_examples(F):
    assert union(F, F) == F
    cd = union(F.restrict("c"), BipolarFuzzySoftSet(4, {"c": F["d"]}))
    assert cd["c"][0] == (seven, Fraction(-3, 5))
    assert union(F.restrict("c"), F.restrict("de")) == F


def test_restricted_union(F):
    assert restricted_union(F, F) == F
    assert len(restricted_union(F.restrict("c"), F.restrict("d"))) == 0
    assert restricted_union(F.restrict("cd"), F.restrict("de")) == F.restrict("d")


def test_and_or(F):
    A, B = F.restrict("cd"), F
    assert len(and_product(A, B)) == 6 and len(or_product(A, B)) == 6
    AND, OR = and_product(F, F), or_product(F, F)
    assert AND["c|d"][0] == (half, Fraction(-2, 5))
    assert OR["c|d"][0] == (seven, Fraction(-3, 5))
    assert AND["c|c"] == F["c"] and OR["c|c"] == F["c"]


def test_family_union(F):
    assert family_union([F]) == F
    assert family_union([F, F, F]) == F
    one = BipolarFuzzySoftSet(4, {"c": F["c"]})
    two = BipolarFuzzySoftSet(4, {"c": F["d"]})
    assert family_union([one, two]) == union(one, two)
    with pytest.raises(ValueError):
        family_union([])
    with pytest.raises(ValueError):
        family_union([F, F.restrict("c")])


def test_carrier_mismatch(F):
    other = BipolarFuzzySoftSet(2, {"c": BipolarFuzzySet.constant(2, 0, 0)})
    with pytest.raises(ValueError):
        intersection(F, other)


def test_immutable(F):
    with pytest.raises(AttributeError):
        F.size = 5


fracs = st.fractions(min_value=0, max_value=1, max_denominator=6)
negs = st.fractions(min_value=-1, max_value=0, max_denominator=6)
slices = st.builds(lambda p, n: BipolarFuzzySet.of(p, n), st.lists(fracs, min_size=3, max_size=3),
                   st.lists(negs, min_size=3, max_size=3))
softs = st.dictionaries(st.sampled_from("abc"), slices, max_size=3).map(lambda d: BipolarFuzzySoftSet(3, d))


@given(softs, softs)
def test_meet_below_join(F, G):
    assert is_subset(intersection(F, G), F)[0]
    assert is_subset(F, union(F, G))[0]


@given(softs, softs, softs)
def test_subset_transitive(F, G, H):
    if is_subset(F, G)[0] and is_subset(G, H)[0]:
        assert is_subset(F, H)[0]


@given(softs, softs)
def test_subset_antisymmetric(F, G):
    if is_subset(F, G)[0] and is_subset(G, F)[0]:
        assert F == G


@given(softs, softs)
def test_operations_commute(F, G):
    for op in (intersection, extended_intersection, union, restricted_union):
        assert op(F, G) == op(G, F)
