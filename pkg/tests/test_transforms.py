from fractions import Fraction

import pytest

from bfshvs.algebra import FiniteField, MalformedInput
from bfshvs.fixtures import times
from bfshvs.harness import total_space
from bfshvs.algebra import AbelianGroup
from bfshvs.transforms import FuzzySoftFunction, classify_map, image, preimage

IDENT = {"c": "c", "d": "d", "e": "e"}


def test_identity_is_good(z4):
    r = classify_map(times(1), z4, z4)
    assert r.additive and r.linear and r.good


def test_doubling_linear_not_good(z4):
    r = classify_map(times(2), z4, z4)
    assert r.additive and r.linear and not r.good
    assert r.good_witness is not None


def test_tripling_good(z4):
    assert classify_map(times(3), z4, z4).good


def test_non_additive(z4):
    r = classify_map((0, 1, 1, 0), z4, z4)
    assert not r.additive and r.additive_witness is not None


def test_field_mismatch(z4):
    other = total_space(FiniteField.prime(3), AbelianGroup.cyclic_product(3))
    with pytest.raises(MalformedInput):
        classify_map((0, 0, 0), other, z4)


def test_function_validates_codomain():
    with pytest.raises(MalformedInput):
        FuzzySoftFunction((0, 5), {}, 4)
    ff = FuzzySoftFunction([0, 1], {"b": "x", "a": "y"}, 2)
    assert list(ff.f) == ["a", "b"] and ff.domain_size == 2


def test_image_identity(psoft):
    assert image(FuzzySoftFunction(times(1), IDENT, 4), psoft) == psoft


def test_image_doubling(psoft):
    im = image(FuzzySoftFunction(times(2), IDENT, 4), psoft)
    assert im["c"][0] == (Fraction(1, 2), Fraction(-2, 5))
    assert im["c"][1] == (0, 0) and im["c"][3] == (0, 0)


def test_image_collapsing_params(psoft):
    im = image(FuzzySoftFunction(times(1), {"c": "u", "d": "u", "e": "e"}, 4), psoft)
    assert im.params == ("e", "u")
    assert im["u"].pos == tuple(max(a, b) for a, b in zip(psoft["c"].pos, psoft["d"].pos))
    assert im["u"].neg == tuple(min(a, b) for a, b in zip(psoft["c"].neg, psoft["d"].neg))


def test_image_domain_mismatch(psoft):
    with pytest.raises((MalformedInput, ValueError)):
        image(FuzzySoftFunction(times(1), {"c": "c"}, 4), psoft)


def test_preimage(psoft):
    assert preimage(FuzzySoftFunction(times(1), IDENT, 4), psoft) == psoft
    pre = preimage(FuzzySoftFunction(times(2), {"a": "c"}, 4), psoft)
    assert pre["a"].pos == tuple(psoft["c"].pos[2 * x % 4] for x in range(4))
    const = preimage(FuzzySoftFunction((0, 0, 0, 0), {"a": "d"}, 4), psoft)
    assert set(const["a"].pos) == {psoft["d"].pos[0]}


def test_preimage_outside_params(psoft):
    with pytest.raises((MalformedInput, ValueError, KeyError)):
        preimage(FuzzySoftFunction(times(1), {"a": "zz"}, 4), psoft)
