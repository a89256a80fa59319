import pytest
from hypothesis import given, strategies as st

from bfshvs.algebra import (
    COMPAT,
    STRICT,
    AbelianGroup,
    FiniteField,
    HyperVectorSpace,
    MalformedInput,
    check_axioms,
    hyper_extend,
    members,
    set_negate,
    set_sum,
    to_mask,
    validate_abelian_group,
    validate_finite_field,
)
from bfshvs.harness import constructive_spaces, subgroups

from oracles import axiom_witnesses

Z4 = AbelianGroup.cyclic_product(4)
Z2SQ = AbelianGroup.cyclic_product(2, 2)


def test_masks_roundtrip():
    assert members(to_mask([3, 0, 2])) == (0, 2, 3)
    assert to_mask([]) == 0


def test_cyclic_tables():
    assert Z4.add[1][3] == 0 and Z4.add[2][3] == 1
    assert [Z4.neg(x) for x in range(4)] == [0, 3, 2, 1]
    assert Z2SQ.size == 4 and all(Z2SQ.add[x][x] == 0 for x in range(4))


def test_group_validation_rejects_non_group():
    bad = [[0, 1], [1, 1]]
    report = validate_abelian_group(bad)
    assert not report.ok and report.failures


def test_group_validation_shape_error():
    with pytest.raises(MalformedInput):
        validate_abelian_group([[0, 1], [1]])


def test_non_commutative_table_rejected():
    # S3-like table is not abelian; a Latin square that isn't symmetric will do
    t = [[0, 1, 2], [1, 0, 2], [2, 2, 0]]
    assert not validate_abelian_group(t).ok


def test_trivial_field_rejected():
    report = validate_finite_field([[0]], [[0]], one=0)
    assert not report.ok
    assert any("multiplicative-identity" in str(f) for f in report.failures)


def test_z4_is_not_a_field():
    mul = [[(a * b) % 4 for b in range(4)] for a in range(4)]
    assert not validate_finite_field(Z4.add, mul).ok


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_prime_fields_validate(p):
    K = FiniteField.prime(p)
    assert validate_finite_field(K.add, K.mul).ok
    assert all(K.add[a][K.neg(a)] == 0 for a in K.elements)


def test_set_ops():
    assert members(set_sum(to_mask([1]), to_mask([1, 2]), Z4)) == (2, 3)
    assert members(set_negate(to_mask([1, 2]), Z4)) == (2, 3)


def test_hyper_extend_empty_raises(z4):
    with pytest.raises((MalformedInput, ValueError)):
        hyper_extend(1, 0, z4)


def test_hyperop_cells_must_be_nonempty():
    K = FiniteField.prime(2)
    with pytest.raises(MalformedInput):
        HyperVectorSpace(K, Z4, ((1, 1, 1, 0), (2, 2, 4, 8)))


def test_hyperop_cells_inside_carrier():
    K = FiniteField.prime(2)
    with pytest.raises(MalformedInput):
        HyperVectorSpace(K, Z4, ((1, 1, 1, 1), (2, 2, 4, 16)))


def test_fixture_strict_audit(z4):
    report = check_axioms(z4, STRICT)
    assert report.verdicts == {"H1": False, "H2": True, "H3": False, "H4": True, "H5": True}
    assert {w.args for w in report.witnesses_for("H1")} == {(0, 1, 3), (0, 2, 2), (0, 3, 1)}
    assert len(report.witnesses_for("H3")) == 9
    assert not report.strongly_left and not report.strongly_right


def test_fixture_compat_audit(z4):
    report = check_axioms(z4, COMPAT)
    assert report.ok and not report.witnesses


def test_audit_matches_oracle_on_fixture(z4):
    report = check_axioms(z4, STRICT)
    expected, right, left = axiom_witnesses(z4)
    for ax, args in expected.items():
        assert {w.args for w in report.witnesses_for(ax)} == args
    assert (report.strongly_right, report.strongly_left) == (right, left)


@pytest.mark.parametrize("label,hvs", constructive_spaces(2, 4) + constructive_spaces(3, 3))
def test_constructive_spaces_match_oracle(label, hvs):
    report = check_axioms(hvs, STRICT)
    expected, right, left = axiom_witnesses(hvs)
    assert report.ok and not any(expected.values())
    assert report.strongly_right == right and report.strongly_left == left


def test_as_dict_is_plain(z4):
    d = check_axioms(z4, STRICT).as_dict()
    assert d["mode"] == "strict" and d["verdicts"]["H1"] is False


def test_subgroups_of_z2sq():
    # trivial, three lines, whole group
    assert len(subgroups(Z2SQ)) == 5


masks = st.integers(min_value=1, max_value=15)


@given(masks, masks)
def test_set_sum_commutes(s, t):
    assert set_sum(s, t, Z4) == set_sum(t, s, Z4)


@given(masks, masks, masks)
def test_set_sum_associates(s, t, u):
    assert set_sum(set_sum(s, t, Z4), u, Z4) == set_sum(s, set_sum(t, u, Z4), Z4)


@given(masks)
def test_set_negate_involution(s):
    assert set_negate(set_negate(s, Z2SQ), Z2SQ) == s


@given(masks, masks)
def test_set_sum_matches_python_sets(s, t):
    expected = {(x + y) % 4 for x in members(s) for y in members(t)}
    assert set(members(set_sum(s, t, Z4))) == expected
