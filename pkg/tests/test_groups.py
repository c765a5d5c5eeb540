import random

import pytest

from core.errors import DocumentError, PreconditionError, ScopeError, ValidationError
from groups.characters import dual_group
from groups.finite_group import (
    cyclic,
    dihedral,
    from_table,
    group_from_name,
    invariant_factors,
    is_commutative_subset,
    klein,
    make_group,
    product,
    subgroup,
    subgroup_generated,
    symmetric,
)
from linalg.scalars import Cyclotomic


def test_cyclic_names_and_product():
    g = cyclic(4)
    assert g.names == ("r0", "r1", "r2", "r3")
    assert g.element("r3") * g.element("r2") == g.element("r1")
    assert g.element("r1").order == 4
    assert g.is_abelian()


def test_symmetric_three_is_not_abelian():
    s3 = symmetric(3)
    assert s3.order == 6
    a, b = s3.element("(12)"), s3.element("(23)")
    assert a * b != b * a
    assert a * a == s3.one
    assert (a * b).order == 3
    assert not s3.is_abelian()


def test_dihedral_and_klein():
    d4 = dihedral(4)
    assert d4.order == 8
    assert d4.exponent == 4
    assert not d4.is_abelian()
    v = klein()
    assert v.names == ("(r0,r0)", "(r0,r1)", "(r1,r0)", "(r1,r1)")
    assert v.exponent == 2


def test_make_group_dispatch():
    assert make_group("cyclic", 3).order == 3
    assert make_group("product", factors=[cyclic(2), cyclic(3)]).order == 6
    assert group_from_name("dihedral(3)").order == 6
    assert group_from_name("klein").order == 4


def test_infinite_and_oversize_groups_are_out_of_scope():
    with pytest.raises(ScopeError):
        make_group("infinite_cyclic")
    with pytest.raises(ScopeError):
        cyclic(65)
    with pytest.raises(PreconditionError):
        symmetric(5)


def test_table_validation():
    group = from_table(["e", "a"], [["e", "a"], ["a", "e"]])
    assert group.order == 2
    with pytest.raises(ValidationError):
        from_table(["e", "a"], [["e", "a"], ["a", "a"]])
    with pytest.raises(ValidationError):
        from_table(["e", "a"], [["e", "a"], ["a", "b"]])


def test_associativity_is_checked():
    # a Latin square with identity e that is not associative
    names = ["e", "a", "b", "c", "d"]
    table = [
        ["e", "a", "b", "c", "d"],
        ["a", "e", "c", "d", "b"],
        ["b", "d", "e", "a", "c"],
        ["c", "b", "d", "e", "a"],
        ["d", "c", "a", "b", "e"],
    ]
    with pytest.raises(ValidationError):
        from_table(names, table)


def test_subgroup_generated():
    s3 = symmetric(3)
    assert len(subgroup_generated([s3.element("(12)")])) == 2
    assert len(subgroup_generated([s3.element("(12)"), s3.element("(23)")])) == 6
    assert len(subgroup_generated([s3.element("(123)")])) == 3


def test_commutative_subset_witness():
    s3 = symmetric(3)
    ok, pair = is_commutative_subset([s3.one, s3.element("(12)"), s3.element("(23)")])
    assert not ok
    assert {pair[0].name, pair[1].name} == {"(12)", "(23)"}
    assert is_commutative_subset([s3.one, s3.element("(12)")]) == (True, None)


def test_subgroup_is_materialised_with_inherited_names():
    s3 = symmetric(3)
    sub, inclusion = subgroup(subgroup_generated([s3.element("(12)")]))
    assert sub.order == 2
    assert set(sub.names) == {"e", "(12)"}
    assert all(big.group is s3 for big in inclusion.values())
    with pytest.raises(PreconditionError):
        subgroup([s3.element("(12)"), s3.element("(23)")])


def test_invariant_factors_of_klein():
    factors = invariant_factors(klein())
    assert sorted(d for _, d in factors) == [2, 2]
    with pytest.raises(PreconditionError):
        invariant_factors(symmetric(3))


def test_dual_group_of_cyclic_four():
    dual = dual_group(cyclic(4))
    assert len(dual) == 4
    assert dual.verify()[0]
    chi = dual.generators[0]
    r1 = dual.group.element("r1")
    assert chi(r1) ** 4 == 1
    assert chi(r1) == Cyclotomic.zeta(4) or chi(r1) == Cyclotomic.zeta(4, 3)
    assert dual.trivial.is_trivial()
    assert (chi * chi * chi * chi).is_trivial()


def test_dual_group_values_of_klein_are_signs():
    dual = dual_group(klein())
    assert len(dual) == 4
    for chi in dual:
        assert all(v == 1 or v == -1 for v in chi.values())


def test_dual_group_needs_abelian_group():
    with pytest.raises(PreconditionError):
        dual_group(symmetric(3))


def test_trivial_group_has_one_character():
    dual = dual_group(cyclic(1))
    assert len(dual) == 1
    assert dual.trivial.name == "chi_0"


def test_unknown_group_name_is_a_document_error():
    with pytest.raises(DocumentError) as info:
        group_from_name("alternating(4)", "grading.group")
    assert info.value.exit_code == 1
    assert info.value.location == "grading.group"


@pytest.mark.parametrize("group", [cyclic(6), klein(), product(cyclic(2), cyclic(4))], ids=lambda g: g.label)
def test_characters_separate_elements(group):
    dual = dual_group(group)
    for g in group:
        if g.index == group.identity:
            continue
        assert any(chi(g) != 1 for chi in dual)


@pytest.mark.parametrize("group", [symmetric(3), dihedral(4), product(cyclic(2), cyclic(3))], ids=lambda g: g.label)
def test_generated_subgroups_are_closed_and_monotone(group):
    rng = random.Random(group.order)
    elements = list(group)
    for _ in range(30):
        small = rng.sample(elements, rng.randint(1, 3))
        large = small + rng.sample(elements, rng.randint(1, 2))
        generated = subgroup_generated(small)
        assert set(small) <= generated
        assert subgroup_generated(generated) == generated
        assert generated <= subgroup_generated(large)
