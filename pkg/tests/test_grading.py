import pytest

from catalog.algebras import sl2
from catalog.fixtures import catalog_names, fixture
from core.errors import InvariantViolation, PreconditionError, ValidationError
from grading.certificates import check_lemma1, check_lemma2, check_lemma2_all
from grading.grading import (
    basis_names,
    centralizer_is_graded,
    chain_product,
    graded_ideal_generated,
    is_graded_subspace,
    quotient_grading,
    restrict,
    trivial_grading,
    validate,
)
from grading.simplicity import is_graded_simple
from groups.finite_group import cyclic, symmetric
from lie.killing import is_semisimple
from structure.levi import radical_gradedness


def names(elements):
    return [g.name for g in elements]


def test_validate_reports_the_stray_component():
    with pytest.raises(ValidationError) as info:
        validate(sl2(), cyclic(2), {"e": "r1", "f": "r0", "h": "r0"})
    witness = info.value.witness
    assert witness["expected_degree"] == "r1"
    assert witness["stray"] == "h"


def test_validate_needs_every_basis_vector():
    with pytest.raises(PreconditionError):
        validate(sl2(), cyclic(2), {"e": "r1", "f": "r1"})
    with pytest.raises(PreconditionError):
        validate(sl2(), cyclic(2), {"e": "r1", "f": "r1", "h": "r0", "x": "r0"})
    with pytest.raises(PreconditionError):
        validate(sl2(), cyclic(2), {"e": "r1", "f": "r1", "h": "r5"})


def test_supports(sl2_z2, dihedral):
    assert names(sl2_z2.grading.support()) == ["r0", "r1"]
    assert sl2_z2.grading.support_is_commutative() == (True, None)
    assert names(dihedral.grading.support()) == ["e", "(23)", "(12)"]
    ok, pair = dihedral.grading.support_is_commutative()
    assert not ok
    assert set(names(pair)) == {"(12)", "(23)"}
    assert len(dihedral.grading.generated_support_subgroup()) == 6


def test_pauli_grading_support():
    gr = fixture("pauli_grading_sl2").grading
    assert names(gr.support()) == ["(r0,r1)", "(r1,r0)", "(r1,r1)"]
    assert all(len(gr.fiber_indices(g)) == 1 for g in gr.support())


def test_fibers_and_projection(sl2_z2):
    gr = sl2_z2.grading
    r0, r1 = gr.group.element("r0"), gr.group.element("r1")
    assert gr.fiber(r1).dim == 2
    assert gr.project((1, 2, 3), r0) == (0, 0, 3)
    assert set(gr.components((1, 0, 3))) == {r0, r1}
    assert gr.degree_of((1, 5, 0)) == r1
    assert gr.degree_of((1, 0, 1)) is None
    assert gr.is_homogeneous((0, 0, 0))


def test_graded_subspace_detection(sl2_z2):
    gr = sl2_z2.grading
    algebra = gr.algebra
    ok, decomposition = is_graded_subspace(algebra.span([(1, 0, 0), (0, 0, 1)]), gr)
    assert ok
    assert names(decomposition.support()) == ["r0", "r1"]
    assert [g.name for _, g in decomposition.homogeneous_basis()] == ["r0", "r1"]
    assert is_graded_subspace(algebra.span([(1, 0, 1)]), gr) == (False, None)


def test_chain_products_in_the_dihedral_grading(dihedral):
    gr = dihedral.grading
    g, h = gr.group.element("(12)"), gr.group.element("(23)")
    assert chain_product(gr, [g, h]).is_zero()
    assert chain_product(gr, [g, g]) == gr.algebra.span([gr.algebra.basis_vector("h1")])
    assert chain_product(gr, [g, g, g]).dim == 2


def test_chain_certificate(dihedral):
    certificate = check_lemma1(dihedral.grading, 4)
    assert certificate.max_chain == 4
    assert certificate.nonzero_chains > 0
    assert certificate.chains_examined >= certificate.nonzero_chains
    with pytest.raises(PreconditionError):
        check_lemma1(dihedral.grading, 1)


def test_ideal_product_certificate(dihedral):
    gr = dihedral.grading
    g, h = gr.group.element("(12)"), gr.group.element("(23)")
    certificate = check_lemma2(gr, g, h)
    first = gr.algebra.span(gr.algebra.basis_vector(x) for x in ("e1", "f1", "h1"))
    assert certificate.ideal_g.subspace == first
    assert certificate.product_dim == 0
    assert [c.to_document()["pair"] for c in check_lemma2_all(gr)] == [["(23)", "(12)"]]
    with pytest.raises(PreconditionError):
        check_lemma2(gr, g, gr.group.one)
    with pytest.raises(PreconditionError):
        check_lemma2(gr, g, gr.group.element("(123)"))


def test_graded_ideal_needs_homogeneous_seeds(sl2_z2):
    gr = sl2_z2.grading
    assert graded_ideal_generated(gr, [(0, 0, 1)]).dim == 3
    with pytest.raises(PreconditionError):
        graded_ideal_generated(gr, [(1, 0, 1)])


def test_seeded_ideal_stays_in_one_summand(dihedral):
    gr = dihedral.grading
    seeds = gr.fiber(gr.group.element("(12)")).basis
    ideal = graded_ideal_generated(gr, seeds)
    assert ideal.dim == 3
    assert names(ideal.support()) == ["e", "(12)"]


def test_centralizers_of_homogeneous_elements_are_graded(dihedral):
    gr = dihedral.grading
    for i in range(gr.algebra.dim):
        assert centralizer_is_graded(gr, gr.algebra.basis_vector(i))


def test_restriction_to_the_levi_factor():
    item = fixture("dihedral_semidirect")
    gr = item.grading
    rad, _ = radical_gradedness(gr)
    top, quotient = quotient_grading(gr, rad)
    assert top.algebra.dim == 6
    assert is_semisimple(top.algebra)
    levi = is_graded_subspace(item.levi, gr)[1]
    inner = restrict(gr, levi)
    assert inner.grading.algebra.dim == 6
    assert inner.embed_subspace(inner.grading.algebra.full()) == item.levi


def test_trivial_grading_has_one_fiber():
    gr = trivial_grading(sl2(), symmetric(3))
    assert names(gr.support()) == ["e"]


@pytest.mark.parametrize("name, expected", [
    ("sl2_z2", True),
    ("pauli_grading_sl2", True),
    ("swap_graded", True),
    ("paper_dihedral", False),
    ("semidirect_sl2_z2", False),
    ("abelian_trivial", False),
])
def test_graded_simplicity(name, expected):
    answer, reason = is_graded_simple(fixture(name).grading)
    assert answer is expected
    assert reason


def test_graded_simplicity_reasons():
    assert is_graded_simple(fixture("abelian_trivial").grading)[1] == "[L,L]=0"
    assert is_graded_simple(fixture("solvable_z2").grading)[1].startswith("radical")
    assert "not commutative" in is_graded_simple(fixture("paper_dihedral").grading)[1]


def test_invariant_violation_carries_exit_code_three():
    assert InvariantViolation("x").exit_code == 3


def test_generated_basis_names_avoid_existing_ones(semidirect):
    algebra = semidirect.algebra
    v2 = algebra.basis_vector("v2")
    mixed = (1, 1, 0, 0, 0)
    module = (0, 0, 0, 1, 1)
    assert basis_names(algebra, [v2, mixed, module], "v") == ["v2", "v1'", "v2'"]


def test_restriction_to_a_scrambled_levi_subalgebra():
    item = fixture("semidirect_sl2_z2", 0)
    levi = is_graded_subspace(item.levi, item.grading)[1]
    inner = restrict(item.grading, levi)
    names_ = inner.grading.algebra.names
    assert len(set(names_)) == len(names_) == 3
    assert inner.embed_subspace(inner.grading.algebra.full()) == item.levi


@pytest.mark.parametrize("name", catalog_names())
def test_chain_and_ideal_product_certificates_across_the_catalog(name):
    gr = fixture(name).grading
    certificate = check_lemma1(gr, 4)
    assert certificate.max_chain == 4
    for product in check_lemma2_all(gr):
        assert not product.g.commutes_with(product.h)
        assert product.product_dim == 0


@pytest.mark.parametrize("name", catalog_names())
def test_center_is_graded(name):
    gr = fixture(name, 2).grading
    assert is_graded_subspace(gr.algebra.center(), gr)[0]


@pytest.mark.parametrize("name", catalog_names())
def test_graded_simple_algebras_have_commutative_support(name):
    gr = fixture(name).grading
    if is_graded_simple(gr)[0]:
        assert gr.support_is_commutative()[0]
