import pytest

from catalog.fixtures import fixture
from core.errors import PreconditionError
from structure.decomposition import TYPE_LABELS, graded_simple_decomposition
from grading.grading import restrict
from structure import levi as levi_module
from structure.levi import BLOCK_RESTRICTED, GLOBAL, homogeneous_levi, radical_gradedness
from structure.report import certify_report, theorem1_report


def test_radical_of_the_semidirect_product(semidirect):
    space, certificate = radical_gradedness(semidirect.grading)
    assert space.subspace == semidirect.radical
    assert certificate.dim == 2
    assert certificate.components == {"r0": 1, "r1": 1}
    assert certificate.ideal and certificate.solvable


def test_levi_of_the_semidirect_product(semidirect):
    levi, certificate = homogeneous_levi(semidirect.grading)
    assert levi.subspace == semidirect.levi
    assert certificate.ok
    assert certificate.path == GLOBAL
    assert certificate.stages == 1
    assert [g.name for _, g in certificate.basis] == ["r1", "r1", "r0"]


@pytest.mark.parametrize("seed", [1, 7])
def test_levi_survives_a_degree_preserving_change_of_basis(seed):
    item = fixture("semidirect_sl2_z2", seed)
    space, _ = radical_gradedness(item.grading)
    assert space.subspace == item.radical
    levi, certificate = homogeneous_levi(item.grading)
    assert certificate.ok
    assert levi.dim == 3
    assert levi.subspace.intersection(item.radical).is_zero()
    assert all(item.grading.degree_of(v) == g for v, g in certificate.basis)


def test_semisimple_algebra_is_its_own_levi_subalgebra(dihedral):
    levi, certificate = homogeneous_levi(dihedral.grading)
    assert levi.subspace == dihedral.algebra.full()
    assert certificate.stages == 0


def test_solvable_algebra_has_zero_levi():
    item = fixture("solvable_z2")
    levi, certificate = homogeneous_levi(item.grading)
    assert levi.dim == 0
    assert certificate.ok


def test_report_on_noncommutative_support_with_radical():
    item = fixture("dihedral_semidirect")
    report = theorem1_report(item.grading)
    assert report.radical.subspace == item.radical
    assert report.levi.dim == item.levi_dim
    assert sorted([g.name for g in s] for s in report.supports) == [["e", "(12)"], ["e", "(23)"]]
    assert [b.count for b in report.blocks] == [1, 1]
    assert all(b.commutative for b in report.blocks)


def test_swap_grading_joins_the_two_summands():
    blocks = graded_simple_decomposition(fixture("swap_graded").grading)
    assert len(blocks) == 1
    block = blocks[0]
    assert block.count == 2
    assert block.dim == 6
    assert block.labels == ["A1", "A1"]
    assert block.isomorphism == TYPE_LABELS
    assert [g.name for g in block.support] == ["r0", "r1"]


def test_noncommuting_involutions_give_separate_blocks(dihedral):
    blocks = graded_simple_decomposition(dihedral.grading)
    assert [[g.name for g in b.support] for b in blocks] == dihedral.block_supports
    assert [b.dim for b in blocks] == [3, 3]


def test_trivially_graded_sl3_is_one_block_of_type_a2():
    blocks = graded_simple_decomposition(fixture("sl3_trivial").grading)
    assert len(blocks) == 1
    assert blocks[0].labels == ["A2"]


def test_decomposition_needs_a_semisimple_algebra(semidirect):
    with pytest.raises(PreconditionError):
        graded_simple_decomposition(semidirect.grading)


def test_report_document_certifies(semidirect):
    document = theorem1_report(semidirect.grading).to_document()
    assert document["radical"]["certificate"]["components"] == {"r0": 1, "r1": 1}
    assert certify_report(semidirect.grading, document) == (True, [])


def test_tampered_report_fails_certification(semidirect):
    document = theorem1_report(semidirect.grading).to_document()
    document["radical"]["basis"] = []
    ok, failures = certify_report(semidirect.grading, document)
    assert not ok
    assert "Levi subalgebra and radical do not add up to L" in failures


def test_report_with_a_levi_vector_in_the_wrong_degree(semidirect):
    document = theorem1_report(semidirect.grading).to_document()
    document["levi"]["basis"][0]["degree"] = "r0"
    ok, failures = certify_report(semidirect.grading, document)
    assert not ok
    assert any(f.startswith("Levi vector 0 is not homogeneous") for f in failures)


@pytest.mark.parametrize("seed", range(20))
@pytest.mark.parametrize("name", ["semidirect_sl2_z2", "dihedral_semidirect"])
def test_report_on_scrambled_semidirect_products(name, seed):
    """Homogeneous Levi subalgebras are not unique, so B is compared up to the radical.

    The radical is unique and must equal the transported one exactly.
    """
    item = fixture(name, seed)
    algebra = item.algebra
    report = theorem1_report(item.grading)
    assert report.radical.subspace == item.radical
    levi = report.levi.subspace
    assert algebra.is_subalgebra(levi)
    assert all(item.grading.degree_of(v) == g for v, g in report.levi_certificate.basis)
    assert levi.intersection(item.radical).is_zero()
    assert levi.dim + item.radical.dim == algebra.dim
    assert sorted([g.name for g in s] for s in report.supports) == sorted(item.block_supports)
    assert certify_report(item.grading, report.to_document()) == (True, [])


@pytest.mark.parametrize("name", ["semidirect_sl2_z2", "dihedral_semidirect", "swap_graded"])
def test_levi_subalgebra_reports_itself(name):
    item = fixture(name, 4)
    levi, _ = homogeneous_levi(item.grading)
    inner = restrict(item.grading, levi)
    report = theorem1_report(inner.grading)
    assert report.radical.dim == 0
    assert report.levi.subspace == inner.grading.algebra.full()


def test_block_restricted_path_records_its_stages(semidirect, monkeypatch):
    corrected = levi_module._global_levi

    def refuse_top_level(grading, rad):
        if grading is semidirect.grading:
            return None
        return corrected(grading, rad)

    monkeypatch.setattr(levi_module, "_global_levi", refuse_top_level)
    levi, certificate = homogeneous_levi(semidirect.grading)
    assert certificate.path == BLOCK_RESTRICTED
    assert certificate.stages == 1
    assert certificate.ok
    assert levi.dim == 3
