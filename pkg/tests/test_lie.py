import pytest

from catalog.algebras import abelian, natural_sl2_module, semidirect, sl2, sl_n, so_n, two_dim_solvable
from core.errors import PreconditionError, ValidationError
from lie.algebra import LieAlgebra, direct_sum
from lie.centroid import centroid, simple_decomposition
from lie.classify import cartan_subalgebra, classify_split_type, root_system
from lie.killing import is_semisimple, killing_form, killing_value, radical
from linalg.matrix import Matrix


def vec(algebra, **coeffs):
    v = [0] * algebra.dim
    for name, c in coeffs.items():
        v[algebra.index_of(name)] = c
    return tuple(v)


def test_sl2_brackets():
    L = sl2()
    e, f, h = (L.basis_vector(x) for x in "efh")
    assert L.bracket(e, f) == h
    assert L.bracket(h, e) == vec(L, e=2)
    assert L.bracket(h, f) == vec(L, f=-2)
    assert L.left_normed([e, f, e]) == vec(L, e=2)


def test_jacobi_failure_is_reported():
    with pytest.raises(ValidationError) as info:
        LieAlgebra.from_brackets(["a", "b", "c"], {(0, 1): {0: 1}, (1, 2): {1: 1}})
    assert info.value.witness["triple"] == ["a", "b", "c"]


def test_antisymmetry_failure_is_reported():
    zero = [0, 0]
    with pytest.raises(ValidationError):
        LieAlgebra(["x", "y"], [[zero, [1, 0]], [[1, 0], zero]])


def test_killing_form_of_sl2():
    L = sl2()
    kappa = killing_form(L)
    e, f, h = (L.basis_vector(x) for x in "efh")
    assert killing_value(L, e, f) == 4
    assert killing_value(L, h, h) == 8
    assert killing_value(L, e, e) == 0
    assert kappa.det() == -128
    assert kappa == kappa.transpose()
    assert is_semisimple(L)


def test_radical_of_semidirect_product():
    L = semidirect(sl2(), natural_sl2_module(), ["v1", "v2"])
    rad = radical(L)
    assert rad == L.span([L.basis_vector("v1"), L.basis_vector("v2")])
    assert not is_semisimple(L)
    assert L.quotient(rad).algebra.dim == 3
    assert is_semisimple(L.quotient(rad).algebra)


def test_solvable_and_nilpotent():
    L = two_dim_solvable()
    assert [s.dim for s in L.derived_series()] == [2, 1, 0]
    assert L.is_solvable()
    assert not L.is_nilpotent()
    assert radical(L) == L.full()
    assert abelian(3).is_nilpotent()
    assert radical(abelian(3)).dim == 3


def test_centralizer_and_center():
    L = sl2()
    h = L.basis_vector("h")
    assert L.centralizer([h]) == L.span([h])
    assert L.center().is_zero()
    assert abelian(2).center() == abelian(2).full()


def test_ideal_and_subalgebra_generation():
    L = direct_sum(sl2(), sl2())
    assert L.names == ("e1", "f1", "h1", "e2", "f2", "h2")
    ideal = L.ideal_generated([L.basis_vector("e1")])
    assert ideal == L.span(L.basis_vector(x) for x in ("e1", "f1", "h1"))
    assert L.is_ideal(ideal)
    sub = L.subalgebra_generated([L.basis_vector(x) for x in ("e1", "f1", "e2")])
    assert sub.dim == 4
    assert L.is_subalgebra(sub)


def test_product_subspace():
    L = sl2()
    span_e = L.span([L.basis_vector("e")])
    span_f = L.span([L.basis_vector("f")])
    assert L.product_subspace(span_e, span_f) == L.span([L.basis_vector("h")])
    assert L.product_subspace(span_e, span_e).is_zero()


def test_change_basis_and_transport():
    L = sl2()
    M = L.change_basis([(1, 1, 0), (1, -1, 0), (0, 0, 1)], ["p", "m", "h"])
    assert M.bracket(M.basis_vector("h"), M.basis_vector("p")) == vec(M, m=2)
    t = Matrix.from_rows([[1, 0, 1], [0, 1, 0], [0, 0, 1]])
    N = L.transport(t)
    x, y = (1, 2, 3), (0, 1, -1)
    assert N.bracket(t.apply(x), t.apply(y)) == t.apply(L.bracket(x, y))


def test_subalgebra_rejects_non_closed_span():
    with pytest.raises(PreconditionError):
        sl2().subalgebra([(1, 0, 0), (0, 1, 0)])


def test_centroid_and_simple_decomposition():
    assert len(centroid(sl2())) == 1
    L = direct_sum(sl2(), sl2())
    parts = simple_decomposition(L)
    assert [p.dim for p in parts] == [3, 3]
    assert parts[0] == L.span(L.basis_vector(x) for x in ("e1", "f1", "h1"))
    with pytest.raises(PreconditionError):
        simple_decomposition(two_dim_solvable())


def test_sl_n_and_so5_dimensions():
    assert sl_n(3).dim == 8
    assert sl_n(3).names[:3] == ("e12", "e13", "e23")
    assert so_n(5).dim == 10
    assert is_semisimple(so_n(5))


@pytest.mark.parametrize("algebra, label", [(sl2(), "A1"), (sl_n(3), "A2"), (so_n(5), "B2")])
def test_classification(algebra, label):
    assert classify_split_type(algebra) == label


def test_root_system_of_sl3():
    system = root_system(sl_n(3))
    assert system.rank == 2
    assert len(system.roots) == 6
    assert len(system.distinct_lengths) == 1
    assert cartan_subalgebra(sl_n(3))[1].dim == 2


def test_so5_has_two_root_lengths():
    system = root_system(so_n(5))
    short, long = system.distinct_lengths
    assert long / short == 2
    assert system.count_with_length(short) == 4


def test_classification_of_an_ideal():
    L = direct_sum(sl2(), sl_n(3))
    first, second = simple_decomposition(L)
    assert {classify_split_type(L, first), classify_split_type(L, second)} == {"A1", "A2"}
    with pytest.raises(PreconditionError):
        classify_split_type(L)


@pytest.mark.parametrize(
    "algebra",
    [sl2(), sl_n(3), semidirect(sl2(), natural_sl2_module(), ["v1", "v2"]), two_dim_solvable()],
    ids=lambda a: a.label,
)
def test_killing_form_is_invariant(algebra):
    form = killing_form(algebra)

    def kappa(x, y):
        return sum((a * b for a, b in zip(x, form.apply(y))), 0)

    basis = algebra.basis()
    for z in basis:
        for x in basis:
            for y in basis:
                assert kappa(algebra.bracket(z, x), y) + kappa(x, algebra.bracket(z, y)) == 0
