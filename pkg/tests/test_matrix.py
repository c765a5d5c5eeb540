import random
from fractions import Fraction

import pytest

from core.errors import DimensionError
from linalg.matrix import Matrix, characteristic_polynomial, inverse, kernel, rational_factors, rref, solve
from linalg.scalars import Cyclotomic
from linalg.sparse import SparseSystem
from linalg.subspace import Frame, Subspace, complement_basis, complement_within


def test_rref_and_pivots():
    m = Matrix.from_rows([[2, 4, 2], [1, 2, 3], [0, 0, 1]])
    reduced, pivots = rref(m)
    assert pivots == [0, 2]
    assert reduced.row(0) == (1, 2, 0)
    assert reduced.row(1) == (0, 0, 1)
    assert not any(reduced.row(2))


def test_kernel_free_variables_in_order():
    m = Matrix.from_rows([[1, 2, 0, -1], [0, 0, 1, 3]])
    basis = kernel(m)
    assert basis == [(-2, 1, 0, 0), (1, 0, -3, 1)]
    for v in basis:
        assert not any(m.apply(v))


def test_solve_consistent_and_inconsistent():
    m = Matrix.from_rows([[1, 1], [1, -1]])
    assert solve(m, [3, 1]) == (2, 1)
    singular = Matrix.from_rows([[1, 2], [2, 4]])
    assert solve(singular, [1, 3]) is None
    assert solve(singular, [1, 2]) == (1, 0)


def test_determinant_inverse_rank():
    m = Matrix.from_rows([[2, 1], [7, 4]])
    assert m.det() == 1
    assert inverse(m) @ m == Matrix.identity(2)
    assert Matrix.from_rows([[1, 2], [2, 4]]).rank() == 1
    with pytest.raises(ZeroDivisionError):
        inverse(Matrix.from_rows([[1, 2], [2, 4]]))


def test_shape_errors():
    with pytest.raises(DimensionError):
        Matrix(2, 2, [1, 2, 3])
    with pytest.raises(DimensionError):
        Matrix.identity(2) @ Matrix.identity(3)


def test_cyclotomic_entries_share_a_field():
    i = Cyclotomic.zeta(4)
    m = Matrix.diagonal([i, 1])
    assert m.order == 4
    assert m.power(4) == Matrix.identity(2)
    assert kernel(m - Matrix.diagonal([i, i])) == [(1, 0)]


def test_characteristic_polynomial_and_factors():
    m = Matrix.from_rows([[0, 1], [-1, 0]])
    assert characteristic_polynomial(m) == [1, 0, 1]
    d = Matrix.diagonal([1, 1, 2])
    factors = rational_factors(characteristic_polynomial(d))
    assert factors == [([Fraction(-2), Fraction(1)], 1), ([Fraction(-1), Fraction(1)], 2)]


def test_subspace_sum_and_intersection():
    u = Subspace(3, [(1, 0, 0), (0, 1, 0)])
    w = Subspace(3, [(0, 1, 0), (0, 0, 1)])
    assert (u + w).dim == 3
    assert u.intersection(w) == Subspace(3, [(0, 5, 0)])
    assert (1, 1, 0) in u
    assert (1, 1, 1) not in u
    assert Subspace.zero(3).intersection(u).is_zero()


def test_canonical_form_makes_equal_spans_equal():
    a = Subspace(3, [(1, 1, 0), (1, -1, 0)])
    b = Subspace(3, [(2, 0, 0), (0, 3, 0)])
    assert a == b
    assert hash(a) == hash(b)


def test_complement_within():
    inner = Subspace(4, [(1, 1, 0, 0)])
    outer = Subspace(4, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])
    comp = complement_within(inner, outer)
    assert comp.dim == 2
    assert comp.intersection(inner).is_zero()
    assert (comp + inner) == outer


def test_complement_of_coordinate_subspaces_is_unit_vectors():
    inner = Subspace.coordinate(4, [1, 3])
    basis = complement_basis(inner, Subspace.full(4))
    assert basis == [(1, 0, 0, 0), (0, 0, 1, 0)]


def test_frame_coordinates():
    frame = Frame([(1, 1, 0), (0, 1, 1)])
    assert frame.coordinates((2, 5, 3)) == (2, 3)
    assert not frame.contains((1, 0, 0))


def _random_rows(rng, rows, cols):
    return [[rng.choice([0, 0, 0, 1, -1, 2, Fraction(1, 2)]) for _ in range(cols)] for _ in range(rows)]


@pytest.mark.parametrize("seed", range(8))
def test_sparse_system_matches_dense_kernel(seed):
    rng = random.Random(seed)
    rows = _random_rows(rng, 5, 7)
    system = SparseSystem(7)
    for r in rows:
        system.add({k: c for k, c in enumerate(r) if c})
    dense = kernel(Matrix.from_rows(rows, 7))
    assert Subspace(7, system.kernel()) == Subspace(7, dense)
    assert len(system.kernel()) == len(dense)


def test_sparse_system_detects_inconsistency():
    system = SparseSystem(2)
    assert system.add({0: 1, 1: 1}, 2, tag="first")
    assert system.add({0: 1, 1: -1}, 0, tag="second")
    assert system.solution() == (1, 1)
    assert not system.add({0: 2, 1: 2}, 5, tag="third")
    assert system.inconsistent == "third"
    assert system.solution() is None
