import random
from fractions import Fraction

import pytest

from catalog.algebras import sl2
from linalg.matrix import Matrix, kernel, rref, solve
from linalg.scalars import Cyclotomic, euler_phi, scalar_add, scalar_inv, scalar_mul


def _rational(rng):
    return Fraction(rng.randint(-5, 5), rng.randint(1, 4))


def _gaussian(rng):
    return Cyclotomic(4, [_rational(rng), _rational(rng)])


def _random_matrix(rng, entry):
    rows, cols = rng.randint(1, 5), rng.randint(1, 5)
    # sparse entries make rank deficiency common
    return Matrix(rows, cols, [entry(rng) if rng.random() < 0.6 else 0 for _ in range(rows * cols)])


@pytest.mark.parametrize("entry", [_rational, _gaussian], ids=["rational", "gaussian"])
def test_rank_nullity(entry):
    rng = random.Random(2024)
    for _ in range(40):
        m = _random_matrix(rng, entry)
        null = kernel(m)
        assert m.rank() + len(null) == m.cols
        for v in null:
            assert not any(m.apply(v))


@pytest.mark.parametrize("entry", [_rational, _gaussian], ids=["rational", "gaussian"])
def test_rref_is_idempotent(entry):
    rng = random.Random(99)
    for _ in range(30):
        reduced, pivots = rref(_random_matrix(rng, entry))
        again, pivots_again = rref(reduced)
        assert again == reduced
        assert pivots_again == pivots


def test_field_axioms_on_rationals():
    rng = random.Random(5)
    for _ in range(100):
        a, b, c = _rational(rng), _rational(rng), _rational(rng)
        assert scalar_add(scalar_add(a, b), c) == scalar_add(a, scalar_add(b, c))
        assert scalar_mul(scalar_mul(a, b), c) == scalar_mul(a, scalar_mul(b, c))
        assert scalar_mul(a, scalar_add(b, c)) == scalar_add(scalar_mul(a, b), scalar_mul(a, c))
        if a:
            assert scalar_mul(a, scalar_inv(a)) == 1


@pytest.mark.parametrize("order", [3, 4, 5, 12])
def test_field_axioms_on_cyclotomics(order):
    rng = random.Random(order)
    degree = euler_phi(order)
    for _ in range(40):
        a, b, c = (Cyclotomic(order, [_rational(rng) for _ in range(degree)]) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a - a == 0
        if a:
            assert a * a.inverse() == 1


def test_free_variables_are_zeroed():
    assert solve(Matrix.from_rows([[1, 1]]), [2]) == (2, 0)


def test_ad_e_has_rank_two():
    L = sl2()
    assert L.ad(L.basis_vector("e")).rank() == 2
