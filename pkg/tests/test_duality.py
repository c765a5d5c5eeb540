import random
from fractions import Fraction

import pytest

from catalog.algebras import sl2
from catalog.fixtures import fixture
from core.errors import PreconditionError, ValidationError
from grading.duality import (
    action_to_grading,
    check_family,
    check_homomorphism_law,
    eigenspaces,
    family_from_maps,
    grading_to_action,
    is_automorphism,
    stable_subspace_check,
)
from grading.grading import is_graded_subspace, validate
from groups.finite_group import cyclic, symmetric
from linalg.matrix import Matrix
from linalg.scalars import Cyclotomic
from linalg.subspace import Subspace


def test_root_grading_gives_powers_of_i():
    gr = fixture("sl2_z4").grading
    family = grading_to_action(gr)
    assert len(family.maps) == 4
    chi = family.dual.generators[0]
    m = family.maps[chi]
    i = chi(gr.group.element("r1"))
    assert i in (Cyclotomic.zeta(4), Cyclotomic.zeta(4, 3))
    # basis e, f, h with degrees r1, r3, r0
    assert (m[0, 0], m[1, 1], m[2, 2]) == (i, i ** 3, 1)
    assert check_family(family)[0]
    assert check_homomorphism_law(family)[0]


def test_pauli_grading_gives_sign_automorphisms():
    family = grading_to_action(fixture("pauli_grading_sl2").grading)
    identity = Matrix.identity(3)
    nontrivial = [m for m in family.maps.values() if m != identity]
    assert len(nontrivial) == 3
    for m in nontrivial:
        diagonal = [m[k, k] for k in range(3)]
        assert sorted(diagonal) == [-1, -1, 1]
        assert all(m[r, c] == 0 for r in range(3) for c in range(3) if r != c)


@pytest.mark.parametrize("name", ["sl2_z2", "sl2_z4", "pauli_grading_sl2", "swap_graded", "semidirect_sl2_z2"])
def test_grading_survives_the_round_trip(name):
    gr = fixture(name).grading
    back = action_to_grading(gr.algebra, grading_to_action(gr))
    assert back.algebra is gr.algebra
    assert back.degrees == gr.degrees


def test_noncommutative_support_has_no_dual_family():
    with pytest.raises(PreconditionError):
        grading_to_action(fixture("paper_dihedral").grading)


def test_commutative_support_in_a_nonabelian_group():
    gr = validate(sl2(), symmetric(3), {"e": "(12)", "f": "(12)", "h": "e"})
    family = grading_to_action(gr)
    assert family.group.order == 2
    assert set(family.group.names) == {"e", "(12)"}
    spaces = eigenspaces(family)
    assert sorted(s.dim for s in spaces.values()) == [1, 2]


def test_chevalley_involution_rebases_the_algebra():
    L = sl2()
    theta = Matrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, -1]])
    assert is_automorphism(L, theta) == (True, None)
    family = family_from_maps(L, cyclic(2), {"chi_1": theta})
    gr = action_to_grading(L, family)
    assert gr.algebra is not L
    assert gr.algebra.names == ("w0", "w1", "h")
    assert [len(gr.fiber_indices(g)) for g in gr.support()] == [1, 2]


def test_rejected_families():
    L = sl2()
    not_automorphism = Matrix.diagonal([1, 1, -1])
    assert not is_automorphism(L, not_automorphism)[0]
    with pytest.raises(ValidationError):
        family_from_maps(L, cyclic(2), {"chi_1": not_automorphism})
    wrong_order = Matrix.diagonal([2, Fraction(1, 2), 1])
    with pytest.raises(ValidationError):
        family_from_maps(L, cyclic(2), {"chi_1": wrong_order})
    with pytest.raises(ValidationError):
        family_from_maps(L, cyclic(2), {})
    with pytest.raises(PreconditionError):
        family_from_maps(L, symmetric(3), {})


def _random_subspace(rng, gr):
    n = gr.algebra.dim
    vectors = []
    for _ in range(rng.randint(1, n - 1)):
        if rng.random() < 0.5:
            g = rng.choice(gr.support())
            idx = gr.fiber_indices(g)
            vectors.append(tuple(rng.randint(-2, 2) if k in idx else 0 for k in range(n)))
        else:
            vectors.append(tuple(rng.randint(-2, 2) for _ in range(n)))
    return Subspace(n, vectors)


@pytest.mark.parametrize("name", ["sl2_z4", "pauli_grading_sl2", "semidirect_sl2_z2"])
def test_stable_subspaces_are_graded_subspaces(name):
    gr = fixture(name).grading
    family = grading_to_action(gr)
    rng = random.Random(name)
    for _ in range(100):
        v = _random_subspace(rng, gr)
        assert stable_subspace_check(v, family)[0] == is_graded_subspace(v, gr)[0]
