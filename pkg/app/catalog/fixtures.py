"""Graded algebras with answers known from their construction.

Expected radicals and Levi factors are read off the way each fixture is
assembled (module part, base part), never computed by the structure code.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Sequence

from catalog.algebras import abelian, natural_sl2_module, semidirect, sl2, sl_n, so_n, two_dim_solvable
from core.config import config
from core.errors import InvariantViolation, PreconditionError
from grading.grading import Grading, is_graded_subspace, validate
from groups.finite_group import FiniteGroup, cyclic, is_commutative_subset, klein, symmetric
from lie.algebra import LieAlgebra, direct_sum
from linalg.matrix import Matrix
from linalg.subspace import Subspace

logger = logging.getLogger(__name__)


@dataclass
class Fixture:
    name: str
    grading: Grading
    radical_dim: int
    levi_dim: int
    block_count: int
    block_supports: list[list[str]] = field(default_factory=list)
    radical: Optional[Subspace] = None
    levi: Optional[Subspace] = None
    labels: list[str] = field(default_factory=list)
    description: str = ""
    transform: Optional[Matrix] = None

    def __post_init__(self):
        self._check_declared()

    @property
    def algebra(self) -> LieAlgebra:
        return self.grading.algebra

    @property
    def group(self) -> FiniteGroup:
        return self.grading.group

    def _check_declared(self):
        """Declared answers must fit the grading they describe."""
        grading = self.grading
        algebra = grading.algebra
        support = set(grading.support())

        def fail(message: str, **witness):
            raise InvariantViolation(f"fixture {self.name}: {message}", witness)

        if len(self.block_supports) != self.block_count:
            fail("block count does not match the declared supports", count=self.block_count)
        for names in self.block_supports:
            elements = [grading.group.element(x) for x in names]
            if not set(elements) <= support:
                fail("block support is not inside the support of the grading", block=list(names))
            ok, pair = is_commutative_subset(elements)
            if not ok:
                fail("block support is not commutative", block=list(names), pair=[pair[0].name, pair[1].name])
        if self.radical is not None:
            if self.radical.dim != self.radical_dim:
                fail("radical dimension does not match", declared=self.radical_dim, dim=self.radical.dim)
            if not is_graded_subspace(self.radical, grading)[0] or not algebra.is_ideal(self.radical):
                fail("declared radical is not a graded ideal")
        if self.levi is not None:
            if self.levi.dim != self.levi_dim:
                fail("Levi dimension does not match", declared=self.levi_dim, dim=self.levi.dim)
            if not is_graded_subspace(self.levi, grading)[0] or not algebra.is_subalgebra(self.levi):
                fail("declared Levi subalgebra is not a graded subalgebra")


def _coordinate(algebra: LieAlgebra, names: list[str]) -> Subspace:
    return Subspace.coordinate(algebra.dim, [algebra.index_of(x) for x in names])


def with_grading(algebra: LieAlgebra, group: FiniteGroup, degrees: dict[str, str], name: str, *,
                 radical: Optional[Subspace] = None, levi: Optional[Subspace] = None,
                 block_supports: Sequence[Sequence[str]] = (), labels: Sequence[str] = (),
                 description: str = "") -> Fixture:
    """Fixture from an algebra, a degree map by basis name and the known radical and Levi factor."""
    grading = validate(algebra, group, degrees)
    radical = radical if radical is not None else algebra.zero()
    levi = levi if levi is not None else algebra.full()
    if radical.dim + levi.dim != algebra.dim:
        raise PreconditionError(
            f"fixture {name}: radical and Levi dimensions do not add up to {algebra.dim}",
            {"radical": radical.dim, "levi": levi.dim},
        )
    return Fixture(name, grading, radical.dim, levi.dim, len(block_supports),
                   [list(s) for s in block_supports], radical, levi, list(labels), description)


def sl2_z2() -> Fixture:
    """sl2 with h in degree r0 and e, f in degree r1."""
    algebra = sl2()
    grading = validate(algebra, cyclic(2), {"e": "r1", "f": "r1", "h": "r0"})
    return Fixture("sl2_z2", grading, 0, 3, 1, [["r0", "r1"]], algebra.zero(), algebra.full(), ["A1"],
                   "sl2 graded by Z2 with the Cartan element in the identity component")


def sl2_z4() -> Fixture:
    algebra = sl2()
    grading = validate(algebra, cyclic(4), {"e": "r1", "f": "r3", "h": "r0"})
    return Fixture("sl2_z4", grading, 0, 3, 1, [["r0", "r1", "r3"]], algebra.zero(), algebra.full(), ["A1"],
                   "sl2 graded by Z4 through the root grading")


def pauli_grading_sl2() -> Fixture:
    """sl2 on h, e+f, e-f with the three nontrivial Klein elements as degrees."""
    base = sl2()
    algebra = base.change_basis([(0, 0, 1), (1, 1, 0), (1, -1, 0)], ["h", "e_plus_f", "e_minus_f"], "sl2 (Pauli basis)")
    grading = validate(algebra, klein(), {"h": "(r1,r0)", "e_plus_f": "(r0,r1)", "e_minus_f": "(r1,r1)"})
    return Fixture("pauli_grading_sl2", grading, 0, 3, 1, [["(r0,r1)", "(r1,r0)", "(r1,r1)"]],
                   algebra.zero(), algebra.full(), ["A1"], "Klein grading of sl2 with one-dimensional components")


def paper_example_dihedral() -> Fixture:
    """sl2 + sl2 graded by S3: the first summand by {e, (12)}, the second by {e, (23)}."""
    algebra = direct_sum(sl2(), sl2(), label="sl2+sl2")
    degrees = {"e1": "(12)", "f1": "(12)", "h1": "e", "e2": "(23)", "f2": "(23)", "h2": "e"}
    grading = validate(algebra, symmetric(3), degrees)
    return Fixture("paper_dihedral", grading, 0, 6, 2, [["e", "(12)"], ["e", "(23)"]],
                   algebra.zero(), algebra.full(), ["A1", "A1"],
                   "two sl2 summands graded by noncommuting involutions of S3")


def swap_graded() -> Fixture:
    """sl2 + sl2 on x_p = (x, x) in degree r0 and x_m = (x, -x) in degree r1."""
    base = direct_sum(sl2(), sl2(), label="sl2+sl2")
    vectors = []
    for sign in (1, -1):
        for k in range(3):
            v = [0] * 6
            v[k] = 1
            v[3 + k] = sign
            vectors.append(tuple(v))
    names = ["e_p", "f_p", "h_p", "e_m", "f_m", "h_m"]
    algebra = base.change_basis(vectors, names, "sl2+sl2 (swap basis)")
    grading = validate(algebra, cyclic(2), {x: ("r0" if x.endswith("_p") else "r1") for x in names})
    return Fixture("swap_graded", grading, 0, 6, 1, [["r0", "r1"]], algebra.zero(), algebra.full(), ["A1", "A1"],
                   "the swap automorphism of sl2 + sl2 as a Z2 grading")


def semidirect_sl2_z2() -> Fixture:
    """sl2 ⋉ Q^2 with e, f, v1 in degree r1 and h, v2 in degree r0."""
    algebra = semidirect(sl2(), natural_sl2_module(), ["v1", "v2"], "sl2 semidirect Q^2")
    return with_grading(
        algebra, cyclic(2), {"e": "r1", "f": "r1", "h": "r0", "v1": "r1", "v2": "r0"}, "semidirect_sl2_z2",
        radical=_coordinate(algebra, ["v1", "v2"]), levi=_coordinate(algebra, ["e", "f", "h"]),
        block_supports=[["r0", "r1"]], labels=["A1"], description="sl2 acting on its natural module, graded by Z2",
    )


def dihedral_semidirect() -> Fixture:
    """(sl2 + sl2) ⋉ (Q^2 + Q^2) graded by S3; each sl2 acts on its own plane."""
    base = direct_sum(sl2(), sl2(), label="sl2+sl2")
    rep = natural_sl2_module()
    zero = Matrix.zeros(2, 2)
    action = []
    for first in (True, False):
        for m in rep:
            action.append(_block_diagonal(m, zero) if first else _block_diagonal(zero, m))
    algebra = semidirect(base, action, ["v1", "v2", "w1", "w2"], "(sl2+sl2) semidirect (Q^2+Q^2)")
    degrees = {
        "e1": "(12)", "f1": "(12)", "h1": "e", "v1": "(12)", "v2": "e",
        "e2": "(23)", "f2": "(23)", "h2": "e", "w1": "(23)", "w2": "e",
    }
    return with_grading(
        algebra, symmetric(3), degrees, "dihedral_semidirect",
        radical=_coordinate(algebra, ["v1", "v2", "w1", "w2"]),
        levi=_coordinate(algebra, ["e1", "f1", "h1", "e2", "f2", "h2"]),
        block_supports=[["e", "(12)"], ["e", "(23)"]], labels=["A1", "A1"],
        description="noncommutative support with a nonzero radical",
    )


def _block_diagonal(a: Matrix, b: Matrix) -> Matrix:
    n = a.rows + b.rows
    entries = []
    for r in range(n):
        for c in range(n):
            if r < a.rows and c < a.rows:
                entries.append(a[r, c])
            elif r >= a.rows and c >= a.rows:
                entries.append(b[r - a.rows, c - a.rows])
            else:
                entries.append(0)
    return Matrix(n, n, entries)


def solvable_z2() -> Fixture:
    algebra = two_dim_solvable()
    grading = validate(algebra, cyclic(2), {"x": "r0", "y": "r1"})
    return Fixture("solvable_z2", grading, 2, 0, 0, [], algebra.full(), algebra.zero(), [],
                   "[x, y] = y with y in the nontrivial degree")


def abelian_trivial() -> Fixture:
    algebra = abelian(3)
    grading = validate(algebra, cyclic(1), {x: "r0" for x in algebra.names})
    return Fixture("abelian_trivial", grading, 3, 0, 0, [], algebra.full(), algebra.zero(), [],
                   "abelian algebra with the trivial grading")


def sl3_trivial() -> Fixture:
    algebra = sl_n(3)
    grading = validate(algebra, cyclic(1), {x: "r0" for x in algebra.names})
    return Fixture("sl3_trivial", grading, 0, 8, 1, [["r0"]], algebra.zero(), algebra.full(), ["A2"],
                   "sl3 with the trivial grading")


def so5_trivial() -> Fixture:
    algebra = so_n(5)
    grading = validate(algebra, cyclic(1), {x: "r0" for x in algebra.names})
    return Fixture("so5_trivial", grading, 0, 10, 1, [["r0"]], algebra.zero(), algebra.full(), ["B2"],
                   "so5 with the trivial grading")


CATALOG: dict[str, Callable[[], Fixture]] = {
    "sl2_z2": sl2_z2,
    "sl2_z4": sl2_z4,
    "pauli_grading_sl2": pauli_grading_sl2,
    "paper_dihedral": paper_example_dihedral,
    "swap_graded": swap_graded,
    "semidirect_sl2_z2": semidirect_sl2_z2,
    "dihedral_semidirect": dihedral_semidirect,
    "solvable_z2": solvable_z2,
    "abelian_trivial": abelian_trivial,
    "sl3_trivial": sl3_trivial,
    "so5_trivial": so5_trivial,
}


def catalog_names() -> list[str]:
    return list(CATALOG)


def fixture(name: str, seed: Optional[int] = None) -> Fixture:
    """Catalog entry by name, scrambled when a seed is given."""
    try:
        build = CATALOG[name]
    except KeyError:
        raise PreconditionError(f"no catalog entry named {name!r}", {"known": catalog_names()}) from None
    result = build()
    return scramble(result, seed) if seed is not None else result


def degree_preserving_map(grading: Grading, seed: int) -> Matrix:
    """Invertible T with T(L_g) = L_g: per fiber a product of random unit lower and upper triangular blocks."""
    rng = random.Random(seed)
    n = grading.algebra.dim
    entries = [[0] * n for _ in range(n)]
    for g in grading.support():
        idx = list(grading.fiber_indices(g))
        k = len(idx)
        lower = [[1 if r == c else (rng.randint(-2, 2) if r > c else 0) for c in range(k)] for r in range(k)]
        upper = [[1 if r == c else (rng.randint(-2, 2) if r < c else 0) for c in range(k)] for r in range(k)]
        for r in range(k):
            for c in range(k):
                entries[idx[r]][idx[c]] = sum(lower[r][t] * upper[t][c] for t in range(k))
    return Matrix.from_rows(entries, n)


def scramble(source: Fixture, seed: Optional[int] = None) -> Fixture:
    """Transport a fixture through a seeded degree-preserving map; expected subspaces move along."""
    if seed is None:
        seed = config.get_int("catalog.default_seed", 0)
    t = degree_preserving_map(source.grading, seed)
    algebra = source.algebra.transport(t, f"{source.algebra.label} (seed {seed})")
    grading = Grading(algebra, source.group, source.grading.degrees)

    def moved(space: Optional[Subspace]) -> Optional[Subspace]:
        if space is None:
            return None
        return Subspace(space.ambient, [t.apply(v) for v in space.basis])

    logger.debug("scrambled %s with seed %d", source.name, seed)
    return replace(
        source,
        name=f"{source.name}@{seed}",
        grading=grading,
        radical=moved(source.radical),
        levi=moved(source.levi),
        transform=t,
    )
