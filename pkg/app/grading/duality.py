"""Abelian gradings and finite abelian groups of automorphisms.

A grading by an abelian group G gives every character chi the automorphism
chi* that multiplies a vector of degree g by chi(g). Conversely a family of
commuting automorphisms indexed by the characters recovers the fibers as
simultaneous eigenspaces. All eigenvalue arithmetic happens in Q(zeta_e) for
e the exponent of G.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Mapping, Optional

from core.errors import InvariantViolation, PreconditionError, ValidationError
from grading.grading import Grading, basis_names, unit_index
from groups.characters import Character, DualGroup, dual_group
from groups.finite_group import FiniteGroup, GroupElement, is_commutative_subset, subgroup
from lie.algebra import LieAlgebra
from linalg.matrix import Matrix, Vector, kernel
from linalg.scalars import demote
from linalg.subspace import Subspace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedAutomorphism:
    """chi* for one character, as a matrix acting on basis coordinates."""

    algebra: LieAlgebra
    character: Character
    matrix: Matrix

    def apply(self, v) -> Vector:
        return self.matrix.apply(v)


@dataclass
class ActionFamily:
    """Automorphisms indexed by characters of an abelian group."""

    algebra: LieAlgebra
    group: FiniteGroup
    dual: DualGroup
    maps: dict[Character, Matrix] = field(default_factory=dict)

    def automorphism(self, chi: Character) -> GradedAutomorphism:
        try:
            return GradedAutomorphism(self.algebra, chi, self.maps[chi])
        except KeyError:
            raise PreconditionError(f"no map given for {chi.name}") from None

    def automorphisms(self) -> list[GradedAutomorphism]:
        return [GradedAutomorphism(self.algebra, chi, self.maps[chi]) for chi in self.dual if chi in self.maps]


def is_automorphism(algebra: LieAlgebra, m: Matrix) -> tuple[bool, Optional[str]]:
    """(True, None) when m is invertible and m[b_i, b_j] = [m b_i, m b_j] on every basis pair."""
    n = algebra.dim
    if m.rows != n or m.cols != n:
        return False, f"expected a {n}x{n} matrix, got {m.rows}x{m.cols}"
    if m.rank() != n:
        return False, "map is singular"
    cols = m.columns()
    for i in range(n):
        for j in range(i + 1, n):
            if m.apply(algebra.constants[i][j]) != algebra.bracket(cols[i], cols[j]):
                return False, f"bracket not preserved on ({algebra.names[i]}, {algebra.names[j]})"
    return True, None


def _degree_group(grading: Grading) -> tuple[FiniteGroup, dict[GroupElement, GroupElement]]:
    """Abelian group the characters live on, with the map from grading degrees into it."""
    group = grading.group
    if group.is_abelian():
        return group, {g: g for g in group}
    support = grading.support()
    generated = grading.generated_support_subgroup()
    ok, pair = is_commutative_subset(generated)
    if not ok:
        raise PreconditionError(
            "duality needs the support to generate an abelian subgroup",
            {"pair": [pair[0].name, pair[1].name], "support": [g.name for g in support]},
        )
    sub, inclusion = subgroup(generated)
    return sub, {big: small for small, big in inclusion.items()}


def grading_to_action(grading: Grading) -> ActionFamily:
    """chi* = diag(chi(deg b_i)) for every character of the (support-generated) abelian group."""
    group, to_group = _degree_group(grading)
    dual = dual_group(group)
    algebra = grading.algebra
    degrees = [to_group[d] for d in grading.degrees]
    maps = {}
    for chi in dual:
        m = Matrix.diagonal([demote(chi(d)) for d in degrees])
        ok, detail = is_automorphism(algebra, m)
        if not ok:
            raise InvariantViolation(
                f"{chi.name}* is not an automorphism: {detail}", {"character": chi.name}
            )
        maps[chi] = m
    logger.debug("%d automorphisms from %r", len(maps), grading)
    return ActionFamily(algebra, group, dual, maps)


def check_family(family: ActionFamily) -> tuple[bool, str]:
    """Automorphism law, finite order dividing exp(G), pairwise commutation and generator coverage."""
    algebra = family.algebra
    n = algebra.dim
    identity = Matrix.identity(n)
    e = family.dual.exponent
    for chi, m in family.maps.items():
        ok, detail = is_automorphism(algebra, m)
        if not ok:
            return False, f"{chi.name}: {detail}"
        if m.power(e) != identity:
            return False, f"{chi.name}: order does not divide {e}"
    items = list(family.maps.items())
    for a, (chi, m) in enumerate(items):
        for psi, p in items[a + 1:]:
            if m @ p != p @ m:
                return False, f"{chi.name} and {psi.name} do not commute"
    missing = [chi.name for chi in family.dual.generators if chi not in family.maps]
    if missing:
        return False, f"missing maps for generating characters {', '.join(missing)}"
    return True, f"{len(items)} maps checked"


def check_homomorphism_law(family: ActionFamily) -> tuple[bool, str]:
    """(chi psi)* = chi* psi* for every pair with all three maps present; trivial character acts as 1."""
    n = family.algebra.dim
    trivial = family.dual.trivial
    if trivial in family.maps and family.maps[trivial] != Matrix.identity(n):
        return False, f"{trivial.name} does not act as the identity"
    for chi, m in family.maps.items():
        for psi, p in family.maps.items():
            both = chi * psi
            if both in family.maps and family.maps[both] != m @ p:
                return False, f"({chi.name} {psi.name})* differs from {chi.name}* {psi.name}*"
    return True, "homomorphism law holds"


def eigenspaces(family: ActionFamily) -> dict[GroupElement, Subspace]:
    """L_g = intersection over generating characters of ker(chi* - chi(g)); nonzero ones only."""
    ok, detail = check_family(family)
    if not ok:
        raise ValidationError(f"automorphism family rejected: {detail}")
    n = family.algebra.dim
    generators = family.dual.generators
    out = {}
    for g in family.group:
        space = Subspace.full(n)
        for chi in generators:
            shifted = family.maps[chi] - Matrix.diagonal([chi(g)] * n)
            space = space.intersection(Subspace(n, kernel(shifted)))
            if space.is_zero():
                break
        if not space.is_zero():
            out[g] = space
    total = sum(s.dim for s in out.values())
    if total != n:
        raise ValidationError(
            "simultaneous eigenspaces do not exhaust the algebra",
            {"dims": {g.name: s.dim for g, s in out.items()}, "dim": n},
        )
    return out


def action_to_grading(algebra: LieAlgebra, family: ActionFamily) -> Grading:
    """Grading whose fibers are the simultaneous eigenspaces of the family.

    When every eigenspace basis vector is a unit vector the grading lives on
    ``algebra`` itself; otherwise the algebra is rewritten in the eigenbasis
    (fibers in group-element order) and the grading is returned on that copy.
    """
    if family.algebra is not algebra and family.algebra.constants != algebra.constants:
        raise PreconditionError("the family acts on a different algebra")
    spaces = eigenspaces(family)
    vectors: list[Vector] = []
    degrees: list[GroupElement] = []
    for g in sorted(spaces):
        for v in spaces[g].basis:
            vectors.append(tuple(demote(c) for c in v))
            degrees.append(g)
    units = [unit_index(v) for v in vectors]
    if None not in units:
        by_index = [None] * algebra.dim
        for k, g in zip(units, degrees):
            by_index[k] = g
        return Grading(algebra, family.group, by_index)
    names = basis_names(algebra, vectors, "w")
    rebased = algebra.change_basis(vectors, names, f"{algebra.label} in eigenbasis")
    logger.debug("eigenbasis of %s is not the input basis; rewrote the structure constants", algebra.label)
    return Grading(rebased, family.group, degrees)


def stable_subspace_check(v: Subspace, family: ActionFamily) -> tuple[bool, Optional[str]]:
    """(True, None) iff chi*(V) = V for every map; otherwise the first failing character name."""
    for chi in family.dual:
        m = family.maps.get(chi)
        if m is None:
            continue
        if not all(v.contains(m.apply(x)) for x in v.basis):
            return False, chi.name
    return True, None


def family_from_maps(algebra: LieAlgebra, group: FiniteGroup, maps: Mapping[str, Matrix]) -> ActionFamily:
    """Family from character names to matrices; rejects infinite or non-abelian groups through the dual."""
    dual = dual_group(group)
    family = ActionFamily(algebra, group, dual, {dual.character(name): m for name, m in maps.items()})
    ok, detail = check_family(family)
    if not ok:
        raise ValidationError(f"automorphism family rejected: {detail}")
    return family
