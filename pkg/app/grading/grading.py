"""Gradings by finite groups on a homogeneous basis.

Every basis vector carries a degree, so each fiber L_g is the coordinate
subspace on the indices of degree g and a unit vector is always homogeneous.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Optional, Sequence

from core.errors import DimensionError, InvariantViolation, PreconditionError, ValidationError
from groups.finite_group import FiniteGroup, GroupElement, is_commutative_subset, subgroup_generated
from lie.algebra import LieAlgebra
from linalg.matrix import Vector, lin_comb
from linalg.scalars import ZERO
from linalg.subspace import Frame, Subspace

logger = logging.getLogger(__name__)


class Grading:
    """Degrees of the basis vectors of ``algebra`` in ``group``."""

    def __init__(self, algebra: LieAlgebra, group: FiniteGroup, degrees: Sequence[GroupElement],
                 check: bool = True):
        if len(degrees) != algebra.dim:
            raise PreconditionError(
                f"{algebra.dim} basis vectors need {algebra.dim} degrees, got {len(degrees)}"
            )
        for d in degrees:
            if d.group is not group:
                raise PreconditionError(f"degree {d.name} is not an element of {group.label}")
        self.algebra = algebra
        self.group = group
        self.degrees: tuple[GroupElement, ...] = tuple(degrees)
        self._fibers: dict[GroupElement, tuple[int, ...]] = {}
        for i, d in enumerate(self.degrees):
            self._fibers.setdefault(d, ())
            self._fibers[d] += (i,)
        if check:
            self.validate()

    def validate(self):
        """Every bracket [b_i, b_j] must lie in L_(deg i * deg j)."""
        n = self.algebra.dim
        for i in range(n):
            for j in range(n):
                target = self.degrees[i] * self.degrees[j]
                for k, c in enumerate(self.algebra.constants[i][j]):
                    if c and self.degrees[k] != target:
                        names = self.algebra.names
                        raise ValidationError(
                            f"[{names[i]}, {names[j]}] has a component along {names[k]} of degree "
                            f"{self.degrees[k].name}, expected degree {target.name}",
                            {
                                "pair": [names[i], names[j]],
                                "stray": names[k],
                                "stray_degree": self.degrees[k].name,
                                "expected_degree": target.name,
                            },
                        )

    # -------------------- fibers --------------------
    def fiber_indices(self, g: GroupElement) -> tuple[int, ...]:
        return self._fibers.get(g, ())

    def fiber(self, g: GroupElement) -> Subspace:
        return Subspace.coordinate(self.algebra.dim, self.fiber_indices(g))

    def support(self) -> list[GroupElement]:
        """Degrees with a nonzero fiber, in group-element order."""
        return sorted(self._fibers)

    def generated_support_subgroup(self) -> frozenset[GroupElement]:
        support = self.support()
        return subgroup_generated(support) if support else frozenset({self.group.one})

    def support_is_commutative(self) -> tuple[bool, Optional[tuple[GroupElement, GroupElement]]]:
        return is_commutative_subset(self.support())

    def project(self, v: Sequence[Any], g: GroupElement) -> Vector:
        """Component of v in L_g."""
        self.algebra.check_vector(v)
        keep = set(self.fiber_indices(g))
        return tuple(c if k in keep else ZERO for k, c in enumerate(v))

    def components(self, v: Sequence[Any]) -> dict[GroupElement, Vector]:
        """Nonzero homogeneous components of v."""
        out = {}
        for g in self.support():
            p = self.project(v, g)
            if any(p):
                out[g] = p
        return out

    def degree_of(self, v: Sequence[Any]) -> Optional[GroupElement]:
        """Degree of a nonzero homogeneous vector; None for zero or mixed vectors."""
        self.algebra.check_vector(v)
        found = {self.degrees[k] for k, c in enumerate(v) if c}
        return next(iter(found)) if len(found) == 1 else None

    def is_homogeneous(self, v: Sequence[Any]) -> bool:
        return not any(v) or self.degree_of(v) is not None

    def __repr__(self) -> str:
        return f"Grading({self.algebra.label} by {self.group.label})"


def validate(algebra: LieAlgebra, group: FiniteGroup, degrees: Sequence[GroupElement] | Mapping[str, str]) -> Grading:
    """Grading from degrees per basis index or a name -> element-name map."""
    if isinstance(degrees, Mapping):
        missing = [name for name in algebra.names if name not in degrees]
        if missing:
            raise PreconditionError("basis vectors without a degree", {"basis": missing})
        extra = [name for name in degrees if name not in algebra.names]
        if extra:
            raise PreconditionError("degrees given for unknown basis vectors", {"basis": extra})
        degrees = [group.element(degrees[name]) for name in algebra.names]
    grading = Grading(algebra, group, degrees)
    logger.debug("validated %r with support %s", grading, [g.name for g in grading.support()])
    return grading


def trivial_grading(algebra: LieAlgebra, group: FiniteGroup) -> Grading:
    return Grading(algebra, group, [group.one] * algebra.dim)


@dataclass
class GradedSubspace:
    """V = sum of its components V ∩ L_g, each stored inside its fiber."""

    grading: Grading
    components: dict[GroupElement, Subspace] = field(default_factory=dict)

    @property
    def subspace(self) -> Subspace:
        total = Subspace.zero(self.grading.algebra.dim)
        for part in self.components.values():
            total = total.sum(part)
        return total

    @property
    def dim(self) -> int:
        return sum(part.dim for part in self.components.values())

    def support(self) -> list[GroupElement]:
        return sorted(g for g, part in self.components.items() if not part.is_zero())

    def homogeneous_basis(self) -> list[tuple[Vector, GroupElement]]:
        """Canonical basis of each component, components in group-element order."""
        return [(v, g) for g in self.support() for v in self.components[g].basis]

    def contains(self, v: Sequence[Any]) -> bool:
        return self.subspace.contains(v)


def is_graded_subspace(v: Subspace, grading: Grading) -> tuple[bool, Optional[GradedSubspace]]:
    """(True, decomposition) when V equals the sum of its fiber projections, else (False, None)."""
    if v.ambient != grading.algebra.dim:
        raise DimensionError(f"subspace of K^{v.ambient} in an algebra of dimension {grading.algebra.dim}")
    components = {}
    for g in grading.support():
        part = Subspace(v.ambient, [grading.project(x, g) for x in v.basis])
        if not part.is_subspace_of(v):
            return False, None
        if not part.is_zero():
            components[g] = part
    return True, GradedSubspace(grading, components)


def graded(v: Subspace, grading: Grading, what: str = "subspace") -> GradedSubspace:
    """Decomposition of a subspace that a theorem says is graded; raises InvariantViolation otherwise."""
    ok, decomposition = is_graded_subspace(v, grading)
    if not ok:
        raise InvariantViolation(f"the {what} is not a graded subspace", {"dim": v.dim})
    return decomposition


def chain_product(grading: Grading, degrees: Sequence[GroupElement]) -> Subspace:
    """Left-normed product [L_g1, ..., L_gm]; stops early once it is zero."""
    if not degrees:
        raise PreconditionError("chain product needs at least one degree")
    algebra = grading.algebra
    current = grading.fiber(degrees[0])
    for g in degrees[1:]:
        if current.is_zero():
            break
        current = algebra.product_subspace(current, grading.fiber(g))
    return current


def graded_ideal_generated(grading: Grading, vectors: Iterable[Sequence[Any]]) -> GradedSubspace:
    """Smallest ideal containing homogeneous seeds; spinning with homogeneous basis vectors keeps it graded."""
    seeds = [tuple(v) for v in vectors]
    for v in seeds:
        if not grading.is_homogeneous(v):
            raise PreconditionError("seed vector is not homogeneous", {"vector": [str(c) for c in v]})
    ideal = grading.algebra.ideal_generated(seeds)
    return graded(ideal, grading, "ideal generated by homogeneous elements")


def graded_subalgebra_generated(grading: Grading, vectors: Iterable[Sequence[Any]]) -> GradedSubspace:
    seeds = [tuple(v) for v in vectors]
    for v in seeds:
        if not grading.is_homogeneous(v):
            raise PreconditionError("generator is not homogeneous", {"vector": [str(c) for c in v]})
    sub = grading.algebra.subalgebra_generated(seeds)
    return graded(sub, grading, "subalgebra generated by homogeneous elements")


def centralizer_is_graded(grading: Grading, v: Sequence[Any]) -> bool:
    """Centralizer of a homogeneous vector; graded by the commutation argument on supports."""
    if not grading.is_homogeneous(v):
        raise PreconditionError("centralizer gradedness is asserted for homogeneous vectors only")
    return is_graded_subspace(grading.algebra.centralizer([v]), grading)[0]


@dataclass
class Restriction:
    """Grading induced on a graded subalgebra, written in its homogeneous basis."""

    grading: Grading
    frame: Frame

    def embed(self, coords: Sequence[Any]) -> Vector:
        return lin_comb(coords, self.frame.vectors, self.frame.ambient)

    def embed_subspace(self, v: Subspace) -> Subspace:
        return Subspace(self.frame.ambient, [self.embed(x) for x in v.basis])


def unit_index(v: Sequence[Any]) -> Optional[int]:
    """k when v is the k-th unit vector, else None."""
    nonzero = [k for k, c in enumerate(v) if c]
    if len(nonzero) == 1 and v[nonzero[0]] == 1:
        return nonzero[0]
    return None


def basis_names(algebra: LieAlgebra, vectors: Sequence[Sequence[Any]], prefix: str) -> list[str]:
    """Distinct names for a new basis: unit vectors keep their names, others get prefix + position.

    A generated name that is already a basis name of ``algebra`` or of the new
    basis is primed until it is free.
    """
    units = [unit_index(v) for v in vectors]
    taken = set(algebra.names)
    names = []
    for idx, k in enumerate(units):
        if k is not None:
            names.append(algebra.names[k])
            continue
        name = f"{prefix}{idx}"
        while name in taken:
            name += "'"
        taken.add(name)
        names.append(name)
    return names


def restrict(grading: Grading, sub: GradedSubspace, label: Optional[str] = None) -> Restriction:
    """Algebra on the homogeneous basis of a graded subalgebra, with inherited degrees.

    Unit vectors keep their names; others are named by position, see basis_names.
    """
    pairs = sub.homogeneous_basis()
    algebra = grading.algebra
    names = basis_names(algebra, [v for v, _ in pairs], "v")
    inner, frame = algebra.subalgebra([v for v, _ in pairs], names, label or f"graded subalgebra of {algebra.label}")
    return Restriction(Grading(inner, grading.group, [g for _, g in pairs]), frame)


def quotient_grading(grading: Grading, ideal: GradedSubspace) -> tuple[Grading, Any]:
    """Grading induced on L/I for a graded ideal I; representatives are unit vectors."""
    quotient = grading.algebra.quotient(ideal.subspace)
    degrees = [grading.degrees[k] for k in quotient.indices]
    return Grading(quotient.algebra, grading.group, degrees), quotient
