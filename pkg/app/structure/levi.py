"""Graded radical and a Levi subalgebra with a homogeneous basis.

The Levi factor is found by correcting a homogeneous complement of the
radical R stage by stage along the derived series R = R_0 > R_1 > ... > 0.
At stage t each complement vector s_c is replaced by s_c + sum_m x_cm w_m,
where w_m runs over a homogeneous complement of R_(t+1) in R_t and x_cm may be
nonzero only when deg w_m = deg s_c. The unknowns enter linearly because
[R_t, R_t] lies in R_(t+1).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from core.errors import InvariantViolation
from grading.grading import GradedSubspace, Grading, graded, graded_subalgebra_generated, is_graded_subspace, \
    quotient_grading, restrict
from groups.finite_group import GroupElement
from lie.killing import is_semisimple, radical
from linalg.matrix import Vector, lin_comb
from linalg.scalars import ZERO
from linalg.sparse import SparseSystem
from linalg.subspace import Frame, Subspace, complement_basis
from structure.decomposition import graded_simple_decomposition

logger = logging.getLogger(__name__)

GLOBAL = "global"
BLOCK_RESTRICTED = "block-restricted"


@dataclass
class RadicalCertificate:
    dim: int
    components: dict[str, int]
    ideal: bool
    solvable: bool

    def to_document(self) -> dict:
        return {"dim": self.dim, "components": self.components, "ideal": self.ideal, "solvable": self.solvable}


@dataclass
class LeviCertificate:
    basis: list[tuple[Vector, GroupElement]]
    path: str
    stages: int
    homogeneous: bool
    meets_radical_trivially: bool
    dimensions_add_up: bool
    closed: bool
    semisimple: bool

    @property
    def ok(self) -> bool:
        return (self.homogeneous and self.meets_radical_trivially and self.dimensions_add_up
                and self.closed and self.semisimple)

    def to_document(self) -> dict:
        return {
            "path": self.path,
            "stages": self.stages,
            "homogeneous": self.homogeneous,
            "meets_radical_trivially": self.meets_radical_trivially,
            "dimensions_add_up": self.dimensions_add_up,
            "closed": self.closed,
            "semisimple": self.semisimple,
        }


def radical_gradedness(grading: Grading) -> tuple[GradedSubspace, RadicalCertificate]:
    """Radical of L with its fiber decomposition; a non-graded radical is an invariant violation."""
    algebra = grading.algebra
    rad = radical(algebra)
    decomposition = graded(rad, grading, "radical")
    certificate = RadicalCertificate(
        rad.dim,
        {g.name: part.dim for g, part in decomposition.components.items() if not part.is_zero()},
        algebra.is_ideal(rad),
        algebra.is_solvable(rad),
    )
    logger.debug("radical of %s: dim %d, components %s", algebra.label, rad.dim, certificate.components)
    return decomposition, certificate


def _put(row: dict, unknown: dict, key: tuple[int, int], value):
    idx = unknown.get(key)
    if idx is not None and value:
        row[idx] = row.get(idx, ZERO) + value


def _stage(grading: Grading, basis: list[Vector], degrees: list[GroupElement],
           upper: Subspace, lower: Subspace, stage: int) -> Optional[list[Vector]]:
    """Correct ``basis`` so that it closes modulo ``lower``; None when the fiberwise system is inconsistent."""
    algebra = grading.algebra
    n = algebra.dim
    k = len(basis)
    w = complement_basis(lower, upper)
    if not w:
        return basis
    w_degrees = [grading.degree_of(v) for v in w]
    frame = Frame(basis + w + list(lower.basis), n)

    unknown: dict[tuple[int, int], int] = {}
    for c in range(k):
        for m in range(len(w)):
            if w_degrees[m] == degrees[c]:
                unknown[(c, m)] = len(unknown)
    if not unknown:
        logger.debug("stage %d: no degree-compatible unknowns", stage)

    def coords(v):
        x = frame.coordinates(v)
        return x[:k], x[k:k + len(w)]

    with_w = [[coords(algebra.bracket(basis[a], wt))[1] for wt in w] for a in range(k)]
    system = SparseSystem(len(unknown))
    for a in range(k):
        for b in range(a + 1, k):
            gamma, delta = coords(algebra.bracket(basis[a], basis[b]))
            degree = degrees[a] * degrees[b]
            for m in range(len(w)):
                row: dict[int, object] = {}
                for t in range(len(w)):
                    _put(row, unknown, (b, t), with_w[a][t][m])
                    _put(row, unknown, (a, t), -with_w[b][t][m])
                for c in range(k):
                    _put(row, unknown, (c, m), -gamma[c])
                system.add(row, -delta[m], {"pair": [a, b], "w": m, "degree": degree.name, "stage": stage})
    if not system.is_consistent:
        logger.debug("stage %d inconsistent at %r", stage, system.inconsistent)
        return None
    x = system.solution()
    corrected = []
    for c in range(k):
        coeffs = [x[unknown[(c, m)]] if (c, m) in unknown else ZERO for m in range(len(w))]
        correction = lin_comb(coeffs, w, n)
        corrected.append(tuple(s + d for s, d in zip(basis[c], correction)))
    logger.debug("stage %d: %d unknowns, %d equations, rank %d", stage, len(unknown), system.equations, system.rank)
    return corrected


def _global_levi(grading: Grading, rad: Subspace) -> Optional[tuple[list[Vector], int]]:
    algebra = grading.algebra
    basis = complement_basis(rad, algebra.full())
    degrees = [grading.degree_of(v) for v in basis]
    series = algebra.derived_series(rad)
    if not series[-1].is_zero():
        raise InvariantViolation("derived series of the radical does not reach zero", {"dims": [s.dim for s in series]})
    for t in range(len(series) - 1):
        graded(series[t + 1], grading, f"derived term {t + 1} of the radical")
        corrected = _stage(grading, basis, degrees, series[t], series[t + 1], t)
        if corrected is None:
            return None
        basis = corrected
    return basis, len(series) - 1


def _block_restricted_levi(grading: Grading, rad: GradedSubspace) -> Optional[tuple[list[Vector], int]]:
    """Solve inside C_i, the subalgebra generated by homogeneous preimage elements with degree in S_i.

    Returns the basis with the largest number of correction stages any block needed.
    """
    algebra = grading.algebra
    top, quotient = quotient_grading(grading, rad)
    basis: list[Vector] = []
    stages = 0
    for block in graded_simple_decomposition(top, classify=False):
        allowed = set(block.support)
        preimage = quotient.preimage(block.ideal.subspace)
        ok, parts = is_graded_subspace(preimage, grading)
        if not ok:
            raise InvariantViolation("preimage of a graded block is not graded", {"support": [g.name for g in allowed]})
        seeds = [v for g, part in parts.components.items() if g in allowed for v in part.basis]
        c_i = graded_subalgebra_generated(grading, seeds)
        inner = restrict(grading, c_i, f"C for block {sorted(block.members)}")
        inner_rad = radical(inner.grading.algebra)
        found = _global_levi(inner.grading, inner_rad)
        if found is None:
            return None
        basis.extend(inner.embed(v) for v in found[0])
        stages = max(stages, found[1])
    if not algebra.is_subalgebra(Subspace(algebra.dim, basis)):
        return None
    return basis, stages


def homogeneous_levi(grading: Grading) -> tuple[GradedSubspace, LeviCertificate]:
    """Levi subalgebra B with a homogeneous basis, L = B + R as vector spaces."""
    algebra = grading.algebra
    n = algebra.dim
    rad, _ = radical_gradedness(grading)
    found = _global_levi(grading, rad.subspace)
    path = GLOBAL
    stages = found[1] if found else 0
    basis = found[0] if found else None
    if basis is None:
        logger.info("global Levi correction failed on %s; restricting to graded blocks", algebra.label)
        path = BLOCK_RESTRICTED
        restricted = _block_restricted_levi(grading, rad)
        if restricted is None:
            raise InvariantViolation("homogeneous Levi correction system is inconsistent", {"algebra": algebra.label})
        basis, stages = restricted
    levi = Subspace(n, basis)
    degrees = [grading.degree_of(v) for v in basis]
    homogeneous = all(d is not None for d in degrees)
    if not homogeneous:
        raise InvariantViolation("Levi basis vector is not homogeneous",
                                 {"index": degrees.index(None)})
    closed = algebra.is_subalgebra(levi)
    inner_semisimple = closed and (levi.is_zero() or is_semisimple(algebra.subalgebra(basis)[0]))
    certificate = LeviCertificate(
        basis=list(zip(basis, degrees)),
        path=path,
        stages=stages,
        homogeneous=homogeneous,
        meets_radical_trivially=levi.intersection(rad.subspace).is_zero(),
        dimensions_add_up=levi.dim + rad.dim == n and len(basis) == levi.dim,
        closed=closed,
        semisimple=inner_semisimple,
    )
    if not certificate.ok:
        raise InvariantViolation("Levi certificate failed", certificate.to_document())
    logger.debug("Levi subalgebra of %s: dim %d via %s path", algebra.label, levi.dim, path)
    return graded(levi, grading, "Levi subalgebra"), certificate
