"""Full structure report: graded radical, homogeneous Levi factor, graded-simple blocks.

A serialized report carries coordinates only; ``certify_report`` re-checks
every claim against the algebra with subspace arithmetic and does not rerun
any of the constructions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Sequence

from core.errors import DocumentError
from grading.grading import GradedSubspace, Grading, graded, is_graded_subspace, restrict
from groups.finite_group import GroupElement, is_commutative_subset
from lie.killing import is_semisimple
from linalg.matrix import Vector
from linalg.scalars import format_scalar, parse_scalar
from linalg.subspace import Subspace
from structure.decomposition import GradedSimpleBlock, graded_simple_decomposition
from structure.levi import LeviCertificate, RadicalCertificate, homogeneous_levi, radical_gradedness

logger = logging.getLogger(__name__)


@dataclass
class StructureReport:
    grading: Grading
    radical: GradedSubspace
    radical_certificate: RadicalCertificate
    levi: GradedSubspace
    levi_certificate: LeviCertificate
    blocks: list[GradedSimpleBlock] = field(default_factory=list)

    @property
    def supports(self) -> list[list[GroupElement]]:
        return [block.support for block in self.blocks]

    def to_document(self) -> dict:
        return {
            "radical": {
                "basis": [vector_doc(v) for v in self.radical.subspace.basis],
                "components": {
                    g.name: [vector_doc(v) for v in part.basis]
                    for g, part in sorted(self.radical.components.items()) if not part.is_zero()
                },
                "certificate": self.radical_certificate.to_document(),
            },
            "levi": {
                "basis": [homogeneous_doc(v, g) for v, g in self.levi_certificate.basis],
                "certificate": self.levi_certificate.to_document(),
            },
            "blocks": [
                {
                    "support": [g.name for g in block.support],
                    "commutative": block.commutative,
                    "count": block.count,
                    "labels": block.labels,
                    "isomorphism": block.isomorphism,
                    "basis": [homogeneous_doc(v, g) for v, g in block.ideal.homogeneous_basis()],
                    "summands": [[vector_doc(v) for v in s.basis] for s in block.summands],
                }
                for block in self.blocks
            ],
        }


def vector_doc(v: Sequence[Any]) -> list:
    return [format_scalar(c) for c in v]


def homogeneous_doc(v: Sequence[Any], g: GroupElement) -> dict:
    return {"degree": g.name, "vector": vector_doc(v)}


def theorem1_report(grading: Grading) -> StructureReport:
    """Radical, homogeneous Levi subalgebra B and the graded-simple blocks of B, in L coordinates."""
    rad, rad_certificate = radical_gradedness(grading)
    levi, levi_certificate = homogeneous_levi(grading)
    blocks = []
    if levi.dim:
        inner = restrict(grading, levi, "Levi subalgebra")
        for block in graded_simple_decomposition(inner.grading):
            ideal = graded(inner.embed_subspace(block.ideal.subspace), grading, "graded-simple block")
            blocks.append(GradedSimpleBlock(
                ideal=ideal,
                members=block.members,
                summands=[inner.embed_subspace(s) for s in block.summands],
                support=block.support,
                commutative=block.commutative,
                labels=block.labels,
                isomorphism=block.isomorphism,
            ))
    logger.debug(
        "report for %r: radical %d, Levi %d, blocks %s",
        grading, rad.dim, levi.dim, [b.dim for b in blocks],
    )
    return StructureReport(grading, rad, rad_certificate, levi, levi_certificate, blocks)


# -------------------- certification --------------------

def _read_vectors(raw: Any, n: int, location: str) -> list[Vector]:
    if not isinstance(raw, list):
        raise DocumentError("expected a list of vectors", location)
    out = []
    for i, v in enumerate(raw):
        if not isinstance(v, list) or len(v) != n:
            raise DocumentError(f"expected a vector of length {n}", f"{location}[{i}]")
        out.append(tuple(parse_scalar(c, f"{location}[{i}][{j}]") for j, c in enumerate(v)))
    return out


def _read_homogeneous(raw: Any, grading: Grading, location: str) -> list[tuple[Vector, GroupElement]]:
    if not isinstance(raw, list):
        raise DocumentError("expected a list of homogeneous vectors", location)
    n = grading.algebra.dim
    out = []
    for i, item in enumerate(raw):
        where = f"{location}[{i}]"
        if not isinstance(item, dict) or "degree" not in item or "vector" not in item:
            raise DocumentError("expected {\"degree\", \"vector\"}", where)
        out.append((_read_vectors([item["vector"]], n, where)[0], grading.group.element(str(item["degree"]))))
    return out


def certify_report(grading: Grading, document: dict) -> tuple[bool, list[str]]:
    """Re-verify a serialized report; returns (all checks passed, failed check descriptions)."""
    algebra = grading.algebra
    n = algebra.dim
    failures: list[str] = []

    def check(condition: bool, message: str):
        if not condition:
            failures.append(message)

    try:
        rad_basis = _read_vectors(document["radical"]["basis"], n, "radical.basis")
        levi_pairs = _read_homogeneous(document["levi"]["basis"], grading, "levi.basis")
        raw_blocks = document["blocks"]
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"report is missing {exc}", "report") from exc

    rad = Subspace(n, rad_basis)
    check(rad.dim == len(rad_basis), "radical basis is linearly dependent")
    check(algebra.is_ideal(rad), "radical is not an ideal")
    check(algebra.is_solvable(rad), "radical is not solvable")
    check(is_graded_subspace(rad, grading)[0], "radical is not graded")
    if algebra.is_ideal(rad):
        check(is_semisimple(algebra.quotient(rad).algebra), "quotient by the radical is not semisimple")

    levi_basis = [v for v, _ in levi_pairs]
    levi = Subspace(n, levi_basis)
    for i, (v, g) in enumerate(levi_pairs):
        check(grading.degree_of(v) == g, f"Levi vector {i} is not homogeneous of degree {g.name}")
    check(levi.dim == len(levi_basis), "Levi basis is linearly dependent")
    check(levi.intersection(rad).is_zero(), "Levi subalgebra meets the radical")
    check(levi.dim + rad.dim == n, "Levi subalgebra and radical do not add up to L")
    closed = algebra.is_subalgebra(levi)
    check(closed, "Levi subspace is not closed under the bracket")
    if closed and levi.dim and levi.dim == len(levi_basis):
        check(is_semisimple(algebra.subalgebra(levi_basis)[0]), "Levi subalgebra is not semisimple")

    block_spaces = []
    for b, raw in enumerate(raw_blocks):
        where = f"blocks[{b}]"
        if not isinstance(raw, dict):
            raise DocumentError("expected a block object", where)
        pairs = _read_homogeneous(raw.get("basis"), grading, f"{where}.basis")
        for i, (v, g) in enumerate(pairs):
            check(grading.degree_of(v) == g, f"{where} vector {i} is not homogeneous of degree {g.name}")
        space = Subspace(n, [v for v, _ in pairs])
        block_spaces.append(space)
        check(space.is_subspace_of(levi), f"{where} is not inside the Levi subalgebra")
        check(all(space.contains(algebra.bracket(x, y)) for x in space.basis for y in levi.basis),
              f"{where} is not an ideal of the Levi subalgebra")
        support = sorted({g for _, g in pairs})
        check([g.name for g in support] == list(raw.get("support", [])), f"{where} support does not match its basis")
        check(is_commutative_subset(support)[0], f"{where} support is not commutative")
        summands = [Subspace(n, _read_vectors(s, n, f"{where}.summands[{k}]"))
                    for k, s in enumerate(raw.get("summands", []))]
        check(len({s.dim for s in summands}) <= 1, f"{where} simple summands differ in dimension")
        check(sum(s.dim for s in summands) == space.dim, f"{where} summands do not add up to the block")
    for a in range(len(block_spaces)):
        for c in range(a + 1, len(block_spaces)):
            check(algebra.product_subspace(block_spaces[a], block_spaces[c]).is_zero(),
                  f"blocks {a} and {c} do not commute")
    check(sum(s.dim for s in block_spaces) == levi.dim, "blocks do not add up to the Levi subalgebra")
    logger.debug("certified report: %d failures", len(failures))
    return not failures, failures
