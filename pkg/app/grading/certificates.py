"""Certificates that nonzero products only involve commuting degrees.

A failure here contradicts a theorem, so it is reported as InvariantViolation
with the offending degrees rather than returned as a result.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from core.config import config
from core.errors import InvariantViolation, PreconditionError
from grading.grading import GradedSubspace, Grading, graded_ideal_generated
from groups.finite_group import GroupElement
from linalg.subspace import Subspace

logger = logging.getLogger(__name__)


@dataclass
class ChainCertificate:
    """Outcome of the chain enumeration: every nonzero chain had pairwise commuting degrees."""

    max_chain: int
    support: list[str]
    chains_examined: int = 0
    nonzero_chains: int = 0

    def to_document(self) -> dict:
        return {
            "max_chain": self.max_chain,
            "support": self.support,
            "chains_examined": self.chains_examined,
            "nonzero_chains": self.nonzero_chains,
        }


@dataclass
class IdealProductCertificate:
    """[Id(L_g), Id(L_h)] = 0 for a noncommuting pair g, h."""

    g: GroupElement
    h: GroupElement
    ideal_g: GradedSubspace
    ideal_h: GradedSubspace
    product_dim: int = 0

    def to_document(self) -> dict:
        return {
            "pair": [self.g.name, self.h.name],
            "ideal_dims": [self.ideal_g.dim, self.ideal_h.dim],
            "product_dim": self.product_dim,
        }


def check_lemma1(grading: Grading, max_chain: Optional[int] = None) -> ChainCertificate:
    """Enumerate degree tuples over the support up to ``max_chain``; nonzero products need commuting degrees.

    Extensions of a zero product are zero, so a branch is cut as soon as the
    running left-normed product vanishes.
    """
    if max_chain is None:
        max_chain = config.max_chain
    if max_chain < 2:
        raise PreconditionError(f"chain length must be at least 2, got {max_chain}")
    algebra = grading.algebra
    support = grading.support()
    fibers = {g: grading.fiber(g) for g in support}
    certificate = ChainCertificate(max_chain, [g.name for g in support])

    def extend(chain: list[GroupElement], current: Subspace):
        for g in support:
            product = algebra.product_subspace(current, fibers[g])
            certificate.chains_examined += 1
            if product.is_zero():
                continue
            degrees = chain + [g]
            certificate.nonzero_chains += 1
            for a in degrees:
                if not a.commutes_with(g):
                    raise InvariantViolation(
                        "nonzero chain product with noncommuting degrees",
                        {"chain": [d.name for d in degrees], "pair": [a.name, g.name]},
                    )
            if len(degrees) < max_chain:
                extend(degrees, product)

    for g in support:
        extend([g], fibers[g])
    logger.debug(
        "chain check up to %d: %d products, %d nonzero",
        max_chain, certificate.chains_examined, certificate.nonzero_chains,
    )
    return certificate


def check_lemma2(grading: Grading, g: GroupElement, h: GroupElement) -> IdealProductCertificate:
    """For noncommuting g, h in the support the ideals generated by L_g and L_h annihilate each other."""
    if g.commutes_with(h):
        raise PreconditionError(f"{g.name} and {h.name} commute", {"pair": [g.name, h.name]})
    support = grading.support()
    for x in (g, h):
        if x not in support:
            raise PreconditionError(f"{x.name} is not in the support", {"element": x.name})
    algebra = grading.algebra
    ideal_g = graded_ideal_generated(grading, grading.fiber(g).basis)
    ideal_h = graded_ideal_generated(grading, grading.fiber(h).basis)
    product = algebra.product_subspace(ideal_g.subspace, ideal_h.subspace)
    if not product.is_zero():
        raise InvariantViolation(
            "ideals generated by noncommuting components do not annihilate each other",
            {"pair": [g.name, h.name], "product_dim": product.dim},
        )
    return IdealProductCertificate(g, h, ideal_g, ideal_h, 0)


def check_lemma2_all(grading: Grading) -> list[IdealProductCertificate]:
    """Certificates for every noncommuting pair of the support, in element order."""
    support = grading.support()
    out = []
    for i, g in enumerate(support):
        for h in support[i + 1:]:
            if not g.commutes_with(h):
                out.append(check_lemma2(grading, g, h))
    return out
