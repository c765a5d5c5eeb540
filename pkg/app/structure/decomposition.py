"""Graded-simple blocks of a semisimple graded algebra.

The simple ideals B_1..B_n are grouped by a closure rule: starting from one
B_i, project the current sum onto every fiber and pull in each B_j that a
projection touches. A block is the smallest graded ideal containing any of
its members.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from core.errors import InvariantViolation, PreconditionError
from grading.grading import GradedSubspace, Grading, graded
from groups.finite_group import GroupElement, is_commutative_subset
from lie.centroid import simple_decomposition
from lie.classify import UNRECOGNIZED, classify_split_type
from lie.killing import is_semisimple, killing_rank
from linalg.subspace import Frame, Subspace

logger = logging.getLogger(__name__)

TYPE_LABELS = "type-labels"
WEAK = "weak"


@dataclass
class GradedSimpleBlock:
    """One graded-simple component H = B_i1 + ... + B_ik."""

    ideal: GradedSubspace
    members: tuple[int, ...]
    summands: list[Subspace]
    support: list[GroupElement]
    commutative: bool
    labels: list[Optional[str]] = field(default_factory=list)
    isomorphism: str = WEAK

    @property
    def count(self) -> int:
        return len(self.summands)

    @property
    def dim(self) -> int:
        return self.ideal.dim


class _Splitting:
    """Simple ideals of L with the coordinates of a vector along each of them."""

    def __init__(self, ideals: tuple[Subspace, ...], n: int):
        self.ideals = ideals
        self.frame = Frame([v for b in ideals for v in b.basis], n)
        self.bounds = []
        start = 0
        for b in ideals:
            self.bounds.append((start, start + b.dim))
            start += b.dim

    def touched(self, v) -> set[int]:
        c = self.frame.coordinates(v)
        return {j for j, (lo, hi) in enumerate(self.bounds) if any(c[lo:hi])}

    def span(self, members) -> Subspace:
        n = self.frame.ambient
        return Subspace(n, [v for j in sorted(members) for v in self.ideals[j].basis])


def _closure(grading: Grading, splitting: _Splitting, start: int) -> frozenset[int]:
    members = {start}
    support = grading.support()
    frontier = [start]
    while frontier:
        grown = set()
        for j in frontier:
            for v in splitting.ideals[j].basis:
                for g in support:
                    p = grading.project(v, g)
                    if any(p):
                        grown |= splitting.touched(p)
        frontier = sorted(grown - members)
        members |= grown
    return frozenset(members)


def _labels(grading: Grading, summands: list[Subspace]) -> list[Optional[str]]:
    algebra = grading.algebra
    if algebra.order > 1:
        return [None] * len(summands)
    return [classify_split_type(algebra, b) for b in summands]


def _isomorphism_certificate(grading: Grading, summands: list[Subspace], labels: list[Optional[str]]) -> str:
    if labels and all(x not in (None, UNRECOGNIZED) for x in labels):
        if len(set(labels)) != 1:
            raise InvariantViolation("simple summands of a graded-simple block have different types",
                                     {"labels": labels})
        return TYPE_LABELS
    algebra = grading.algebra
    dims = {b.dim for b in summands}
    ranks = {killing_rank(algebra.subalgebra(b.basis)[0]) for b in summands}
    if len(dims) != 1 or len(ranks) != 1:
        raise InvariantViolation(
            "simple summands of a graded-simple block are not isomorphic",
            {"dims": sorted(dims), "killing_ranks": sorted(ranks)},
        )
    return WEAK


def graded_simple_decomposition(grading: Grading, classify: bool = True) -> list[GradedSimpleBlock]:
    """Blocks ordered by their first simple ideal; each is checked graded with commutative support."""
    algebra = grading.algebra
    if not is_semisimple(algebra):
        raise PreconditionError("graded-simple decomposition needs a semisimple algebra",
                                {"algebra": algebra.label})
    if algebra.dim == 0:
        return []
    ideals = simple_decomposition(algebra)
    splitting = _Splitting(ideals, algebra.dim)
    assigned: set[int] = set()
    blocks = []
    for i in range(len(ideals)):
        if i in assigned:
            continue
        members = _closure(grading, splitting, i)
        for j in members:
            if j != i and _closure(grading, splitting, j) != members:
                raise InvariantViolation(
                    "a block is not graded-simple: closure depends on the starting summand",
                    {"block": sorted(members), "start": j},
                )
        if members & assigned:
            raise InvariantViolation("graded blocks overlap", {"block": sorted(members)})
        assigned |= members
        ideal = graded(splitting.span(members), grading, "graded-simple block")
        support = ideal.support()
        commutative, pair = is_commutative_subset(support)
        if not commutative:
            raise InvariantViolation(
                "graded-simple block with noncommutative support",
                {"support": [g.name for g in support], "pair": [pair[0].name, pair[1].name]},
            )
        summands = [ideals[j] for j in sorted(members)]
        labels = _labels(grading, summands) if classify else [None] * len(summands)
        certificate = _isomorphism_certificate(grading, summands, labels)
        blocks.append(GradedSimpleBlock(ideal, tuple(sorted(members)), summands, support, commutative,
                                        labels, certificate))
    logger.debug(
        "%s: %d simple ideals in %d graded-simple blocks", algebra.label, len(ideals), len(blocks)
    )
    return blocks
