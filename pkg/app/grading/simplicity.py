"""Graded simplicity: [L,L] != 0 and no proper nonzero graded ideals."""

from __future__ import annotations

import logging

from grading.grading import Grading
from lie.killing import radical
from structure.decomposition import graded_simple_decomposition

logger = logging.getLogger(__name__)


def is_graded_simple(grading: Grading) -> tuple[bool, str]:
    """Checked in order: [L,L], radical, support commutativity, number of graded-simple blocks."""
    algebra = grading.algebra
    if algebra.is_abelian():
        return False, "[L,L]=0"
    rad = radical(algebra)
    if not rad.is_zero():
        return False, f"radical has dimension {rad.dim}"
    commutative, pair = grading.support_is_commutative()
    if not commutative:
        return False, f"support is not commutative: {pair[0].name} and {pair[1].name} do not commute"
    blocks = graded_simple_decomposition(grading, classify=False)
    if len(blocks) != 1:
        return False, f"{len(blocks)} graded-simple blocks"
    block = blocks[0]
    logger.debug("%r is graded simple with %d simple summands", grading, block.count)
    return True, f"one graded-simple block with {block.count} simple summand(s)"
