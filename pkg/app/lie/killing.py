"""Killing form, solvable radical and semisimplicity."""

from __future__ import annotations

import logging
from functools import lru_cache

from core.errors import InvariantViolation
from lie.algebra import LieAlgebra
from linalg.matrix import Matrix, kernel
from linalg.scalars import ZERO
from linalg.subspace import Subspace

logger = logging.getLogger(__name__)


@lru_cache(maxsize=128)
def killing_form(algebra: LieAlgebra) -> Matrix:
    """kappa(b_i, b_j) = trace(ad b_i ad b_j), symmetric."""
    n = algebra.dim
    ads = algebra.ad_basis
    values = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            # trace(A B) = sum_{k,l} A[k,l] B[l,k]
            a, b = ads[i], ads[j]
            total = ZERO
            for k in range(n):
                for l in range(n):
                    x = a.entries[k * n + l]
                    if x:
                        y = b.entries[l * n + k]
                        if y:
                            total = total + x * y
            values[i][j] = total
            values[j][i] = total
    return Matrix.from_rows(values, n)


def killing_value(algebra: LieAlgebra, x, y):
    ky = killing_form(algebra).apply(y)
    total = ZERO
    for a, b in zip(x, ky):
        if a and b:
            total = total + a * b
    return total


def killing_rank(algebra: LieAlgebra) -> int:
    return killing_form(algebra).rank()


def is_semisimple(algebra: LieAlgebra) -> bool:
    """Cartan's criterion: the Killing form is nondegenerate."""
    return killing_rank(algebra) == algebra.dim


@lru_cache(maxsize=128)
def radical(algebra: LieAlgebra) -> Subspace:
    """Killing-orthogonal of [L, L]; checked to be a solvable ideal before it is returned."""
    n = algebra.dim
    derived = algebra.product_subspace(algebra.full(), algebra.full())
    if derived.is_zero():
        return algebra.full()
    k = killing_form(algebra)
    rows = [k.apply(y) for y in derived.basis]
    rad = Subspace(n, kernel(Matrix.from_rows(rows, n)))
    if not algebra.is_ideal(rad):
        raise InvariantViolation(
            "Killing-orthogonal of [L,L] is not an ideal", {"algebra": algebra.label, "dim": rad.dim}
        )
    if not algebra.is_solvable(rad):
        raise InvariantViolation(
            "Killing-orthogonal of [L,L] is not solvable", {"algebra": algebra.label, "dim": rad.dim}
        )
    logger.debug("radical of %s has dimension %d", algebra.label, rad.dim)
    return rad
