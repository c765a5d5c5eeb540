"""Centroid of an algebra and the splitting of a semisimple algebra into simple ideals."""

from __future__ import annotations

import logging
from functools import lru_cache

from core.errors import InvariantViolation, PreconditionError, ScopeError
from lie.algebra import LieAlgebra
from lie.killing import is_semisimple
from linalg.matrix import Matrix, characteristic_polynomial, kernel, rational_factors
from linalg.sparse import SparseSystem
from linalg.subspace import Subspace

logger = logging.getLogger(__name__)


def centroid(algebra: LieAlgebra) -> list[Matrix]:
    """Basis of {phi : phi([x, y]) = [phi(x), y]} as n x n matrices.

    The unknown phi[r][s] has index r * n + s. For basis vectors b_i, b_j and
    output coordinate m the condition reads
    sum_k c_ij^k phi[m][k] - sum_k phi[k][i] c_kj^m = 0.
    """
    n = algebra.dim
    system = SparseSystem(n * n)
    c = algebra.constants
    for i in range(n):
        for j in range(n):
            for m in range(n):
                row: dict[int, object] = {}
                for k, value in enumerate(c[i][j]):
                    if value:
                        key = m * n + k
                        row[key] = row.get(key, 0) + value
                for k in range(n):
                    value = c[k][j][m]
                    if value:
                        key = k * n + i
                        row[key] = row.get(key, 0) - value
                if row:
                    system.add(row, 0, (i, j, m))
    basis = [Matrix(n, n, v) for v in system.kernel()]
    logger.debug("centroid of %s has dimension %d", algebra.label, len(basis))
    return basis


@lru_cache(maxsize=64)
def simple_decomposition(algebra: LieAlgebra) -> tuple[Subspace, ...]:
    """Simple ideals of a semisimple algebra, ordered by their first pivot.

    Every centroid element acts by a scalar on each simple ideal, so the
    eigenspaces of a centroid basis refine L into the simple ideals.
    """
    if not is_semisimple(algebra):
        raise PreconditionError("simple decomposition needs a semisimple algebra", {"algebra": algebra.label})
    n = algebra.dim
    if n == 0:
        return ()
    if algebra.order > 1:
        raise ScopeError("simple decomposition needs rational structure constants")
    phis = centroid(algebra)
    pieces = [algebra.full()]
    for phi in phis:
        refined = []
        eigenspaces = []
        for coeffs, _ in rational_factors(characteristic_polynomial(phi)):
            if len(coeffs) != 2:
                raise ScopeError(
                    "non-split over Q(zeta_n): the centroid has an irreducible factor of degree "
                    f"{len(coeffs) - 1}",
                    {"algebra": algebra.label},
                )
            root = -coeffs[0]
            shifted = phi - Matrix.diagonal([root] * n)
            eigenspaces.append(Subspace(n, kernel(shifted)))
        if sum(e.dim for e in eigenspaces) != n:
            raise InvariantViolation("a centroid element is not diagonalizable", {"algebra": algebra.label})
        for piece in pieces:
            for space in eigenspaces:
                part = piece.intersection(space)
                if not part.is_zero():
                    refined.append(part)
        pieces = refined
    if len(pieces) != len(phis):
        raise InvariantViolation(
            "number of simple ideals differs from the centroid dimension",
            {"ideals": len(pieces), "centroid": len(phis)},
        )
    for piece in pieces:
        if not algebra.is_ideal(piece):
            raise InvariantViolation("a centroid eigenspace is not an ideal", {"dim": piece.dim})
    pieces.sort(key=lambda p: p.pivots)
    logger.debug("%s splits into simple ideals of dimensions %s", algebra.label, [p.dim for p in pieces])
    return tuple(pieces)
