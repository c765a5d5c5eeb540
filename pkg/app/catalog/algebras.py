"""Standard algebras with split rational structure constants.

Matrix algebras are built from explicit matrices: brackets are matrix
commutators, read back in the basis through a coordinate frame on the
flattened entries.
"""

from __future__ import annotations

import logging
from typing import Sequence

from core.errors import PreconditionError, ScopeError, ValidationError
from lie.algebra import LieAlgebra
from linalg.matrix import Matrix, kernel
from linalg.scalars import ZERO, demote
from linalg.subspace import Frame

logger = logging.getLogger(__name__)


def elementary(n: int, i: int, j: int) -> Matrix:
    return Matrix(n, n, [1 if (r, c) == (i, j) else 0 for r in range(n) for c in range(n)])


def matrix_algebra(names: Sequence[str], matrices: Sequence[Matrix], label: str) -> LieAlgebra:
    """Algebra spanned by square matrices closed under the commutator."""
    frame = Frame([m.entries for m in matrices])
    table = []
    for a in matrices:
        row = []
        for b in matrices:
            c = a @ b - b @ a
            if not frame.contains(c.entries):
                raise ValidationError("matrices are not closed under the commutator", {"algebra": label})
            row.append(tuple(demote(x) for x in frame.coordinates(c.entries)))
        table.append(row)
    return LieAlgebra(names, table, label)


def sl_n(n: int) -> LieAlgebra:
    """sl_n on E_ij (i < j), then E_ij (i > j), then H_i = E_ii - E_(i+1)(i+1).

    For n = 2 the basis is named e, f, h; otherwise e{i}{j} and h{i}, 1-based.
    """
    if n < 2:
        raise PreconditionError(f"sl_n needs n >= 2, got {n}")
    upper = [(i, j) for i in range(n) for j in range(n) if i < j]
    lower = [(i, j) for i in range(n) for j in range(n) if i > j]
    matrices = [elementary(n, i, j) for i, j in upper + lower]
    matrices += [elementary(n, i, i) - elementary(n, i + 1, i + 1) for i in range(n - 1)]
    if n == 2:
        names = ["e", "f", "h"]
    else:
        names = [f"e{i + 1}{j + 1}" for i, j in upper + lower] + [f"h{i + 1}" for i in range(n - 1)]
    return matrix_algebra(names, matrices, f"sl{n}")


def sl2() -> LieAlgebra:
    return sl_n(2)


def so_n(n: int) -> LieAlgebra:
    """so_n preserving the antidiagonal form J, so the diagonal part is a split Cartan subalgebra."""
    if n != 5:
        raise ScopeError(f"so_n is available for n = 5 only, got {n}")
    j = Matrix(n, n, [1 if r + c == n - 1 else 0 for r in range(n) for c in range(n)])
    # X -> X^T J + J X on the n*n entries of X
    columns = []
    for r in range(n):
        for c in range(n):
            x = elementary(n, r, c)
            columns.append((x.transpose() @ j + j @ x).entries)
    condition = Matrix.from_columns(columns, n * n)
    matrices = [Matrix(n, n, v) for v in kernel(condition)]
    names = [f"s{k}" for k in range(len(matrices))]
    return matrix_algebra(names, matrices, f"so{n}")


def abelian(n: int) -> LieAlgebra:
    if n < 0:
        raise PreconditionError(f"dimension must be nonnegative, got {n}")
    names = [f"a{i}" for i in range(n)]
    return LieAlgebra(names, [[[ZERO] * n for _ in range(n)] for _ in range(n)], f"abelian({n})")


def two_dim_solvable() -> LieAlgebra:
    """[x, y] = y."""
    return LieAlgebra.from_brackets(["x", "y"], {(0, 1): {1: 1}}, "solvable(2)")


def natural_sl2_module() -> list[Matrix]:
    """Action of e, f, h on Q^2 = span(v1, v2): h v1 = v1, h v2 = -v2, e v2 = v1, f v1 = v2."""
    return [elementary(2, 0, 1), elementary(2, 1, 0), Matrix.diagonal([1, -1])]


def semidirect(base: LieAlgebra, action: Sequence[Matrix], module_names: Sequence[str],
               label: str | None = None) -> LieAlgebra:
    """base ⋉ V with [b_i, v_k] = action[i] v_k and [V, V] = 0.

    ``action`` must be a representation: action of [b_i, b_j] equals the
    commutator of the action matrices.
    """
    if len(action) != base.dim:
        raise PreconditionError(f"{base.dim} action matrices required, got {len(action)}")
    m = len(module_names)
    for a in action:
        if a.rows != m or a.cols != m:
            raise PreconditionError(f"action matrices must be {m}x{m}")
    for i in range(base.dim):
        for k in range(i + 1, base.dim):
            image = Matrix.zeros(m, m)
            for t, c in enumerate(base.constants[i][k]):
                if c:
                    image = image + action[t].scale(c)
            if image != action[i] @ action[k] - action[k] @ action[i]:
                raise ValidationError(
                    "module action does not respect the bracket",
                    {"pair": [base.names[i], base.names[k]]},
                )
    n = base.dim + m
    brackets: dict[tuple[int, int], dict[int, object]] = {}
    for i in range(base.dim):
        for k in range(i + 1, base.dim):
            result = {t: c for t, c in enumerate(base.constants[i][k]) if c}
            if result:
                brackets[(i, k)] = result
        for v in range(m):
            column = action[i].column(v)
            result = {base.dim + t: c for t, c in enumerate(column) if c}
            if result:
                brackets[(i, base.dim + v)] = result
    algebra = LieAlgebra.from_brackets(list(base.names) + list(module_names), brackets,
                                       label or f"{base.label} semidirect Q^{m}")
    logger.debug("built %s of dimension %d", algebra.label, n)
    return algebra
