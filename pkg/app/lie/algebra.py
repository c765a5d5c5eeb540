"""Lie algebras given by structure constants on a named basis.

Elements are coordinate tuples. ``constants[i][j]`` is the coordinate vector
of [b_i, b_j]; only the nonzero entries are kept for the bracket loops.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Mapping, Optional, Sequence

from core.errors import DimensionError, PreconditionError, ValidationError
from linalg.matrix import Matrix, Vector, inverse, kernel, lin_comb, unit_vector
from linalg.scalars import ZERO, Scalar, as_scalar, coerce, common_order, demote
from linalg.subspace import Frame, Subspace, complement_basis

logger = logging.getLogger(__name__)


class LieAlgebra:
    """Finite-dimensional Lie algebra; validated for antisymmetry and Jacobi on construction."""

    def __init__(self, names: Sequence[str], constants: Sequence[Sequence[Sequence[Any]]],
                 label: str = "algebra", validate: bool = True):
        n = len(names)
        if len(set(names)) != n:
            raise ValidationError("basis names must be distinct", {"basis": list(names)})
        if len(constants) != n or any(len(row) != n for row in constants):
            raise DimensionError(f"structure constants must form a {n}x{n} table")
        table = []
        for i, row in enumerate(constants):
            out_row = []
            for j, vec in enumerate(row):
                if len(vec) != n:
                    raise DimensionError(f"[{names[i]}, {names[j]}] has {len(vec)} coordinates, expected {n}")
                out_row.append(tuple(as_scalar(c) for c in vec))
            table.append(out_row)
        self.order = common_order(c for row in table for vec in row for c in vec)
        if self.order > 1:
            table = [[tuple(coerce(c, self.order) for c in vec) for vec in row] for row in table]
        self.names: tuple[str, ...] = tuple(names)
        self.label = label
        self.constants: tuple[tuple[Vector, ...], ...] = tuple(tuple(row) for row in table)
        self._sparse = tuple(
            tuple(tuple((k, c) for k, c in enumerate(vec) if c) for vec in row) for row in self.constants
        )
        if validate:
            self._validate()

    @classmethod
    def from_brackets(cls, names: Sequence[str], brackets: Mapping[tuple[int, int], Mapping[int, Any]],
                      label: str = "algebra", validate: bool = True) -> LieAlgebra:
        """Build from the i < j brackets; [b_j, b_i] and [b_i, b_i] are filled in."""
        n = len(names)
        table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j), result in brackets.items():
            if not (0 <= i < j < n):
                raise ValidationError(f"bracket ({i}, {j}) must satisfy 0 <= left < right < {n}", {"pair": [i, j]})
            for k, c in result.items():
                c = as_scalar(c)
                table[i][j][k] = table[i][j][k] + c
                table[j][i][k] = table[j][i][k] - c
        return cls(names, table, label, validate)

    def _validate(self):
        n = self.dim
        for i in range(n):
            if any(self.constants[i][i]):
                raise ValidationError(
                    f"[{self.names[i]}, {self.names[i]}] is not zero", {"pair": [self.names[i], self.names[i]]}
                )
            for j in range(i + 1, n):
                if any(a + b for a, b in zip(self.constants[i][j], self.constants[j][i])):
                    raise ValidationError(
                        f"antisymmetry fails for ({self.names[i]}, {self.names[j]})",
                        {"pair": [self.names[i], self.names[j]]},
                    )
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    total = [ZERO] * n
                    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                        for m, x in self._sparse[a][b]:
                            for t, y in self._sparse[m][c]:
                                total[t] = total[t] + x * y
                    if any(total):
                        triple = [self.names[i], self.names[j], self.names[k]]
                        raise ValidationError(
                            f"Jacobi identity fails for ({triple[0]}, {triple[1]}, {triple[2]})",
                            {"triple": triple},
                        )

    # -------------------- basics --------------------
    @property
    def dim(self) -> int:
        return len(self.names)

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise PreconditionError(f"{name!r} is not a basis element of {self.label}") from None

    def basis_vector(self, i: int | str) -> Vector:
        if isinstance(i, str):
            i = self.index_of(i)
        return unit_vector(self.dim, i)

    def basis(self) -> list[Vector]:
        return [unit_vector(self.dim, i) for i in range(self.dim)]

    def full(self) -> Subspace:
        return Subspace.full(self.dim)

    def zero(self) -> Subspace:
        return Subspace.zero(self.dim)

    def span(self, vectors: Iterable[Sequence[Any]]) -> Subspace:
        return Subspace(self.dim, vectors)

    def check_vector(self, v: Sequence[Any]):
        if len(v) != self.dim:
            raise DimensionError(f"vector of length {len(v)} in an algebra of dimension {self.dim}")

    def bracket(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        self.check_vector(x)
        self.check_vector(y)
        out = [ZERO] * self.dim
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            row = self._sparse[i]
            for j, b in ys:
                ab = None
                for k, c in row[j]:
                    if ab is None:
                        ab = a * b
                    out[k] = out[k] + ab * c
        return tuple(out)

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.constants[i][j]

    def left_normed(self, xs: Sequence[Sequence[Scalar]]) -> Vector:
        """[x_1, ..., x_n] = [[x_1, ..., x_(n-1)], x_n]."""
        if not xs:
            raise PreconditionError("left-normed product of an empty list")
        result = tuple(xs[0])
        self.check_vector(result)
        for x in xs[1:]:
            result = self.bracket(result, x)
        return result

    def ad(self, x: Sequence[Scalar]) -> Matrix:
        """Matrix of y -> [x, y]; column j is [x, b_j]."""
        self.check_vector(x)
        n = self.dim
        cols = [[ZERO] * n for _ in range(n)]
        for i, a in enumerate(x):
            if not a:
                continue
            for j in range(n):
                for k, c in self._sparse[i][j]:
                    cols[j][k] = cols[j][k] + a * c
        return Matrix.from_columns(cols, n)

    @cached_property
    def ad_basis(self) -> tuple[Matrix, ...]:
        return tuple(Matrix(self.dim, self.dim, [self.constants[i][j][k] for k in range(self.dim)
                                                 for j in range(self.dim)])
                     for i in range(self.dim))

    # -------------------- subspaces --------------------
    def product_subspace(self, v: Subspace, w: Subspace) -> Subspace:
        """[V, W]: span of the brackets of basis pairs."""
        if v.is_zero() or w.is_zero():
            return self.zero()
        return self.span(self.bracket(x, y) for x in v.basis for y in w.basis)

    def _spin(self, vectors: Iterable[Sequence[Any]], multipliers: Sequence[Vector]) -> Subspace:
        current = self.span(vectors)
        frontier = list(current.basis)
        steps = 0
        while frontier:
            steps += 1
            new = []
            for x in frontier:
                for y in multipliers:
                    z = self.bracket(x, y)
                    if any(z) and not current.contains(z):
                        current = current.sum(self.span([z]))
                        new.append(z)
            frontier = new
        logger.debug("spin on %s stabilised at dimension %d after %d steps", self.label, current.dim, steps)
        return current

    def ideal_generated(self, vectors: Iterable[Sequence[Any]]) -> Subspace:
        """Smallest ideal containing the vectors, by bracketing with basis vectors until stable."""
        return self._spin(vectors, self.basis())

    def subalgebra_generated(self, vectors: Iterable[Sequence[Any]]) -> Subspace:
        vectors = [tuple(v) for v in vectors]
        current = self.span(vectors)
        while True:
            grown = current.sum(self.product_subspace(current, current))
            if grown == current:
                return current
            current = grown

    def centralizer(self, s: Subspace | Iterable[Sequence[Any]]) -> Subspace:
        """{x : [x, s] = 0 for all s}, the kernel of the stacked ad(s) matrices."""
        space = s if isinstance(s, Subspace) else self.span(s)
        if space.is_zero():
            return self.full()
        rows = []
        for v in space.basis:
            rows.extend(self.ad(v).rows_list())
        return self.span(kernel(Matrix.from_rows(rows, self.dim)))

    def center(self) -> Subspace:
        return self.centralizer(self.full())

    def is_subalgebra(self, v: Subspace) -> bool:
        return all(v.contains(self.bracket(x, y)) for x in v.basis for y in v.basis)

    def is_ideal(self, v: Subspace) -> bool:
        return all(v.contains(self.bracket(x, y)) for x in v.basis for y in self.basis())

    def is_abelian(self) -> bool:
        return not any(any(vec) for row in self.constants for vec in row)

    def derived_series(self, start: Optional[Subspace] = None) -> list[Subspace]:
        """V ⊇ [V,V] ⊇ ... until it stops decreasing; starts at L by default."""
        current = start if start is not None else self.full()
        series = [current]
        while not current.is_zero():
            nxt = self.product_subspace(current, current)
            if nxt == current:
                break
            series.append(nxt)
            current = nxt
        return series

    def lower_central_series(self, start: Optional[Subspace] = None) -> list[Subspace]:
        base = start if start is not None else self.full()
        current = base
        series = [current]
        while not current.is_zero():
            nxt = self.product_subspace(current, base)
            if nxt == current:
                break
            series.append(nxt)
            current = nxt
        return series

    def is_solvable(self, start: Optional[Subspace] = None) -> bool:
        return self.derived_series(start)[-1].is_zero()

    def is_nilpotent(self, start: Optional[Subspace] = None) -> bool:
        return self.lower_central_series(start)[-1].is_zero()

    # -------------------- new algebras --------------------
    def change_basis(self, vectors: Sequence[Sequence[Any]], names: Optional[Sequence[str]] = None,
                     label: Optional[str] = None) -> LieAlgebra:
        """The same algebra written in another basis (given in current coordinates)."""
        if len(vectors) != self.dim:
            raise DimensionError(f"a basis of {self.label} needs {self.dim} vectors, got {len(vectors)}")
        return self.subalgebra(vectors, names, label)[0]

    def subalgebra(self, vectors: Sequence[Sequence[Any]], names: Optional[Sequence[str]] = None,
                   label: Optional[str] = None) -> tuple[LieAlgebra, Frame]:
        """Subalgebra spanned by independent vectors, in the basis they form, with its coordinate frame."""
        frame = Frame(vectors, self.dim)
        k = len(vectors)
        if names is None:
            names = [f"u{i}" for i in range(k)]
        table = []
        for a in range(k):
            row = []
            for b in range(k):
                z = self.bracket(frame.vectors[a], frame.vectors[b])
                if not frame.contains(z):
                    raise PreconditionError(
                        "vectors do not span a subalgebra", {"pair": [names[a], names[b]]}
                    )
                row.append(tuple(demote(c) for c in frame.coordinates(z)))
            table.append(row)
        sub = LieAlgebra(names, table, label or f"subalgebra of {self.label}", validate=False)
        return sub, frame

    def transport(self, t: Matrix, label: Optional[str] = None) -> LieAlgebra:
        """Algebra on the same names with [x, y]' = T[T^-1 x, T^-1 y]; T becomes an isomorphism."""
        if not t.is_square or t.rows != self.dim:
            raise DimensionError(f"transport needs a {self.dim}x{self.dim} matrix")
        t_inv = inverse(t)
        return self.change_basis(t_inv.columns(), self.names, label or self.label)

    def quotient(self, ideal: Subspace) -> Quotient:
        """L/I on the canonical complement: unit vectors at the non-pivot coordinates of I."""
        if not self.is_ideal(ideal):
            raise PreconditionError("quotient by a subspace that is not an ideal")
        reps = complement_basis(ideal, self.full())
        indices = [next(k for k, c in enumerate(v) if c) for v in reps]
        names = [self.names[k] for k in indices]
        table = []
        for a in indices:
            row = []
            for b in indices:
                r = ideal.reduce(self.constants[a][b])
                row.append(tuple(r[k] for k in indices))
            table.append(row)
        algebra = LieAlgebra(names, table, f"{self.label}/ideal", validate=False)
        return Quotient(algebra, ideal, tuple(indices))

    def __repr__(self) -> str:
        return f"LieAlgebra({self.label}, dim={self.dim})"


@dataclass(frozen=True)
class Quotient:
    """L/I with representatives the unit vectors at ``indices``."""

    algebra: LieAlgebra
    ideal: Subspace
    indices: tuple[int, ...]

    def project(self, v: Sequence[Any]) -> Vector:
        r = self.ideal.reduce(v)
        return tuple(r[k] for k in self.indices)

    def lift(self, c: Sequence[Any]) -> Vector:
        out = [ZERO] * self.ideal.ambient
        for k, x in zip(self.indices, c):
            out[k] = as_scalar(x)
        return tuple(out)

    def preimage(self, v: Subspace) -> Subspace:
        return Subspace(self.ideal.ambient, [self.lift(c) for c in v.basis] + list(self.ideal.basis))


def direct_sum(*algebras: LieAlgebra, label: Optional[str] = None) -> LieAlgebra:
    """Block-diagonal structure constants; repeated names get the summand number appended."""
    total = sum(a.dim for a in algebras)
    names: list[str] = []
    clash = len({n for a in algebras for n in a.names}) != sum(a.dim for a in algebras)
    for s, a in enumerate(algebras, start=1):
        names.extend(f"{n}{s}" if clash else n for n in a.names)
    table = [[[ZERO] * total for _ in range(total)] for _ in range(total)]
    offset = 0
    for a in algebras:
        for i in range(a.dim):
            for j in range(a.dim):
                for k, c in enumerate(a.constants[i][j]):
                    if c:
                        table[offset + i][offset + j][offset + k] = c
        offset += a.dim
    return LieAlgebra(names, table, label or "+".join(a.label for a in algebras), validate=False)


def embed_vector(frame: Frame, coords: Sequence[Any]) -> Vector:
    """Coordinates in a subalgebra frame back to ambient coordinates."""
    return lin_comb(coords, frame.vectors, frame.ambient)
