"""Subspaces of K^n in canonical form, and coordinate frames."""

from __future__ import annotations

from typing import Any, Iterable, Sequence

from core.errors import DimensionError, PreconditionError
from linalg.matrix import Matrix, Vector, reduce_rows, kernel, unit_vector
from linalg.scalars import ZERO, as_scalar, coerce, common_order


def _reduce_against(v: Sequence[Any], basis: Sequence[Vector], pivots: Sequence[int]) -> list:
    out = list(v)
    for row, p in zip(basis, pivots):
        f = out[p]
        if f:
            out = [x - f * y if y else x for x, y in zip(out, row)]
    return out


class Subspace:
    """Span of vectors in K^ambient, stored as the nonzero rows of their rref.

    Two subspaces are equal exactly when their stored bases are equal.
    """

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient: int, vectors: Iterable[Sequence[Any]] = ()):
        rows = [[as_scalar(e) for e in v] for v in vectors]
        for i, row in enumerate(rows):
            if len(row) != ambient:
                raise DimensionError(f"vector {i} has length {len(row)}, ambient dimension is {ambient}")
        if rows:
            order = common_order(e for row in rows for e in row)
            if order > 1:
                rows = [[coerce(e, order) for e in row] for row in rows]
        pivots = reduce_rows(rows, ambient)
        self.ambient = ambient
        self.basis: tuple[Vector, ...] = tuple(tuple(rows[r]) for r in range(len(pivots)))
        self.pivots: tuple[int, ...] = tuple(pivots)

    @classmethod
    def zero(cls, ambient: int) -> Subspace:
        return cls(ambient)

    @classmethod
    def full(cls, ambient: int) -> Subspace:
        return cls(ambient, [unit_vector(ambient, i) for i in range(ambient)])

    @classmethod
    def coordinate(cls, ambient: int, indices: Iterable[int]) -> Subspace:
        """Span of the unit vectors with the given indices."""
        return cls(ambient, [unit_vector(ambient, i) for i in sorted(set(indices))])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def reduce(self, v: Sequence[Any]) -> Vector:
        """Remainder of ``v`` after eliminating the pivot coordinates; zero iff v lies in the span."""
        if len(v) != self.ambient:
            raise DimensionError(f"vector of length {len(v)} in ambient dimension {self.ambient}")
        return tuple(_reduce_against([as_scalar(e) for e in v], self.basis, self.pivots))

    def contains(self, v: Sequence[Any]) -> bool:
        return not any(self.reduce(v))

    def __contains__(self, v: Sequence[Any]) -> bool:
        return self.contains(v)

    def _check(self, other: Subspace):
        if self.ambient != other.ambient:
            raise DimensionError(f"ambient dimensions differ: {self.ambient} and {other.ambient}")

    def sum(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace(self.ambient, self.basis + other.basis)

    __add__ = sum

    def annihilator(self) -> Subspace:
        """{y : y . v = 0 for all v in self}, using the plain dot product."""
        if not self.basis:
            return Subspace.full(self.ambient)
        return Subspace(self.ambient, kernel(Matrix.from_rows(self.basis, self.ambient)))

    def intersection(self, other: Subspace) -> Subspace:
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.ambient)
        return self.annihilator().sum(other.annihilator()).annihilator()

    __and__ = intersection

    def is_subspace_of(self, other: Subspace) -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis)

    __le__ = is_subspace_of

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def complement_basis(inner: Subspace, outer: Subspace) -> list[Vector]:
    """Vectors from ``outer``'s canonical basis spanning a complement of ``inner`` in ``outer``.

    Coordinate subspaces have unit-vector canonical bases, so the complement of
    one coordinate-supported subspace inside another is spanned by unit vectors.
    """
    inner._check(outer)
    if not inner.is_subspace_of(outer):
        raise PreconditionError("complement requested for a subspace that is not contained in the outer space")
    coords = [[v[p] for p in outer.pivots] for v in inner.basis]
    pivots = set(reduce_rows(coords, outer.dim)) if coords else set()
    return [outer.basis[j] for j in range(outer.dim) if j not in pivots]


def complement_within(inner: Subspace, outer: Subspace) -> Subspace:
    return Subspace(outer.ambient, complement_basis(inner, outer))


class Frame:
    """Coordinates with respect to an ordered list of linearly independent vectors."""

    def __init__(self, vectors: Sequence[Sequence[Any]], ambient: int | None = None):
        if ambient is None:
            if not vectors:
                raise DimensionError("empty frame needs an explicit ambient dimension")
            ambient = len(vectors[0])
        k = len(vectors)
        rows = []
        for i, v in enumerate(vectors):
            if len(v) != ambient:
                raise DimensionError(f"frame vector {i} has length {len(v)}, expected {ambient}")
            rows.append([as_scalar(e) for e in v] + [as_scalar(1 if j == i else 0) for j in range(k)])
        pivots = reduce_rows(rows, ambient)
        if len(pivots) != k:
            raise PreconditionError("frame vectors are linearly dependent", {"vectors": k, "rank": len(pivots)})
        self.ambient = ambient
        self.vectors = tuple(tuple(as_scalar(e) for e in v) for v in vectors)
        self._pivots = tuple(pivots)
        self._reduced = tuple(tuple(row[:ambient]) for row in rows)
        self._transform = tuple(tuple(row[ambient:]) for row in rows)

    def __len__(self) -> int:
        return len(self.vectors)

    def span(self) -> Subspace:
        return Subspace(self.ambient, self.vectors)

    def contains(self, v: Sequence[Any]) -> bool:
        return not any(_reduce_against(list(v), self._reduced, self._pivots))

    def coordinates(self, v: Sequence[Any]) -> Vector:
        """c with sum(c_i * vectors_i) == v; raises when v is outside the span."""
        if len(v) != self.ambient:
            raise DimensionError(f"vector of length {len(v)} in ambient dimension {self.ambient}")
        v = [as_scalar(e) for e in v]
        if any(_reduce_against(v, self._reduced, self._pivots)):
            raise PreconditionError("vector does not lie in the span of the frame")
        k = len(self.vectors)
        out = [ZERO] * k
        for r, p in enumerate(self._pivots):
            d = v[p]
            if d:
                for i, t in enumerate(self._transform[r]):
                    if t:
                        out[i] = out[i] + d * t
        return tuple(out)
