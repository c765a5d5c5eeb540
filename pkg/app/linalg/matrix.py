"""Dense exact matrices and the row-reduction kernel.

Vectors are plain tuples of scalars. Matrices act on column vectors, so the
matrix of a linear map has the image of the j-th basis vector in column j.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from sympy import Matrix as SympyMatrix, Poly, Rational, Symbol, factor_list

from core.errors import DimensionError
from linalg.scalars import (
    Cyclotomic,
    Scalar,
    ZERO,
    as_scalar,
    coerce,
    common_order,
    scalar_inv,
)

Vector = tuple

_x = Symbol("x")


# -------------------- vectors --------------------

def zero_vector(n: int, order: int = 1) -> Vector:
    return tuple(coerce(ZERO, order) for _ in range(n)) if order > 1 else (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if k == i else ZERO for k in range(n))


def vec_add(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"vector lengths differ: {len(u)} and {len(v)}")
    return tuple(a + b if b else a for a, b in zip(u, v))


def vec_sub(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"vector lengths differ: {len(u)} and {len(v)}")
    return tuple(a - b if b else a for a, b in zip(u, v))


def vec_scale(c: Scalar, v: Sequence[Scalar]) -> Vector:
    return tuple(c * a if a else a for a in v)


def vec_is_zero(v: Sequence[Scalar]) -> bool:
    return not any(v)


def lin_comb(coeffs: Sequence[Scalar], vectors: Sequence[Sequence[Scalar]], n: Optional[int] = None) -> Vector:
    """sum(c * v) over the pairs; ``n`` gives the length when ``vectors`` is empty."""
    if n is None:
        n = len(vectors[0])
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for k, a in enumerate(v):
            if a:
                out[k] = out[k] + c * a
    return tuple(out)


def support(v: Sequence[Scalar]) -> list[int]:
    return [k for k, a in enumerate(v) if a]


# -------------------- matrices --------------------

class Matrix:
    """Immutable rows x cols matrix over Q or a single cyclotomic field."""

    __slots__ = ("rows", "cols", "entries", "order")

    def __init__(self, rows: int, cols: int, entries: Iterable[Any]):
        values = tuple(as_scalar(e) for e in entries)
        if rows < 0 or cols < 0 or len(values) != rows * cols:
            raise DimensionError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(values)}")
        order = common_order(values)
        if order > 1:
            values = tuple(coerce(e, order) for e in values)
        self.rows = rows
        self.cols = cols
        self.entries = values
        self.order = order

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], cols: Optional[int] = None) -> Matrix:
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionError(f"row {i} has length {len(row)}, expected {cols}")
        return cls(len(rows), cols, [e for row in rows for e in row])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Any]], rows: Optional[int] = None) -> Matrix:
        if rows is None:
            rows = len(columns[0]) if columns else 0
        if not columns:
            return cls(rows, 0, ())
        return cls(rows, len(columns), [columns[j][i] for i in range(rows) for j in range(len(columns))])

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[Any]) -> Matrix:
        n = len(values)
        return cls(n, n, [values[i] if i == j else 0 for i in range(n) for j in range(n)])

    def __getitem__(self, key: tuple[int, int]) -> Scalar:
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def rows_list(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def apply(self, v: Sequence[Scalar]) -> Vector:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise DimensionError(f"cannot apply {self.rows}x{self.cols} matrix to vector of length {len(v)}")
        nz = [(j, a) for j, a in enumerate(v) if a]
        out = []
        for i in range(self.rows):
            base = i * self.cols
            acc = ZERO
            for j, a in nz:
                e = self.entries[base + j]
                if e:
                    acc = acc + e * a
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = other.columns()
        out = []
        for i in range(self.rows):
            row = self.row(i)
            nz = [(k, a) for k, a in enumerate(row) if a]
            for col in cols:
                acc = ZERO
                for k, a in nz:
                    b = col[k]
                    if b:
                        acc = acc + a * b
                out.append(acc)
        return Matrix(self.rows, other.cols, out)

    def __add__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c: Scalar) -> Matrix:
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    def _same_shape(self, other: Matrix):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError(f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def trace(self) -> Scalar:
        if not self.is_square:
            raise DimensionError("trace of a non-square matrix")
        total = ZERO
        for i in range(self.rows):
            total = total + self[i, i]
        return total

    def power(self, k: int) -> Matrix:
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        result = Matrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.entries)

    def rank(self) -> int:
        return len(rref(self)[1])

    def det(self) -> Scalar:
        if not self.is_square:
            raise DimensionError("determinant of a non-square matrix")
        a = self.rows_list()
        n = self.rows
        det: Scalar = Fraction(1)
        for c in range(n):
            p = next((i for i in range(c, n) if a[i][c]), None)
            if p is None:
                return ZERO
            if p != c:
                a[c], a[p] = a[p], a[c]
                det = -det
            pivot = a[c][c]
            det = det * pivot
            inv = scalar_inv(pivot)
            for i in range(c + 1, n):
                f = a[i][c]
                if f:
                    f = f * inv
                    a[i] = [x - f * y if y else x for x, y in zip(a[i], a[c])]
        return det

    def polynomial(self, coeffs: Sequence[Scalar]) -> Matrix:
        """p(M) for p given lowest degree first (Horner)."""
        n = self.rows
        result = Matrix.zeros(n, n)
        for c in reversed(coeffs):
            result = result @ self + Matrix.diagonal([c] * n)
        return result

    def to_sympy(self) -> SympyMatrix:
        if self.order > 1:
            raise ValueError("sympy conversion is only used for rational matrices")
        return SympyMatrix(self.rows, self.cols, [Rational(e.numerator, e.denominator) for e in self.entries])

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


# -------------------- row reduction --------------------

def reduce_rows(a: list[list[Scalar]], cols: int) -> list[int]:
    """In-place Gauss-Jordan on the first ``cols`` columns; returns pivot columns."""
    rows = len(a)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = scalar_inv(a[r][c])
        a[r] = [x * inv if x else x for x in a[r]]
        pivot_row = a[r]
        for i in range(rows):
            if i != r:
                f = a[i][c]
                if f:
                    a[i] = [x - f * y if y else x for x, y in zip(a[i], pivot_row)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form and the strictly increasing pivot columns."""
    a = m.rows_list()
    pivots = reduce_rows(a, m.cols)
    return Matrix(m.rows, m.cols, [e for row in a for e in row]), pivots


def kernel(m: Matrix) -> list[Vector]:
    """Null-space basis; free variables set to 1 in increasing column order."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    order = m.order
    one = coerce(Fraction(1), order)
    zero = coerce(ZERO, order)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [zero] * m.cols
        v[f] = one
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r, f]
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, rhs: Sequence[Any]) -> Optional[Vector]:
    """One solution of m x = rhs with free variables zero, or None when inconsistent."""
    if len(rhs) != m.rows:
        raise DimensionError(f"right-hand side has length {len(rhs)}, matrix has {m.rows} rows")
    a = [list(m.row(i)) + [as_scalar(rhs[i])] for i in range(m.rows)]
    pivots = reduce_rows(a, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    order = common_order([e for row in a for e in row])
    x = [coerce(ZERO, order)] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = a[r][m.cols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    if not m.is_square:
        raise DimensionError("inverse of a non-square matrix")
    n = m.rows
    a = [list(m.row(i)) + [Fraction(1) if i == j else ZERO for j in range(n)] for i in range(n)]
    pivots = reduce_rows(a, n)
    if len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return Matrix(n, n, [e for row in a for e in row[n:]])


# -------------------- polynomials over Q --------------------

def characteristic_polynomial(m: Matrix) -> list[Fraction]:
    """Coefficients, lowest degree first, of det(x I - m) for a rational matrix."""
    poly = m.to_sympy().charpoly(_x)
    return [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]


def rational_factors(coeffs: Sequence[Fraction]) -> list[tuple[list[Fraction], int]]:
    """Monic irreducible factors over Q with multiplicities, lowest degree first."""
    poly = Poly([Rational(c.numerator, c.denominator) for c in reversed(coeffs)], _x)
    _, factors = factor_list(poly)
    out = []
    for factor, multiplicity in factors:
        monic = factor.monic()
        out.append(([Fraction(int(c.p), int(c.q)) for c in reversed(monic.all_coeffs())], multiplicity))
    out.sort(key=lambda item: (len(item[0]), item[0]))
    return out


def is_cyclotomic_free(m: Matrix) -> bool:
    return not any(isinstance(e, Cyclotomic) for e in m.entries)
