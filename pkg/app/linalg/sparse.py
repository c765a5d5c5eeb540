"""Incrementally reduced sparse linear systems.

Large homogeneous systems (the centroid, graded Levi corrections) have many
unknowns but few nonzero coefficients per equation. Rows are kept fully
reduced with the smallest variable of each row as its pivot, which is exactly
the pivot structure of the dense rref, so kernels and particular solutions
agree with ``linalg.matrix.kernel`` and ``linalg.matrix.solve``.
"""

from __future__ import annotations

import logging
from typing import Any, Hashable, Mapping, Optional

from linalg.scalars import ZERO, Scalar, as_scalar, scalar_inv

logger = logging.getLogger(__name__)


class SparseSystem:
    def __init__(self, unknowns: int):
        self.unknowns = unknowns
        self._rows: dict[int, tuple[dict[int, Scalar], Scalar]] = {}
        self.equations = 0
        self.inconsistent: Optional[Hashable] = None
        self.is_consistent = True

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, coeffs: Mapping[int, Any], rhs: Any = 0, tag: Hashable = None) -> bool:
        """Add sum(coeffs[k] * x_k) == rhs; returns False when it contradicts earlier equations."""
        self.equations += 1
        row: dict[int, Scalar] = {}
        for k, v in coeffs.items():
            if not 0 <= k < self.unknowns:
                raise IndexError(f"unknown {k} out of range 0..{self.unknowns - 1}")
            v = as_scalar(v)
            if v:
                row[k] = v
        value = as_scalar(rhs)

        for p in [k for k in row if k in self._rows]:
            f = row.get(p)
            if not f:
                continue
            prow, prhs = self._rows[p]
            for k, c in prow.items():
                updated = row.get(k, ZERO) - f * c
                if updated:
                    row[k] = updated
                else:
                    row.pop(k, None)
            if prhs:
                value = value - f * prhs

        if not row:
            if value:
                if self.is_consistent:
                    self.inconsistent = tag
                    logger.debug("inconsistent equation %r", tag)
                self.is_consistent = False
                return False
            return True

        pivot = min(row)
        inv = scalar_inv(row[pivot])
        row = {k: c * inv for k, c in row.items()}
        value = value * inv

        for q, (qrow, qrhs) in self._rows.items():
            f = qrow.get(pivot)
            if not f:
                continue
            for k, c in row.items():
                updated = qrow.get(k, ZERO) - f * c
                if updated:
                    qrow[k] = updated
                else:
                    qrow.pop(k, None)
            self._rows[q] = (qrow, qrhs - f * value)
        self._rows[pivot] = (row, value)
        return True

    def solution(self) -> Optional[tuple[Scalar, ...]]:
        """Particular solution with free variables zero; None when inconsistent."""
        if not self.is_consistent:
            return None
        x: list[Scalar] = [ZERO] * self.unknowns
        for p, (_, value) in self._rows.items():
            x[p] = value
        return tuple(x)

    def kernel(self) -> list[tuple[Scalar, ...]]:
        """Basis of the homogeneous solutions, one vector per free variable in increasing order."""
        basis = []
        for f in range(self.unknowns):
            if f in self._rows:
                continue
            v: list[Scalar] = [ZERO] * self.unknowns
            v[f] = as_scalar(1)
            for p, (row, _) in self._rows.items():
                c = row.get(f)
                if c:
                    v[p] = -c
            basis.append(tuple(v))
        return basis
