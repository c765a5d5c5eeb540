"""Split Cartan subalgebras, root systems and type labels of simple algebras."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional

from core.config import config
from core.errors import PreconditionError
from lie.algebra import LieAlgebra
from lie.centroid import simple_decomposition
from lie.killing import is_semisimple, killing_form
from linalg.matrix import Matrix, Vector, characteristic_polynomial, inverse, kernel, rational_factors
from linalg.scalars import ZERO
from linalg.subspace import Subspace

logger = logging.getLogger(__name__)

UNRECOGNIZED = "unrecognized"

_PAIR_COEFFS = ((1, 1), (1, 2), (1, -1), (2, 1))
_TRIPLE_COEFFS = ((1, 1, 1), (1, 2, 3), (1, -1, 2))


@dataclass(frozen=True)
class RootSystem:
    rank: int
    cartan: Subspace
    roots: tuple[tuple[Fraction, ...], ...]
    lengths: tuple[Fraction, ...]

    @property
    def distinct_lengths(self) -> list[Fraction]:
        return sorted(set(self.lengths))

    def count_with_length(self, length: Fraction) -> int:
        return sum(1 for x in self.lengths if x == length)


def _candidates(n: int) -> Iterator[Vector]:
    def vec(pairs):
        v = [ZERO] * n
        for i, c in pairs:
            v[i] = Fraction(c)
        return tuple(v)

    for i in range(n):
        yield vec([(i, 1)])
    for i, j in combinations(range(n), 2):
        for a, b in _PAIR_COEFFS:
            yield vec([(i, a), (j, b)])
    for i, j, k in combinations(range(n), 3):
        for a, b, c in _TRIPLE_COEFFS:
            yield vec([(i, a), (j, b), (k, c)])


def _splits(m: Matrix) -> bool:
    return all(len(coeffs) == 2 for coeffs, _ in rational_factors(characteristic_polynomial(m)))


def _cartan_candidates(algebra: LieAlgebra) -> Iterator[tuple[Vector, Subspace]]:
    """Elements x whose Fitting null component of ad x is nilpotent, with ad x split over Q.

    Candidates are basis vectors, then pairs, then triples with small integer
    coefficients, up to the configured budget.
    """
    n = algebra.dim
    if n == 0 or algebra.order > 1:
        return
    budget = config.get_int("classify.max_candidates", 4000)
    for tried, x in enumerate(_candidates(n), start=1):
        if tried > budget:
            break
        ad = algebra.ad(x)
        if ad.is_zero():
            continue
        null = Subspace(n, kernel(ad.power(n)))
        if null.dim == n or not algebra.is_nilpotent(null):
            continue
        if not _splits(ad):
            continue
        logger.debug("Cartan element found after %d candidates; rank %d", tried, null.dim)
        yield x, null
    logger.debug("candidate budget of %d exhausted", budget)


def cartan_subalgebra(algebra: LieAlgebra) -> Optional[tuple[Vector, Subspace]]:
    """First (x, H) from the candidate search, or None when the budget runs out."""
    return next(_cartan_candidates(algebra), None)


def root_system(algebra: LieAlgebra) -> Optional[RootSystem]:
    """Roots on the first candidate Cartan subalgebra that splits; None when no candidate does."""
    for _, cartan in _cartan_candidates(algebra):
        system = _roots_on(algebra, cartan)
        if system is not None:
            return system
    return None


def _roots_on(algebra: LieAlgebra, cartan: Subspace) -> Optional[RootSystem]:
    """Roots as value vectors on a basis of H, with Killing lengths (a, a); None when H is not split."""
    n = algebra.dim
    h_basis = list(cartan.basis)
    pieces: list[tuple[tuple[Fraction, ...], Subspace]] = [((), algebra.full())]
    for h in h_basis:
        ad = algebra.ad(h)
        eigen = []
        for coeffs, _ in rational_factors(characteristic_polynomial(ad)):
            if len(coeffs) != 2:
                return None
            value = -coeffs[0]
            eigen.append((value, Subspace(n, kernel(ad - Matrix.diagonal([value] * n)))))
        refined = []
        for label, piece in pieces:
            for value, space in eigen:
                part = piece.intersection(space)
                if not part.is_zero():
                    refined.append((label + (value,), part))
        pieces = refined
    if sum(p.dim for _, p in pieces) != n:
        return None
    roots = [(label, piece) for label, piece in pieces if any(label)]
    zero = [piece for label, piece in pieces if not any(label)]
    if not zero or zero[0] != cartan:
        return None
    if any(piece.dim != 1 for _, piece in roots) or len(roots) != n - cartan.dim:
        return None

    kappa = killing_form(algebra)
    rank = cartan.dim
    gram = Matrix(rank, rank, [_form(kappa, a, b) for a in h_basis for b in h_basis])
    try:
        gram_inv = inverse(gram)
    except ZeroDivisionError:
        return None
    lengths = []
    for label, _ in roots:
        alpha = list(label)
        t = gram_inv.apply(alpha)
        lengths.append(sum((a * b for a, b in zip(alpha, t)), ZERO))
    return RootSystem(rank, cartan, tuple(label for label, _ in roots), tuple(lengths))


def _form(kappa: Matrix, x: Vector, y: Vector):
    ky = kappa.apply(y)
    return sum((a * b for a, b in zip(x, ky) if a and b), ZERO)


def type_from_roots(dim: int, system: RootSystem) -> str:
    l = system.rank
    lengths = system.distinct_lengths
    if len(lengths) == 1:
        if l >= 1 and dim == l * (l + 2):
            return f"A{l}"
        if l >= 4 and dim == l * (2 * l - 1):
            return f"D{l}"
        if (l, dim) == (6, 78):
            return "E6"
        if (l, dim) == (7, 133):
            return "E7"
        if (l, dim) == (8, 248):
            return "E8"
        return UNRECOGNIZED
    if len(lengths) != 2:
        return UNRECOGNIZED
    short, long = lengths
    ratio = long / short
    if ratio == 3 and (l, dim) == (2, 14):
        return "G2"
    if ratio != 2:
        return UNRECOGNIZED
    if (l, dim) == (4, 52):
        return "F4"
    if l >= 2 and dim == l * (2 * l + 1):
        shorts = system.count_with_length(short)
        if shorts == 2 * l:
            return f"B{l}"
        if shorts == 2 * l * (l - 1):
            return f"C{l}"
    return UNRECOGNIZED


def classify_split_type(algebra: LieAlgebra, ideal: Optional[Subspace] = None) -> str:
    """Type label (A1, B2, ...) of a simple algebra or simple ideal, or "unrecognized"."""
    target = algebra
    if ideal is not None:
        target = algebra.subalgebra(ideal.basis)[0]
    if target.dim == 0 or not is_semisimple(target) or len(simple_decomposition(target)) != 1:
        raise PreconditionError("classification needs a simple algebra", {"dim": target.dim})
    system = root_system(target)
    if system is None:
        logger.debug("%s: no split root system found", target.label)
        return UNRECOGNIZED
    label = type_from_roots(target.dim, system)
    logger.debug("%s classified as %s", target.label, label)
    return label
