"""Characters of finite abelian groups with exact cyclotomic values.

A character is stored by its logarithms: with e the exponent of G and
G = <g_1> x ... x <g_k> (orders d_i), the character with exponent vector
(a_1, ..., a_k) sends g_1^c_1 ... g_k^c_k to zeta_e^(sum a_i c_i e / d_i).
"""

from __future__ import annotations

import logging
from itertools import product
from typing import Iterator, Optional

from core.errors import InvariantViolation, PreconditionError
from groups.finite_group import FiniteGroup, GroupElement, invariant_factors
from linalg.scalars import Cyclotomic

logger = logging.getLogger(__name__)


class Character:
    __slots__ = ("dual", "exponents", "name", "_logs")

    def __init__(self, dual: DualGroup, exponents: tuple[int, ...]):
        self.dual = dual
        self.exponents = exponents
        self.name = "chi_" + "_".join(str(a) for a in exponents) if exponents else "chi_0"
        e = dual.exponent
        self._logs = tuple(
            sum(a * c * (e // d) for a, c, d in zip(exponents, coords, dual.factor_orders)) % e
            for coords in dual.coordinates
        )

    def log(self, g: GroupElement) -> int:
        """k with chi(g) = zeta_e^k, 0 <= k < e."""
        if g.group is not self.dual.group:
            raise PreconditionError("character evaluated on an element of another group")
        return self._logs[g.index]

    def __call__(self, g: GroupElement) -> Cyclotomic:
        return Cyclotomic.zeta(self.dual.exponent, self.log(g))

    def values(self) -> list[Cyclotomic]:
        return [Cyclotomic.zeta(self.dual.exponent, k) for k in self._logs]

    def is_trivial(self) -> bool:
        return not any(self._logs)

    @property
    def order(self) -> int:
        e = self.dual.exponent
        k = 1
        while any((k * x) % e for x in self._logs):
            k += 1
        return k

    def __mul__(self, other: Character) -> Character:
        if not isinstance(other, Character):
            return NotImplemented
        if other.dual is not self.dual:
            raise PreconditionError("characters of different dual groups")
        exponents = tuple((a + b) % d for a, b, d in zip(self.exponents, other.exponents, self.dual.factor_orders))
        return self.dual.by_exponents(exponents)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.dual is other.dual and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __repr__(self) -> str:
        return f"Character({self.name})"


class DualGroup:
    """All |G| characters of a finite abelian group, trivial character first."""

    def __init__(self, group: FiniteGroup):
        if not group.is_abelian():
            raise PreconditionError(
                "dual group defined for abelian G only", {"group": group.label}
            )
        self.group = group
        self.exponent = group.exponent
        factors = invariant_factors(group)
        self.generators_of_group = [g for g, _ in factors]
        self.factor_orders = tuple(d for _, d in factors)

        # Exponent coordinates of every element in the chosen cyclic factors.
        coordinates: list[Optional[tuple[int, ...]]] = [None] * group.order
        for coords in product(*(range(d) for d in self.factor_orders)):
            x = group.identity
            for g, c in zip(self.generators_of_group, coords):
                x = group.mul(x, group.power(g.index, c))
            if coordinates[x] is not None:
                raise InvariantViolation("cyclic factors do not form a direct product", {"element": group.names[x]})
            coordinates[x] = coords
        self.coordinates: tuple[tuple[int, ...], ...] = tuple(coordinates)  # type: ignore[arg-type]

        self._by_exponents = {}
        self.characters: list[Character] = []
        for exponents in product(*(range(d) for d in self.factor_orders)):
            chi = Character(self, exponents)
            self._by_exponents[exponents] = chi
            self.characters.append(chi)
        self._by_name = {chi.name: chi for chi in self.characters}
        logger.debug("dual of %s: %d characters of exponent %d", group.label, len(self.characters), self.exponent)

    def by_exponents(self, exponents: tuple[int, ...]) -> Character:
        return self._by_exponents[exponents]

    def character(self, name: str) -> Character:
        try:
            return self._by_name[name]
        except KeyError:
            raise PreconditionError(f"no character named {name!r}") from None

    @property
    def trivial(self) -> Character:
        return self.characters[0]

    @property
    def generators(self) -> list[Character]:
        """Coordinate characters: the i-th sends g_i to zeta_(d_i) and the other g_j to 1."""
        k = len(self.factor_orders)
        return [self._by_exponents[tuple(1 if j == i else 0 for j in range(k))] for i in range(k)]

    def __iter__(self) -> Iterator[Character]:
        return iter(self.characters)

    def __len__(self) -> int:
        return len(self.characters)

    def verify(self) -> tuple[bool, str]:
        """Check chi(e) = 1, multiplicativity and distinctness for every character."""
        g_all = self.group.elements()
        seen = set()
        for chi in self.characters:
            if chi.log(self.group.one):
                return False, f"{chi.name} is not 1 at the identity"
            for g in g_all:
                for h in g_all:
                    if chi.log(g * h) != (chi.log(g) + chi.log(h)) % self.exponent:
                        return False, f"{chi.name} is not multiplicative on ({g.name}, {h.name})"
            if chi._logs in seen:
                return False, f"{chi.name} repeats another character"
            seen.add(chi._logs)
        return True, f"{len(self.characters)} characters verified"


def dual_group(group: FiniteGroup) -> DualGroup:
    return DualGroup(group)
