"""Finite groups given by a Cayley table on indices, with named elements.

Methods work on element indices; ``GroupElement`` pairs an index with its
group and is what gradings store as degrees.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from itertools import permutations
from math import lcm
from typing import Any, Iterable, Optional, Sequence

from core.config import config
from core.errors import DocumentError, InvariantViolation, PreconditionError, ScopeError, ValidationError

logger = logging.getLogger(__name__)


class FiniteGroup:
    """Validated Cayley table; ``table[i][j]`` is the index of ``names[i] * names[j]``.

    Groups compare by identity: two separately built copies of S3 are different
    objects and their elements never mix.
    """

    def __init__(self, names: Sequence[str], table: Sequence[Sequence[int]], label: str = "group",
                 descriptor: Optional[dict[str, Any]] = None):
        n = len(names)
        _check_order(n)
        if n == 0:
            raise ValidationError("a group needs at least one element")
        if len(set(names)) != n:
            raise ValidationError("element names must be distinct", {"names": list(names)})
        self.names: tuple[str, ...] = tuple(str(name) for name in names)
        self.table: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in table)
        self.label = label
        self._index = {name: i for i, name in enumerate(self.names)}
        self._validate()
        self.descriptor = descriptor or {
            "kind": "table",
            "elements": list(self.names),
            "table": [[self.names[k] for k in row] for row in self.table],
        }
        logger.debug("built group %s of order %d", label, n)

    def _validate(self):
        n = len(self.names)
        full = set(range(n))
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValidationError(f"Cayley table must be {n}x{n}")
        for i, row in enumerate(self.table):
            if set(row) != full:
                raise ValidationError(
                    f"row {self.names[i]} is not a permutation of the elements", {"row": self.names[i]}
                )
        for j in range(n):
            if {self.table[i][j] for i in range(n)} != full:
                raise ValidationError(
                    f"column {self.names[j]} is not a permutation of the elements", {"column": self.names[j]}
                )
        identity = next(
            (e for e in range(n) if all(self.table[e][x] == x and self.table[x][e] == x for x in range(n))),
            None,
        )
        if identity is None:
            raise ValidationError("the table has no two-sided identity")
        self.identity = identity
        t = self.table
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    if t[ab][c] != t[a][t[b][c]]:
                        triple = [self.names[a], self.names[b], self.names[c]]
                        raise ValidationError(
                            f"associativity fails for ({triple[0]}, {triple[1]}, {triple[2]})",
                            {"triple": triple},
                        )
        # A Latin square with identity gives each row exactly one identity entry.
        self._inverse = tuple(t[a].index(identity) for a in range(n))

    # -------------------- queries on indices --------------------
    @property
    def order(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self._inverse[a], -k
        result = self.identity
        for _ in range(k):
            result = self.table[result][a]
        return result

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    @property
    def exponent(self) -> int:
        out = 1
        for a in range(self.order):
            out = lcm(out, self.element_order(a))
        return out

    def commute(self, a: int, b: int) -> bool:
        return self.table[a][b] == self.table[b][a]

    def is_abelian(self) -> bool:
        return all(self.commute(a, b) for a in range(self.order) for b in range(a + 1, self.order))

    # -------------------- elements --------------------
    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise PreconditionError(f"{name!r} is not an element of {self.label}") from None

    def element(self, key: int | str) -> GroupElement:
        index = self.index_of(key) if isinstance(key, str) else key
        if not 0 <= index < self.order:
            raise PreconditionError(f"element index {index} out of range for {self.label}")
        return GroupElement(self, index)

    def elements(self) -> list[GroupElement]:
        return [GroupElement(self, i) for i in range(self.order)]

    @property
    def one(self) -> GroupElement:
        return GroupElement(self, self.identity)

    def __iter__(self):
        return iter(self.elements())

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label}, order={self.order})"


@dataclass(frozen=True)
class GroupElement:
    group: FiniteGroup
    index: int

    @property
    def name(self) -> str:
        return self.group.names[self.index]

    @property
    def order(self) -> int:
        return self.group.element_order(self.index)

    def is_identity(self) -> bool:
        return self.index == self.group.identity

    def inverse(self) -> GroupElement:
        return GroupElement(self.group, self.group.inv(self.index))

    def __mul__(self, other: GroupElement) -> GroupElement:
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.group is not self.group:
            raise PreconditionError("cannot multiply elements of different groups")
        return GroupElement(self.group, self.group.mul(self.index, other.index))

    def __pow__(self, k: int) -> GroupElement:
        return GroupElement(self.group, self.group.power(self.index, k))

    def commutes_with(self, other: GroupElement) -> bool:
        return (self * other) == (other * self)

    def __lt__(self, other: GroupElement) -> bool:
        return self.index < other.index

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"GroupElement({self.name})"


def _check_order(n: int):
    bound = config.max_group_order
    if n > bound:
        raise ScopeError(f"group order {n} exceeds the configured maximum {bound}", {"order": n, "bound": bound})


def _one_group(elements: Iterable[GroupElement]) -> tuple[FiniteGroup, list[GroupElement]]:
    items = list(elements)
    if not items:
        raise PreconditionError("a nonempty set of group elements is required")
    group = items[0].group
    if any(x.group is not group for x in items):
        raise PreconditionError("elements belong to different groups")
    return group, items


# -------------------- constructors --------------------

def cyclic(n: int) -> FiniteGroup:
    """Z_n with elements r0 .. r{n-1}, r1 a generator."""
    if n < 1:
        raise PreconditionError(f"cyclic(n) needs n >= 1, got {n}")
    _check_order(n)
    names = [f"r{k}" for k in range(n)]
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(names, table, f"cyclic({n})", {"kind": "cyclic", "n": n})


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n: r{k} = r^k, s{k} = r^k s."""
    if n < 1:
        raise PreconditionError(f"dihedral(n) needs n >= 1, got {n}")
    _check_order(2 * n)
    elements = [(k, 0) for k in range(n)] + [(k, 1) for k in range(n)]
    position = {x: i for i, x in enumerate(elements)}

    def mul(x, y):
        (a, f), (b, g) = x, y
        return ((a + (-b if f else b)) % n, (f + g) % 2)

    names = [f"{'s' if f else 'r'}{k}" for k, f in elements]
    table = [[position[mul(x, y)] for y in elements] for x in elements]
    return FiniteGroup(names, table, f"dihedral({n})", {"kind": "dihedral", "n": n})


def _cycle_name(perm: tuple[int, ...]) -> str:
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = []
        x = start
        while x not in seen:
            seen.add(x)
            cycle.append(str(x + 1))
            x = perm[x]
        cycles.append("(" + "".join(cycle) + ")")
    return "".join(cycles) or "e"


def symmetric(n: int) -> FiniteGroup:
    """S_n for n <= 4 in cycle notation; products apply the right factor first."""
    if not 1 <= n <= 4:
        raise PreconditionError(f"symmetric(n) is available for 1 <= n <= 4, got {n}")
    perms = list(permutations(range(n)))
    position = {p: i for i, p in enumerate(perms)}
    names = [_cycle_name(p) for p in perms]
    table = [[position[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    return FiniteGroup(names, table, f"symmetric({n})", {"kind": "symmetric", "n": n})


def product(first: FiniteGroup, second: FiniteGroup) -> FiniteGroup:
    """Direct product with elements named "(a,b)"; the second coordinate varies fastest."""
    _check_order(first.order * second.order)
    pairs = [(a, b) for a in range(first.order) for b in range(second.order)]
    position = {p: i for i, p in enumerate(pairs)}
    names = [f"({first.names[a]},{second.names[b]})" for a, b in pairs]
    table = [
        [position[(first.mul(a, c), second.mul(b, d))] for c, d in pairs]
        for a, b in pairs
    ]
    return FiniteGroup(
        names, table, f"product({first.label},{second.label})",
        {"kind": "product", "factors": [first.descriptor, second.descriptor]},
    )


def klein() -> FiniteGroup:
    return product(cyclic(2), cyclic(2))


def from_table(elements: Sequence[str], table: Sequence[Sequence[str]], label: str = "table") -> FiniteGroup:
    """Group from a table of element names; ``table[i][j]`` names ``elements[i] * elements[j]``."""
    position = {name: i for i, name in enumerate(elements)}
    rows = []
    for i, row in enumerate(table):
        try:
            rows.append([position[name] for name in row])
        except KeyError as exc:
            raise ValidationError(f"table row {i} names an unknown element {exc.args[0]!r}") from None
    return FiniteGroup(list(elements), rows, label)


_NAMED = re.compile(r"^\s*(cyclic|dihedral|symmetric)\s*\(\s*(\d+)\s*\)\s*$")


def make_group(kind: str, n: Optional[int] = None, factors: Sequence[FiniteGroup] = (),
               elements: Sequence[str] = (), table: Sequence[Sequence[str]] = ()) -> FiniteGroup:
    """Dispatch on ``kind``: cyclic, dihedral, symmetric, product or table."""
    if kind == "infinite_cyclic":
        raise ScopeError("infinite groups are not supported; gradings need a finite group")
    if kind in ("cyclic", "dihedral", "symmetric"):
        if not isinstance(n, int) or isinstance(n, bool):
            raise PreconditionError(f"{kind} group needs an integer n")
        return {"cyclic": cyclic, "dihedral": dihedral, "symmetric": symmetric}[kind](n)
    if kind == "product":
        if len(factors) < 2:
            raise PreconditionError("product group needs at least two factors")
        result = factors[0]
        for factor in factors[1:]:
            result = product(result, factor)
        return result
    if kind == "table":
        return from_table(elements, table)
    raise PreconditionError(f"unknown group kind {kind!r}")


def group_from_name(text: str, location: str = "group") -> FiniteGroup:
    """Parse "cyclic(4)", "dihedral(3)", "symmetric(3)" or "klein"; a malformed name is a document error."""
    if text.strip() == "klein":
        return klein()
    if text.strip() == "infinite_cyclic":
        return make_group("infinite_cyclic")
    match = _NAMED.match(text)
    if not match:
        raise DocumentError(f"unrecognized group name {text!r}", location)
    return make_group(match.group(1), int(match.group(2)))


# -------------------- subgroups --------------------

def _closure(group: FiniteGroup, generators: Iterable[int]) -> set[int]:
    gens = sorted(set(generators))
    found = {group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = group.mul(x, g)
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    return found


def subgroup_generated(elements: Iterable[GroupElement]) -> frozenset[GroupElement]:
    """Smallest subgroup containing the elements (finite, so closing under products suffices)."""
    group, items = _one_group(elements)
    closure = _closure(group, (x.index for x in items))
    return frozenset(GroupElement(group, i) for i in closure)


def is_commutative_subset(elements: Iterable[GroupElement]) -> tuple[bool, Optional[tuple[GroupElement, GroupElement]]]:
    """(True, None) when all pairs commute, else (False, first noncommuting pair in index order)."""
    items = list(elements)
    if not items:
        return True, None
    _, items = _one_group(items)
    ordered = sorted(set(items))
    for i, g in enumerate(ordered):
        for h in ordered[i + 1:]:
            if not g.commutes_with(h):
                return False, (g, h)
    return True, None


def subgroup(elements: Iterable[GroupElement]) -> tuple[FiniteGroup, dict[GroupElement, GroupElement]]:
    """Materialise a subgroup as its own group; returns it with the inclusion map from it."""
    group, items = _one_group(elements)
    members = sorted({x.index for x in items})
    if set(members) != _closure(group, members):
        raise PreconditionError("elements do not form a subgroup")
    position = {g: i for i, g in enumerate(members)}
    names = [group.names[g] for g in members]
    table = [[position[group.mul(a, b)] for b in members] for a in members]
    sub = FiniteGroup(names, table, f"subgroup of {group.label}")
    inclusion = {GroupElement(sub, i): GroupElement(group, g) for i, g in enumerate(members)}
    return sub, inclusion


def invariant_factors(group: FiniteGroup) -> list[tuple[GroupElement, int]]:
    """Generators g_1..g_k with G the internal direct product of the cyclic groups <g_i>.

    Each step takes an element of maximal order in the remaining subgroup H and
    grows a complement K greedily in element order: x joins K when
    <K, x> meets <g> trivially. A maximal such K is a complement because <g>
    has order equal to the exponent of H.
    """
    if not group.is_abelian():
        raise PreconditionError("invariant factors are defined for abelian groups only")
    result: list[tuple[GroupElement, int]] = []
    remaining = set(range(group.order))
    while len(remaining) > 1:
        g = max(sorted(remaining), key=group.element_order)
        cyclic_part = _closure(group, [g])
        complement = {group.identity}
        for x in sorted(remaining):
            if x in complement:
                continue
            grown = _closure(group, list(complement) + [x])
            if grown & cyclic_part == {group.identity}:
                complement = grown
        if len(complement) * len(cyclic_part) != len(remaining):
            raise InvariantViolation("failed to split off a cyclic factor", {"generator": group.names[g]})
        result.append((GroupElement(group, g), len(cyclic_part)))
        remaining = complement
    logger.debug("invariant factors of %s: %s", group.label, [d for _, d in result])
    return result
