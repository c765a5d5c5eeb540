"""Exact scalars: rationals (fractions.Fraction) and cyclotomic numbers.

A cyclotomic number of order n is a residue modulo the n-th cyclotomic
polynomial, stored as its phi(n) rational coefficients in the power basis
1, z, ..., z^(phi(n)-1) with z a primitive n-th root of unity. The residue is
always fully reduced, so equal numbers of equal order have equal coefficients.
Operands of different orders meet in Q(zeta_lcm).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Any, Iterable, Union

from sympy import Poly, QQ, Rational, Symbol, cyclotomic_poly, mobius, totient

from core.config import config
from core.errors import DocumentError, ScopeError

_x = Symbol("x")
_RATIONAL_LITERAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def check_order(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"cyclotomic order must be a positive integer, got {n!r}")
    bound = config.max_cyclotomic_order
    if n > bound:
        raise ScopeError(
            f"cyclotomic order {n} exceeds the configured bound {bound}",
            {"order": n, "bound": bound},
        )
    return n


@lru_cache(maxsize=None)
def cyclotomic_coefficients(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    coeffs = Poly(cyclotomic_poly(n, _x), _x).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return int(totient(n))


@lru_cache(maxsize=None)
def _power_trace(n: int, k: int) -> Fraction:
    # Average of the Galois conjugates of zeta_n^k; depends only on the number.
    m = n // gcd(k, n)
    return Fraction(int(mobius(m)), int(totient(m)))


def _reduce(coeffs: list[Fraction], n: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_coefficients(n)
    d = len(phi) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, d - 1, -1):
        lead = c[i]
        if lead:
            shift = i - d
            for j in range(d):
                if phi[j]:
                    c[shift + j] -= lead * phi[j]
    c = c[:d]
    if len(c) < d:
        c.extend(Fraction(0) for _ in range(d - len(c)))
    return tuple(c)


def _to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL_LITERAL.match(value):
        return Fraction(value.replace(" ", ""))
    raise TypeError(f"not an exact rational: {value!r}")


class Cyclotomic:
    """Element of Q(zeta_order) in the reduced power basis."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Any] = ()):
        check_order(order)
        self.order = order
        self.coeffs = _reduce([_to_fraction(c) for c in coeffs], order)

    @classmethod
    def _make(cls, order: int, coeffs: tuple[Fraction, ...]) -> Cyclotomic:
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> Cyclotomic:
        """The root of unity zeta_order ** power."""
        check_order(order)
        power %= order
        return cls._make(order, _reduce([Fraction(0)] * power + [Fraction(1)], order))

    @classmethod
    def from_rational(cls, order: int, value: Any) -> Cyclotomic:
        check_order(order)
        d = euler_phi(order)
        return cls._make(order, (_to_fraction(value),) + (Fraction(0),) * (d - 1))

    # -------------------- field embedding --------------------
    def embed(self, order: int) -> Cyclotomic:
        """Image in Q(zeta_order); ``order`` must be a multiple of ``self.order``."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed into Q(zeta_{order})")
        check_order(order)
        step = order // self.order
        spread = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for k, c in enumerate(self.coeffs):
            spread[k * step] = c
        return Cyclotomic._make(order, _reduce(spread, order))

    def _align(self, other: Any) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...], int] | None:
        if isinstance(other, Cyclotomic):
            order = _lcm(self.order, other.order)
            return self.embed(order).coeffs, other.embed(order).coeffs, order
        try:
            value = _to_fraction(other)
        except TypeError:
            return None
        return self.coeffs, (value,) + (Fraction(0),) * (len(self.coeffs) - 1), self.order

    # -------------------- arithmetic --------------------
    def __add__(self, other: Any) -> Cyclotomic:
        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        a, b, order = aligned
        return Cyclotomic._make(order, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic._make(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Any) -> Cyclotomic:
        aligned = self._align(other)
        if aligned is None:
            return NotImplemented
        a, b, order = aligned
        return Cyclotomic._make(order, tuple(x - y for x, y in zip(a, b)))

    def __rsub__(self, other: Any) -> Cyclotomic:
        return (-self) + other

    def __mul__(self, other: Any) -> Cyclotomic:
        if not isinstance(other, Cyclotomic):
            try:
                value = _to_fraction(other)
            except TypeError:
                return NotImplemented
            return Cyclotomic._make(self.order, tuple(c * value for c in self.coeffs))
        order = _lcm(self.order, other.order)
        a = self.embed(order).coeffs
        b = other.embed(order).coeffs
        product = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        product[i + j] += x * y
        return Cyclotomic._make(order, _reduce(product, order))

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        if not self:
            raise ZeroDivisionError("division by zero in Q(zeta_%d)" % self.order)
        if self.is_rational():
            return Cyclotomic.from_rational(self.order, 1 / self.coeffs[0])
        num = Poly([Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)], _x, domain=QQ)
        mod = Poly(list(reversed(cyclotomic_coefficients(self.order))), _x, domain=QQ)
        inv = num.invert(mod)
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
        return Cyclotomic._make(self.order, _reduce(coeffs, self.order))

    def __truediv__(self, other: Any) -> Cyclotomic:
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        try:
            value = _to_fraction(other)
        except TypeError:
            return NotImplemented
        if not value:
            raise ZeroDivisionError("division by zero")
        return self * (1 / value)

    def __rtruediv__(self, other: Any) -> Cyclotomic:
        try:
            value = _to_fraction(other)
        except TypeError:
            return NotImplemented
        return self.inverse() * value

    def __pow__(self, exponent: int) -> Cyclotomic:
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = Cyclotomic.from_rational(self.order, 1)
        e = abs(exponent)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -------------------- comparison --------------------
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def normalized_trace(self) -> Fraction:
        """Trace to Q divided by the degree; independent of the ambient order."""
        return sum((c * _power_trace(self.order, k) for k, c in enumerate(self.coeffs) if c), Fraction(0))

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Cyclotomic):
            if other.order == self.order:
                return self.coeffs == other.coeffs
            order = _lcm(self.order, other.order)
            return self.embed(order).coeffs == other.embed(order).coeffs
        try:
            value = _to_fraction(other)
        except TypeError:
            return NotImplemented
        return self.is_rational() and self.coeffs[0] == value

    def __hash__(self) -> int:
        return hash(self.normalized_trace())

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        return f"Cyclotomic({self.order}, [{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            power = f"z{self.order}" if k == 1 else f"z{self.order}^{k}"
            if c == 1:
                terms.append(power)
            elif c == -1:
                terms.append(f"-{power}")
            else:
                terms.append(f"{c}*{power}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


Scalar = Union[Fraction, Cyclotomic]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(value: Any) -> Scalar:
    """Coerce ints and rational literals to Fraction; leave Cyclotomic untouched."""
    if isinstance(value, Cyclotomic):
        return value
    return _to_fraction(value)


def scalar_order(value: Scalar) -> int:
    """1 for rationals, the cyclotomic order otherwise."""
    return value.order if isinstance(value, Cyclotomic) else 1


def common_order(values: Iterable[Scalar]) -> int:
    order = 1
    for value in values:
        if isinstance(value, Cyclotomic) and order % value.order:
            order = check_order(_lcm(order, value.order))
    return order


def coerce(value: Scalar, order: int) -> Scalar:
    """Express ``value`` in Q(zeta_order); order 1 means Q."""
    if order == 1:
        if isinstance(value, Cyclotomic):
            return value.to_fraction()
        return _to_fraction(value)
    if isinstance(value, Cyclotomic):
        return value.embed(order)
    return Cyclotomic.from_rational(order, value)


def demote(value: Scalar) -> Scalar:
    """Rational cyclotomic numbers become plain fractions."""
    if isinstance(value, Cyclotomic) and value.is_rational():
        return value.coeffs[0]
    return value


def is_zero(value: Scalar) -> bool:
    return not value


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return as_scalar(a) + as_scalar(b)


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return as_scalar(a) * as_scalar(b)


def scalar_inv(a: Scalar) -> Scalar:
    a = as_scalar(a)
    if not a:
        raise ZeroDivisionError("inverse of zero")
    if isinstance(a, Cyclotomic):
        return a.inverse()
    return 1 / a


def parse_scalar(raw: Any, location: str = "") -> Scalar:
    """Read a document literal: "p/q", "p", an int, or {"order": n, "coeffs": [...]}."""
    if isinstance(raw, dict):
        order = raw.get("order")
        coeffs = raw.get("coeffs")
        if not isinstance(order, int) or isinstance(order, bool) or order < 1:
            raise DocumentError("cyclotomic scalar needs a positive integer 'order'", location)
        if not isinstance(coeffs, list):
            raise DocumentError("cyclotomic scalar needs a 'coeffs' list", location)
        try:
            parsed = [_to_fraction(c) for c in coeffs]
        except TypeError as exc:
            raise DocumentError(str(exc), location) from exc
        if len(parsed) != euler_phi(order):
            raise DocumentError(
                f"order {order} needs {euler_phi(order)} coefficients, got {len(parsed)}", location
            )
        return Cyclotomic(order, parsed)
    try:
        return _to_fraction(raw)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"bad scalar literal {raw!r}", location) from exc


def format_scalar(value: Scalar) -> Any:
    """Document literal for ``value``; exact, never a float."""
    if isinstance(value, Cyclotomic):
        return {"order": value.order, "coeffs": [str(c) for c in value.coeffs]}
    return str(_to_fraction(value))


def root_of_unity(order: int, power: int) -> Scalar:
    return Cyclotomic.zeta(order, power)
