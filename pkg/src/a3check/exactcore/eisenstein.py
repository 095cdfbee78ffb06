"""Arithmetic in the cyclotomic field Q(zeta), zeta a primitive cube root of unity.

Elements are stored as ``u + v*zeta`` with exact rational ``u, v``. The only
relation needed is ``zeta**2 = -1 - zeta``.
"""

from __future__ import annotations

from fractions import Fraction

from a3check.exactcore.rational import Rational, as_rational, rational_str


def _norm(x):
    # arithmetic results: ints stay ints, Fractions with denominator 1 collapse
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


class EisensteinNumber:
    """An immutable element ``u + v*zeta`` of Q(zeta)."""

    __slots__ = ("_u", "_v")

    def __init__(self, u: object = 0, v: object = 0) -> None:
        self._u = as_rational(u)
        self._v = as_rational(v)

    @property
    def u(self) -> Rational:
        return self._u

    @property
    def v(self) -> Rational:
        return self._v

    @classmethod
    def coerce(cls, x: object) -> EisensteinNumber:
        if isinstance(x, EisensteinNumber):
            return x
        return cls(x, 0)

    def __repr__(self) -> str:
        return f"EisensteinNumber({rational_str(self._u)!r}, {rational_str(self._v)!r})"

    def __str__(self) -> str:
        return f"{rational_str(self._u)} + ({rational_str(self._v)})*zeta"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EisensteinNumber):
            return self._u == other._u and self._v == other._v
        if isinstance(other, (int, Fraction)):
            return self._v == 0 and self._u == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._v == 0:
            return hash(self._u)
        return hash((self._u, self._v))

    def __bool__(self) -> bool:
        return bool(self._u) or bool(self._v)

    def __neg__(self) -> EisensteinNumber:
        return _make(-self._u, -self._v)

    def __add__(self, other) -> EisensteinNumber:
        if type(other) is EisensteinNumber:
            u, v = self._u + other._u, self._v + other._v
            if type(u) is Fraction and u.denominator == 1:
                u = u.numerator
            if type(v) is Fraction and v.denominator == 1:
                v = v.numerator
            return _make(u, v)
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return _make(_norm(self._u + other), self._v)

    __radd__ = __add__

    def __sub__(self, other) -> EisensteinNumber:
        if type(other) is EisensteinNumber:
            u, v = self._u - other._u, self._v - other._v
            if type(u) is Fraction and u.denominator == 1:
                u = u.numerator
            if type(v) is Fraction and v.denominator == 1:
                v = v.numerator
            return _make(u, v)
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return _make(_norm(self._u - other), self._v)

    def __rsub__(self, other) -> EisensteinNumber:
        return (-self) + other

    def __mul__(self, other) -> EisensteinNumber:
        if type(other) is EisensteinNumber:
            return eis_mul(self, other)
        if type(other) is int:
            return _make(self._u * other, self._v * other)
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return _make(_norm(self._u * other), _norm(self._v * other))

    __rmul__ = __mul__

    def __truediv__(self, other) -> EisensteinNumber:
        other = EisensteinNumber.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other) -> EisensteinNumber:
        return EisensteinNumber.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> EisensteinNumber:
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> EisensteinNumber:
        return eis_conj(self)

    def norm(self) -> Rational:
        return eis_norm(self)

    def inverse(self) -> EisensteinNumber:
        n = eis_norm(self)
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        c = eis_conj(self)
        return _make(_norm(Fraction(c._u) / n), _norm(Fraction(c._v) / n))

    def is_rational(self) -> bool:
        return self._v == 0


def eis_mul(z: EisensteinNumber, w: EisensteinNumber) -> EisensteinNumber:
    """Product in the basis ``{1, zeta}``, reducing with ``zeta**2 = -1 - zeta``."""
    # (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2 = (ac - bd) + (ad + bc - bd) z
    a, b, c, d = z._u, z._v, w._u, w._v
    bd = b * d
    u, v = a * c - bd, a * d + b * c - bd
    if type(u) is Fraction and u.denominator == 1:
        u = u.numerator
    if type(v) is Fraction and v.denominator == 1:
        v = v.numerator
    return _make(u, v)


def eis_conj(z: EisensteinNumber) -> EisensteinNumber:
    """Complex conjugation ``zeta -> zeta**2``: ``(u, v) -> (u - v, -v)``."""
    return _make(_norm(z._u - z._v), -z._v)


def eis_norm(z: EisensteinNumber) -> Rational:
    """``z * conj(z) = u**2 - u*v + v**2``, the squared complex absolute value."""
    u, v = z._u, z._v
    return _norm(u * u - u * v + v * v)


_new = object.__new__


def _make(u, v) -> EisensteinNumber:
    # trusted constructor: u, v already normalized rationals
    z = _new(EisensteinNumber)
    z._u = u
    z._v = v
    return z


ZERO = EisensteinNumber(0, 0)
ONE = EisensteinNumber(1, 0)
ZETA = EisensteinNumber(0, 1)
ZETA2 = EisensteinNumber(-1, -1)
