"""Exact arithmetic in Q(sqrt3) and its complexification Q(sqrt3, i).

A :class:`FieldScalar` stores ``(a + b*sqrt3) / d`` as three Python ints with
``d > 0`` and ``gcd(a, b, d) == 1``.  The rational parts are exposed as
:class:`fractions.Fraction` through the :attr:`FieldScalar.a` and
:attr:`FieldScalar.b` properties.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

SQRT3_FLOAT = math.sqrt(3.0)

_TEXT_RE = re.compile(
    r"^(?P<a>[+-]?\d+(?:/\d+)?)?"
    r"(?:(?P<sign>[+-])?(?P<b>\d+(?:/\d+)?)\*sqrt3)?$"
)


class FieldScalar:
    """Element ``a + b*sqrt3`` of the real quadratic field Q(sqrt3)."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a=0, b=0):
        fa = Fraction(a)
        fb = Fraction(b)
        d = fa.denominator * fb.denominator // math.gcd(fa.denominator, fb.denominator)
        self._set(fa.numerator * (d // fa.denominator), fb.numerator * (d // fb.denominator), d)

    def _set(self, a: int, b: int, d: int) -> None:
        g = math.gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a, self._b, self._d = a, b, d

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "FieldScalar":
        """Build from integers without validation; ``d`` must be positive."""
        obj = cls.__new__(cls)
        obj._set(a, b, d)
        return obj

    @classmethod
    def coerce(cls, value) -> "FieldScalar":
        if isinstance(value, FieldScalar):
            return value
        if isinstance(value, (int, _RationalABC)):
            return cls(value)
        if isinstance(value, str):
            return parse_scalar(value)
        raise TypeError(f"cannot convert {type(value).__name__} to FieldScalar")

    @property
    def a(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def b(self) -> Fraction:
        return Fraction(self._b, self._d)

    def ints(self) -> tuple[int, int, int]:
        """The canonical integer triple ``(a, b, d)``."""
        return self._a, self._b, self._d

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_rational(self) -> bool:
        return self._b == 0

    def conjugate(self) -> "FieldScalar":
        """Galois conjugate ``a - b*sqrt3``."""
        return FieldScalar._raw(self._a, -self._b, self._d)

    def field_norm(self) -> Fraction:
        """``a**2 - 3*b**2``; zero only for zero since sqrt3 is irrational."""
        return Fraction(self._a * self._a - 3 * self._b * self._b, self._d * self._d)

    def sign(self) -> int:
        """Sign of the real number ``a + b*sqrt3``, decided exactly."""
        a, b = self._a, self._b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: compare a**2 with 3*b**2
        dominant = 1 if a * a > 3 * b * b else -1
        return dominant if a > 0 else -dominant

    def __float__(self) -> float:
        return (self._a + self._b * SQRT3_FLOAT) / self._d

    def __add__(self, other):
        if not isinstance(other, FieldScalar):
            try:
                other = FieldScalar.coerce(other)
            except TypeError:
                return NotImplemented
        if not (other._a or other._b):
            return self
        if not (self._a or self._b):
            return other
        d1, d2 = self._d, other._d
        if d1 == d2:
            return FieldScalar._raw(self._a + other._a, self._b + other._b, d1)
        return FieldScalar._raw(self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> "FieldScalar":
        return FieldScalar._raw(-self._a, -self._b, self._d)

    def __pos__(self) -> "FieldScalar":
        return self

    def __sub__(self, other):
        if not isinstance(other, FieldScalar):
            try:
                other = FieldScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FieldScalar):
            try:
                other = FieldScalar.coerce(other)
            except TypeError:
                return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        return FieldScalar._raw(a1 * a2 + 3 * b1 * b2, a1 * b2 + a2 * b1, self._d * other._d)

    __rmul__ = __mul__

    def inverse(self) -> "FieldScalar":
        if self.is_zero():
            raise ZeroDivisionError("FieldScalar zero has no inverse")
        a, b, d = self._a, self._b, self._d
        n = a * a - 3 * b * b
        # (a + b r)/d inverted is d (a - b r)/n
        if n < 0:
            return FieldScalar._raw(-d * a, d * b, -n)
        return FieldScalar._raw(d * a, -d * b, n)

    def __truediv__(self, other):
        if not isinstance(other, FieldScalar):
            try:
                other = FieldScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return FieldScalar.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "FieldScalar":
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldScalar):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, _RationalABC)):
            return self._b == 0 and Fraction(self._a, self._d) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __lt__(self, other) -> bool:
        return (self - FieldScalar.coerce(other)).sign() < 0

    def __le__(self, other) -> bool:
        return (self - FieldScalar.coerce(other)).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - FieldScalar.coerce(other)).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - FieldScalar.coerce(other)).sign() >= 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"FieldScalar({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)


ZERO = FieldScalar(0)
ONE = FieldScalar(1)
SQRT3 = FieldScalar(0, 1)


def field_arith(x: FieldScalar, y: FieldScalar, op: str) -> FieldScalar:
    """Apply ``op`` in ``{"add", "sub", "mul"}`` to two field elements."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown field operation {op!r}")


def field_inv(x: FieldScalar) -> FieldScalar:
    return x.inverse()


def format_scalar(x: FieldScalar) -> str:
    """Text form ``p/q`` or ``p/q+r/s*sqrt3`` (no spaces)."""
    a = x.a
    b = x.b
    if b == 0:
        return str(a)
    sign = "-" if b < 0 else "+"
    return f"{a}{sign}{abs(b)}*sqrt3"


def parse_scalar(text: str) -> FieldScalar:
    text = text.strip()
    m = _TEXT_RE.match(text)
    if not text or m is None or (m.group("a") is None and m.group("b") is None):
        raise ValueError(f"malformed scalar {text!r}")
    if m.group("a") is not None and m.group("b") is not None and m.group("sign") is None:
        raise ValueError(f"malformed scalar {text!r}")
    a = Fraction(m.group("a")) if m.group("a") is not None else Fraction(0)
    b = Fraction(m.group("b")) if m.group("b") is not None else Fraction(0)
    if m.group("sign") == "-":
        b = -b
    return FieldScalar(a, b)


class ComplexScalar:
    """Element ``re + im*i`` of Q(sqrt3, i) with both parts in Q(sqrt3)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = FieldScalar.coerce(re)
        self.im = FieldScalar.coerce(im)

    @classmethod
    def coerce(cls, value) -> "ComplexScalar":
        if isinstance(value, ComplexScalar):
            return value
        return cls(value, 0)

    def conjugate(self) -> "ComplexScalar":
        return ComplexScalar(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def is_real(self) -> bool:
        return self.im.is_zero()

    def __add__(self, other):
        other = ComplexScalar.coerce(other)
        if other.is_zero():
            return self
        return ComplexScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexScalar(-self.re, -self.im)

    def __sub__(self, other):
        other = ComplexScalar.coerce(other)
        return ComplexScalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return ComplexScalar.coerce(other) - self

    def __mul__(self, other):
        other = ComplexScalar.coerce(other)
        if self.is_zero() or other.is_zero():
            return _CZERO
        if self.im.is_zero() and other.im.is_zero():
            return ComplexScalar(self.re * other.re, ZERO)
        return ComplexScalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "ComplexScalar":
        n = self.re * self.re + self.im * self.im
        if n.is_zero():
            raise ZeroDivisionError("ComplexScalar zero has no inverse")
        inv = n.inverse()
        return ComplexScalar(self.re * inv, -self.im * inv)

    def __truediv__(self, other):
        return self * ComplexScalar.coerce(other).inverse()

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __eq__(self, other) -> bool:
        if isinstance(other, ComplexScalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (FieldScalar, int, _RationalABC)):
            return self.im.is_zero() and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"ComplexScalar({format_complex(self)!r})"

    def __str__(self) -> str:
        return format_complex(self)


_CZERO = ComplexScalar(0, 0)


def format_complex(z: ComplexScalar) -> str:
    return f"{z.re}+({z.im})*i" if not z.im.is_zero() else str(z.re)


I = ComplexScalar(0, 1)
