"""Exact arithmetic in an imaginary quadratic field K = Q(sqrt(d)).

Elements are stored on the integral basis (1, w) with w = (D + sqrt(D))/2,
D the fundamental discriminant, so that O_K = Z + Z*w for every squarefree
d < 0.  All coordinates are arbitrary-precision rationals; there is no
floating point anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rat = Union[int, Fraction]


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


class QuadField:
    """The field Q(sqrt(d)) for a squarefree negative integer d."""

    def __init__(self, d: int):
        if d >= 0:
            raise ValueError(f"d must be negative, got {d}")
        if not _is_squarefree(d):
            raise ValueError(f"d must be squarefree, got {d}")
        self.d = d
        self.disc = d if d % 4 == 1 else 4 * d
        # w = (D + sqrt(D))/2 satisfies w^2 - tr*w + nm = 0
        self.omega_trace = self.disc
        self.omega_norm = (self.disc * self.disc - self.disc) // 4
        self._units = None

    def __repr__(self):
        return f"QuadField({self.d})"

    def __eq__(self, other):
        return isinstance(other, QuadField) and self.d == other.d

    def __hash__(self):
        return hash(("QuadField", self.d))

    def element(self, a: Rat, b: Rat = 0) -> "FieldElement":
        return FieldElement(self, Fraction(a), Fraction(b))

    @property
    def zero(self) -> "FieldElement":
        return self.element(0, 0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1, 0)

    @property
    def omega(self) -> "FieldElement":
        return self.element(0, 1)

    def sqrt_disc(self) -> "FieldElement":
        """The element sqrt(D) = 2w - D."""
        return self.element(-self.disc, 2)

    def units(self) -> list["FieldElement"]:
        """The unit group of O_K: {+-1} except for d = -1, -3."""
        if self._units is None:
            us = []
            for b in range(-1, 2):
                for a in range(-abs(self.disc) - 1, abs(self.disc) + 2):
                    x = self.element(a, b)
                    if x.norm() == 1:
                        us.append(x)
            self._units = us
        return list(self._units)

    def from_json(self, data) -> "FieldElement":
        a, b = data
        return self.element(Fraction(a), Fraction(b))


def make_field(d: int) -> QuadField:
    """Build Q(sqrt(d)) with the fundamental-discriminant convention."""
    return QuadField(d)


class FieldElement:
    """An element a + b*w of K, with exact rational coordinates a, b."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: QuadField, a: Fraction, b: Fraction):
        self.field = field
        self.a = a
        self.b = b

    def __repr__(self):
        if self.b == 0:
            return f"{self.a}"
        return f"({self.a} + {self.b}*w)"

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field.d == other.field.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field.d, self.a, self.b))

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field.d != self.field.d:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, Fraction(other), Fraction(0))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        K = self.field
        # w^2 = tr*w - nm
        bb = self.b * o.b
        return FieldElement(
            K,
            self.a * o.a - bb * K.omega_norm,
            self.a * o.b + self.b * o.a + bb * K.omega_trace,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero field element")
        num = self * o.conj()
        return FieldElement(self.field, num.a / n, num.b / n)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def conj(self) -> "FieldElement":
        """The nontrivial field automorphism: w |-> tr(w) - w."""
        return FieldElement(
            self.field, self.a + self.b * self.field.omega_trace, -self.b
        )

    def norm(self) -> Fraction:
        K = self.field
        return self.a * self.a + self.a * self.b * K.omega_trace + self.b * self.b * K.omega_norm

    def trace(self) -> Fraction:
        return 2 * self.a + self.b * self.field.omega_trace

    def is_integral(self) -> bool:
        """x is in O_K iff both coordinates are rational integers."""
        return self.a.denominator == 1 and self.b.denominator == 1

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, Fraction(1), Fraction(0)) / self

    def to_json(self):
        return [str(self.a), str(self.b)]


def conj(x: FieldElement) -> FieldElement:
    return x.conj()


def norm(x: FieldElement) -> Fraction:
    return x.norm()


def trace(x: FieldElement) -> Fraction:
    return x.trace()
