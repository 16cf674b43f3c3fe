"""Fractional O_K-ideals, the class group, and Steinitz representatives.

Ideals are Z-lattices in K stored as (den, hnf) with hnf = [[a, b], [0, c]]
upper triangular, encoding the Z-basis (a/den, (b + c*w)/den).

The class group is computed through reduced binary quadratic forms and Gauss
composition.  The dictionary between ideals and forms is fixed once and for
all: the form (A, B, C) of discriminant D corresponds to the ideal
Z*A + Z*(-B + sqrt(D))/2, and the class of an ideal with positively oriented
Z-basis (alpha, beta) is the reduction of
    ( N(alpha), -Tr(conj(alpha)*beta), N(beta) ) / N(I).
Both directions are exercised by round-trip tests; do not change one side
without the other.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .qfield import FieldElement, QuadField


def _xgcd(a: int, b: int):
    """Extended gcd: returns (g, x, y) with a*x + b*y = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _solve_linmod(a: int, b: int, m: int):
    """Solve a*x = b (mod m); returns (x0, step) describing x0 + step*Z."""
    g, d, _ = _xgcd(a, m)
    if b % g != 0:
        raise ValueError("no solution")
    q = b // g
    return (q * d) % m, m // g


def _hnf_rows(rows: list[tuple[int, int]]) -> tuple[int, int, int]:
    """HNF of the Z-span of rows (u, v) meaning u + v*w; returns (a, b, c)."""
    rows = [r for r in rows if r != (0, 0)]
    if not rows:
        raise ValueError("zero lattice")
    # Combine rows to a single generator (b0, c) with c = gcd of v-parts.
    u0, c = 0, 0
    zero_v: list[int] = []
    for (u, v) in rows:
        if v == 0:
            zero_v.append(u)
            continue
        if c == 0:
            u0, c = u, v
        else:
            g, x, y = _xgcd(c, v)
            zero_v.append((u0 * v - u * c) // g)
            u0, c = x * u0 + y * u, g
    if c < 0:
        u0, c = -u0, -c
    a = 0
    for u in zero_v:
        a = math.gcd(a, u)
    if c == 0 or a == 0:
        raise ValueError("lattice does not have full rank")
    b = u0 % a
    return a, b, c


class Ideal:
    """A fractional O_K-ideal (or more generally a full-rank Z-lattice in K)."""

    __slots__ = ("field", "den", "a", "b", "c")

    def __init__(self, field: QuadField, den: int, a: int, b: int, c: int):
        if den <= 0 or a <= 0 or c <= 0:
            raise ValueError("invalid HNF data")
        g = math.gcd(math.gcd(a, b), math.gcd(c, den))
        self.field = field
        self.den = den // g
        self.a = a // g
        self.b = (b // g) % (a // g)
        self.c = c // g

    @classmethod
    def from_rows(cls, field: QuadField, rows: list[tuple[int, int]], den: int) -> "Ideal":
        a, b, c = _hnf_rows(rows)
        return cls(field, den, a, b, c)

    @classmethod
    def from_generators(cls, field: QuadField, gens: list[FieldElement]) -> "Ideal":
        """The O_K-module generated by gens: Z-span of all g and g*w."""
        elems = []
        for g in gens:
            elems.append(g)
            elems.append(g * field.omega)
        den = 1
        for e in elems:
            den = den * (e.a.denominator * e.b.denominator) // math.gcd(
                den, e.a.denominator * e.b.denominator
            )
        rows = [(int(e.a * den), int(e.b * den)) for e in elems]
        return cls.from_rows(field, rows, den)

    @classmethod
    def unit_ideal(cls, field: QuadField) -> "Ideal":
        return cls(field, 1, 1, 0, 1)

    def __repr__(self):
        return f"Ideal(den={self.den}, hnf=[[{self.a},{self.b}],[0,{self.c}]])"

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and self.field.d == other.field.d
            and (self.den, self.a, self.b, self.c) == (other.den, other.a, other.b, other.c)
        )

    def __hash__(self):
        return hash((self.field.d, self.den, self.a, self.b, self.c))

    def basis(self) -> tuple[FieldElement, FieldElement]:
        K = self.field
        return (
            K.element(Fraction(self.a, self.den)),
            K.element(Fraction(self.b, self.den), Fraction(self.c, self.den)),
        )

    def norm(self) -> Fraction:
        return Fraction(self.a * self.c, self.den * self.den)

    def contains(self, x: FieldElement) -> bool:
        u = x.a * self.den
        v = x.b * self.den
        if u.denominator != 1 or v.denominator != 1:
            return False
        u, v = int(u), int(v)
        if v % self.c != 0:
            return False
        return (u - (v // self.c) * self.b) % self.a == 0

    def is_module(self) -> bool:
        """Closure under multiplication by w (O_K-stability)."""
        a1, b1 = self.basis()
        w = self.field.omega
        return self.contains(a1 * w) and self.contains(b1 * w)

    def __mul__(self, other):
        if isinstance(other, Ideal):
            xs = self.basis()
            ys = other.basis()
            den = self.den * other.den
            rows = []
            for x in xs:
                for y in ys:
                    p = x * y
                    rows.append((int(p.a * den), int(p.b * den)))
            return Ideal.from_rows(self.field, rows, den)
        if isinstance(other, FieldElement):
            return self.scale(other)
        if isinstance(other, (int, Fraction)):
            return self.scale(self.field.element(other))
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other: "Ideal") -> "Ideal":
        """Ideal sum (gcd of ideals)."""
        den = self.den * other.den
        rows = []
        for x in self.basis() + other.basis():
            rows.append((int(x.a * den), int(x.b * den)))
        return Ideal.from_rows(self.field, rows, den)

    def scale(self, x: FieldElement) -> "Ideal":
        if not x:
            raise ValueError("scaling by zero")
        den = self.den * x.a.denominator * x.b.denominator
        rows = []
        for y in self.basis():
            p = x * y
            rows.append((int(p.a * den), int(p.b * den)))
        return Ideal.from_rows(self.field, rows, den)

    def conj(self) -> "Ideal":
        rows = []
        for x in self.basis():
            p = x.conj()
            rows.append((int(p.a * self.den), int(p.b * self.den)))
        return Ideal.from_rows(self.field, rows, self.den)

    def inverse(self) -> "Ideal":
        """I^-1 = conj(I)/N(I); valid since O_K is the maximal order."""
        n = self.norm()
        return self.conj().scale(self.field.element(1 / n))

    def to_json(self):
        return {"den": self.den, "hnf": [[self.a, self.b], [0, self.c]]}

    @classmethod
    def from_json(cls, field: QuadField, data) -> "Ideal":
        return cls(field, data["den"], data["hnf"][0][0], data["hnf"][0][1], data["hnf"][1][1])


def ideal_mul(i: Ideal, j: Ideal) -> Ideal:
    return i * j


def ideal_inverse(i: Ideal) -> Ideal:
    return i.inverse()


def ideal_norm(i: Ideal) -> Fraction:
    return i.norm()


def principal_ideal(field: QuadField, x: FieldElement) -> Ideal:
    if not x:
        raise ValueError("zero ideal")
    return Ideal.from_generators(field, [x])


def primes_above(field: QuadField, p: int) -> list[Ideal]:
    """Prime ideals over a rational prime p, via roots of the w-polynomial mod p."""
    tr = field.omega_trace % p
    nm = field.omega_norm % p
    roots = [r for r in range(p) if (r * r - tr * r + nm) % p == 0]
    if not roots:
        return [Ideal.from_generators(field, [field.element(p)])]
    ideals = []
    for r in roots:
        ideals.append(Ideal.from_generators(field, [field.element(p), field.element(-r, 1)]))
    return ideals


# ---------------------------------------------------------------------------
# Binary quadratic forms and the class group


def _reduce_form(a: int, b: int, c: int, disc: int) -> tuple[int, int, int]:
    """Reduce a positive definite form of discriminant disc < 0."""
    while True:
        if -a < b <= a <= c:
            if b < 0 and a == c:
                b = -b
            return a, b, c
        if a > c or (a == c and b < 0):
            a, b, c = c, -b, a
            continue
        # shift b into (-a, a]
        b_new = ((b + a) % (2 * a)) - a
        if b_new == -a:
            b_new = a
        c = (b_new * b_new - disc) // (4 * a)
        b = b_new


class IdealClass:
    """An ideal class, represented by the reduced form (A, B, C) of disc D."""

    __slots__ = ("field", "form")

    def __init__(self, field: QuadField, form: tuple[int, int, int]):
        A, B, C = form
        if B * B - 4 * A * C != field.disc:
            raise ValueError("form has wrong discriminant")
        self.field = field
        self.form = _reduce_form(A, B, C, field.disc)

    def __repr__(self):
        return f"IdealClass{self.form}"

    def __eq__(self, other):
        return (
            isinstance(other, IdealClass)
            and self.field.d == other.field.d
            and self.form == other.form
        )

    def __hash__(self):
        return hash((self.field.d, self.form))

    @property
    def min_norm(self) -> int:
        """Smallest norm of an integral ideal in the class: the A coefficient."""
        return self.form[0]

    def is_principal(self) -> bool:
        return self.form[0] == 1

    def representative_ideal(self) -> Ideal:
        """The dictionary ideal Z*A + Z*(-B + sqrt(D))/2, of norm A."""
        A, B, _ = self.form
        D = self.field.disc
        return Ideal(self.field, 1, A, ((-B - D) // 2) % A, 1)

    def to_json(self):
        return list(self.form)


def class_of(i: Ideal) -> IdealClass:
    """The ideal class of a fractional ideal, as a reduced form."""
    K = i.field
    alpha, beta = i.basis()
    # orientation: conj(alpha)*beta - alpha*conj(beta) = r*sqrt(D), require r > 0
    x = alpha.conj() * beta
    r = x.b  # x - conj(x) = x.b*(w - conj(w)) = x.b*sqrt(D)
    if r == 0:
        raise ValueError("degenerate basis")
    if r < 0:
        beta = -beta
        x = alpha.conj() * beta
    n = i.norm()
    A = alpha.norm() / n
    B = -x.trace() / n
    C = beta.norm() / n
    assert A.denominator == 1 and B.denominator == 1 and C.denominator == 1
    return IdealClass(K, (int(A), int(B), int(C)))


def class_min_norm(c: IdealClass) -> int:
    return c.min_norm


def _compose_forms(f1: tuple[int, int, int], f2: tuple[int, int, int], disc: int):
    """Gauss composition of primitive forms of the same discriminant."""
    a, b, c = f1
    al, be, ga = f2
    g = (b + be) // 2
    h = -(b - be) // 2
    w = math.gcd(math.gcd(a, al), g)
    j = w
    s = a // w
    t = al // w
    u = g // w
    mu, nu = _solve_linmod(t * u, h * u + s * c, s * t)
    lam = _solve_linmod(t * nu, h - t * mu, s)[0]
    k = mu + nu * lam
    el = (k * t - h) // s
    m = (t * u * k - h * u - c * s) // (s * t)
    A = s * t
    B = j * u - (k * t + el * s)
    C = k * el - j * m
    return _reduce_form(A, B, C, disc)


class ClassGroup:
    """The class group Cl(K), with composition on reduced forms."""

    def __init__(self, field: QuadField):
        self.field = field
        D = field.disc
        forms = []
        amax = math.isqrt(abs(D) // 3)
        for a in range(1, amax + 1):
            for b in range(-a + 1, a + 1):
                if (b * b - D) % (4 * a) != 0:
                    continue
                c = (b * b - D) // (4 * a)
                if c < a:
                    continue
                if b < 0 and (abs(b) == a or a == c):
                    continue
                if math.gcd(math.gcd(a, b), c) != 1:
                    continue
                forms.append((a, b, c))
        forms.sort(key=lambda f: (f[0] != 1, f[0], abs(f[1]), -f[1]))
        self.classes = [IdealClass(field, f) for f in forms]
        self._index = {c.form: k for k, c in enumerate(self.classes)}

    @property
    def order(self) -> int:
        return len(self.classes)

    @property
    def identity(self) -> IdealClass:
        return self.classes[0]

    def compose(self, c1: IdealClass, c2: IdealClass) -> IdealClass:
        f = _compose_forms(c1.form, c2.form, self.field.disc)
        return self.classes[self._index[f]]

    def inverse(self, c: IdealClass) -> IdealClass:
        A, B, C = c.form
        return self.classes[self._index[_reduce_form(A, -B, C, self.field.disc)]]

    def power(self, c: IdealClass, n: int) -> IdealClass:
        if n < 0:
            return self.power(self.inverse(c), -n)
        r = self.identity
        while n:
            if n & 1:
                r = self.compose(r, c)
            c = self.compose(c, c)
            n >>= 1
        return r

    def element_order(self, c: IdealClass) -> int:
        k, x = 1, c
        while x != self.identity:
            x = self.compose(x, c)
            k += 1
        return k

    @property
    def exponent(self) -> int:
        e = 1
        for c in self.classes:
            o = self.element_order(c)
            e = e * o // math.gcd(e, o)
        return e


@lru_cache(maxsize=None)
def class_group(field: QuadField) -> ClassGroup:
    return ClassGroup(field)


def steinitz_reps_mod_n(field: QuadField, n: int) -> list[IdealClass]:
    """One class per element of Cl(K)/Cl(K)^n, principal class first.

    These index the conjugacy classes of maximal orders in M_n(K).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    cg = class_group(field)
    subgroup = {cg.power(c, n) for c in cg.classes}
    reps: list[IdealClass] = []
    covered: set[IdealClass] = set()
    for c in cg.classes:  # canonical order: identity first, then small A
        if c in covered:
            continue
        reps.append(c)
        covered.update(cg.compose(c, s) for s in subgroup)
    return reps
