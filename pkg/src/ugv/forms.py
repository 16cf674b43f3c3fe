"""Hermitian forms on K^2 and their weighted minima.

A form F with F^dagger = F is stored by its four rational coordinates
(p, q, r, s) in the symmetric-space basis

    E11,  E22,  E12 + E21,  w*E12 + conj(w)*E21,

i.e. F = [[p, r + s*w], [r + s*conj(w), q]].  The trace pairing
<F1, F2> = trace(F1*F2) is rational on this space and positive definite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .enumeration import short_vector_coords
from .lattice import PseudoLattice, Vector, max_class_norm
from .qfield import FieldElement, QuadField

SYM_DIM = 4


class HermForm:
    """A Hermitian 2x2 form over K with exact rational sym coordinates."""

    __slots__ = ("field", "sym")

    def __init__(self, field: QuadField, sym):
        self.field = field
        self.sym = tuple(Fraction(x) for x in sym)
        assert len(self.sym) == SYM_DIM

    @classmethod
    def identity(cls, field: QuadField) -> "HermForm":
        return cls(field, (1, 1, 0, 0))

    @classmethod
    def from_entries(cls, field: QuadField, f11, f12, f22) -> "HermForm":
        """Build from the diagonal rationals and the upper entry f12 in K."""
        return cls(field, (Fraction(f11), Fraction(f22), f12.a, f12.b))

    def __repr__(self):
        return f"HermForm{self.sym}"

    def __eq__(self, other):
        return (
            isinstance(other, HermForm)
            and self.field.d == other.field.d
            and self.sym == other.sym
        )

    def __hash__(self):
        return hash((self.field.d, self.sym))

    @property
    def f11(self) -> Fraction:
        return self.sym[0]

    @property
    def f22(self) -> Fraction:
        return self.sym[1]

    @property
    def f12(self) -> FieldElement:
        return self.field.element(self.sym[2], self.sym[3])

    def entries(self):
        K = self.field
        f12 = self.f12
        return (
            (K.element(self.f11), f12),
            (f12.conj(), K.element(self.f22)),
        )

    # -- linear structure ------------------------------------------------------

    def __add__(self, other: "HermForm") -> "HermForm":
        return HermForm(self.field, tuple(a + b for a, b in zip(self.sym, other.sym)))

    def __sub__(self, other: "HermForm") -> "HermForm":
        return HermForm(self.field, tuple(a - b for a, b in zip(self.sym, other.sym)))

    def __neg__(self) -> "HermForm":
        return HermForm(self.field, tuple(-a for a in self.sym))

    def __mul__(self, t) -> "HermForm":
        t = Fraction(t)
        return HermForm(self.field, tuple(a * t for a in self.sym))

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.sym)

    # -- evaluation ------------------------------------------------------------

    def evaluate(self, x: Vector) -> Fraction:
        """F[x] = x^dagger F x, a rational number."""
        x1, x2 = x
        cross = self.f12 * x1.conj() * x2
        return self.f11 * x1.norm() + self.f22 * x2.norm() + cross.trace()

    def bilinear(self, x: Vector, y: Vector) -> Fraction:
        """Polarization: (F[x+y] - F[x] - F[y]) / 2 = Tr(x^dagger F y)/2."""
        x1, x2 = x
        y1, y2 = y
        z = (
            self.f11 * (x1.conj() * y1)
            + self.f12 * (x1.conj() * y2)
            + self.f12.conj() * (x2.conj() * y1)
            + self.f22 * (x2.conj() * y2)
        )
        return z.trace() / 2

    def det(self) -> Fraction:
        return self.f11 * self.f22 - self.f12.norm()

    def trace(self) -> Fraction:
        return self.f11 + self.f22

    def is_positive_definite(self) -> bool:
        """Leading principal minors positive."""
        return self.f11 > 0 and self.det() > 0

    def is_positive_semidefinite(self) -> bool:
        # 2x2 Hermitian: eigenvalue sum and product both nonnegative
        return self.trace() >= 0 and self.det() >= 0

    def inverse(self) -> "HermForm":
        d = self.det()
        if d == 0:
            raise ValueError("singular form")
        return HermForm(
            self.field,
            (self.f22 / d, self.f11 / d, -self.sym[2] / d, -self.sym[3] / d),
        )

    def transform(self, g) -> "HermForm":
        """g^dagger F g for a 2x2 K-matrix g."""
        (a, b), (c, d) = g
        F = self.entries()
        # column j of F*g, then rows of g^dagger
        col = [[None, None], [None, None]]
        for i in range(2):
            for j in range(2):
                col[i][j] = F[i][0] * g[0][j] + F[i][1] * g[1][j]
        e11 = a.conj() * col[0][0] + c.conj() * col[1][0]
        e12 = a.conj() * col[0][1] + c.conj() * col[1][1]
        e22 = b.conj() * col[0][1] + d.conj() * col[1][1]
        assert e11.b == 0 and e22.b == 0
        return HermForm(self.field, (e11.a, e22.a, e12.a, e12.b))

    def galois_conjugate(self) -> "HermForm":
        """Apply the field automorphism to every entry."""
        p, q, r, s = self.sym
        return HermForm(self.field, (p, q, r + s * self.field.omega_trace, -s))

    def to_json(self):
        return [str(x) for x in self.sym]

    @classmethod
    def from_json(cls, field: QuadField, data) -> "HermForm":
        return cls(field, tuple(Fraction(x) for x in data))


def pair(f1: HermForm, f2: HermForm) -> Fraction:
    """Trace pairing trace(F1*F2); rational and positive definite on Sym."""
    return f1.f11 * f2.f11 + f1.f22 * f2.f22 + (f1.f12 * f2.f12.conj()).trace()


def evaluate(f: HermForm, x: Vector) -> Fraction:
    return f.evaluate(x)


def is_positive_definite(f: HermForm) -> bool:
    return f.is_positive_definite()


def projection(x: Vector) -> HermForm:
    """The rank-one form x * x^dagger; satisfies <F, p(x)> = F[x]."""
    x1, x2 = x
    cross = x1 * x2.conj()
    return HermForm(x1.field, (x1.norm(), x2.norm(), cross.a, cross.b))


def pairing_gram(field: QuadField):
    """Gram matrix of the trace pairing in the sym basis (4x4 rational)."""
    basis = sym_basis(field)
    return [[pair(a, b) for b in basis] for a in basis]


def sym_basis(field: QuadField) -> list[HermForm]:
    return [HermForm(field, tuple(int(i == j) for j in range(SYM_DIM))) for i in range(SYM_DIM)]


def trace_gram(f: HermForm, lat: PseudoLattice):
    """Gram matrix of the Z-quadratic form z -> F[l(z)] on the lattice Z-basis."""
    basis = lat.zbasis
    return [[f.bilinear(x, y) for y in basis] for x in basis]


def short_vectors(f: HermForm, lat: PseudoLattice, bound, backend: str | None = None):
    """All l in L - 0 with F[l] <= bound, one per unit-scaling orbit,
    as (coords, value) sorted by (value, coords)."""
    if not f.is_positive_definite():
        raise ValueError("form is not positive definite")
    gram = trace_gram(f, lat)
    raw = short_vector_coords(gram, bound, backend=backend)
    if len(lat.field.units()) == 2:
        return raw
    seen = {}
    for z, val in raw:
        canon = canon_coords(lat, z)
        if canon not in seen:
            seen[canon] = val
    return sorted(seen.items(), key=lambda t: (t[1], t[0]))


def canon_coords(lat: PseudoLattice, z) -> tuple[int, ...]:
    """Canonical representative of the unit-orbit of the coordinate vector z."""
    units = lat.field.units()
    if len(units) == 2:
        for x in z:
            if x > 0:
                return tuple(z)
            if x < 0:
                return tuple(-y for y in z)
        return tuple(z)
    vec = lat.vector(z)
    best = None
    for u in units:
        w = tuple(x * u for x in vec)
        cz = lat.coords(w)
        if best is None or cz < best:
            best = cz
    return best


@dataclass(frozen=True)
class MinimumResult:
    """Weighted minimum of a form on a lattice, with its minimal vectors.

    `sreps` holds one canonical coordinate vector per unit-scaling orbit;
    the full S_L(F) is the union of the unit orbits of these."""

    minimum: Fraction
    sreps: tuple[tuple[int, ...], ...]
    weights: dict

    @property
    def count(self) -> int:
        return len(self.sreps)


def minimum_and_minimal_vectors(
    f: HermForm, lat: PseudoLattice, weightmode: str = "phi1", backend: str | None = None
) -> MinimumResult:
    """min_L(F) = min weight(l)*F[l] and its argmin set, exactly.

    Any l with weight(l)*F[l] <= m satisfies F[l] <= B*m for B the largest
    minimal class norm, so enumerating at B*(upper bound) is complete."""
    if not f.is_positive_definite():
        raise ValueError("form is not positive definite")
    bmax = 1 if weightmode == "phi0" else max_class_norm(lat.field)
    upper = None
    for b in lat.zbasis:
        val = lat.weight(b, weightmode) * f.evaluate(b)
        if upper is None or val < upper:
            upper = val
    mu = upper
    while True:
        cands = short_vectors(f, lat, bmax * mu, backend=backend)
        best = None
        argmin = []
        weights = {}
        for z, val in cands:
            w = lat.weight(lat.vector(z), weightmode)
            weights[z] = w
            wval = w * val
            if best is None or wval < best:
                best = wval
                argmin = [z]
            elif wval == best:
                argmin.append(z)
        if best == mu:
            sreps = tuple(sorted(argmin))
            return MinimumResult(best, sreps, {z: weights[z] for z in sreps})
        # one confirmation pass at the tighter bound bmax*best
        mu = best
