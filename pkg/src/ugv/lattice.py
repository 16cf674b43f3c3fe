"""Pseudo-lattices L(c) = e1*O + e2*c in K^n, coefficient ideals and weights.

Vectors are tuples of FieldElements.  Each lattice carries a Z-basis of
rank 2n derived from the HNF bases of its coefficient ideals; most of the
heavy machinery works on integer coordinate vectors relative to that basis.
"""

from __future__ import annotations

from fractions import Fraction

from .ideals import Ideal, class_group, class_of
from .qfield import FieldElement, QuadField

Vector = tuple[FieldElement, ...]


def max_class_norm(field: QuadField) -> int:
    """Largest minimal integral-ideal norm over all ideal classes of K."""
    return max(c.min_norm for c in class_group(field).classes)


class PseudoLattice:
    """L = e1*c1 + ... + en*cn; stored in standard form (all c_i = O_K but the last)."""

    def __init__(self, field: QuadField, coeff_ideals: list[Ideal]):
        self.field = field
        self.coeff_ideals = list(coeff_ideals)
        self.n = len(coeff_ideals)
        self._inv_ideals = [c.inverse() for c in self.coeff_ideals]
        # Z-basis: per coordinate i, the two HNF basis elements of c_i
        self.zbasis: list[Vector] = []
        zero = field.zero
        for i, c in enumerate(self.coeff_ideals):
            for gen in c.basis():
                vec = [zero] * self.n
                vec[i] = gen
                self.zbasis.append(tuple(vec))
        self._ideal_cache: dict[tuple, "Ideal"] = {}
        self._weight_cache: dict[tuple, Fraction] = {}

    def __repr__(self):
        return f"PseudoLattice(d={self.field.d}, n={self.n}, steinitz={self.steinitz_class().form})"

    def __eq__(self, other):
        return (
            isinstance(other, PseudoLattice)
            and self.field == other.field
            and self.coeff_ideals == other.coeff_ideals
        )

    def __hash__(self):
        return hash((self.field.d, tuple(self.coeff_ideals)))

    def steinitz_class(self):
        prod = self.coeff_ideals[0]
        for c in self.coeff_ideals[1:]:
            prod = prod * c
        return class_of(prod)

    # -- coordinates ---------------------------------------------------------

    def vector(self, coords) -> Vector:
        """The lattice vector with the given 2n integer coordinates."""
        K = self.field
        out = [K.zero] * self.n
        for k, z in enumerate(coords):
            if z:
                basis_vec = self.zbasis[k]
                i = k // 2
                out[i] = out[i] + z * basis_vec[i]
        return tuple(out)

    def coords(self, vec: Vector) -> tuple[int, ...]:
        """Integer (or rational, for K-vectors outside L) coordinates of vec."""
        cs = []
        for i in range(self.n):
            x = vec[i]
            g1, g2 = self.coeff_ideals[i].basis()
            # solve x = z1*g1 + z2*g2; g1 is rational, g2 = (b + c*w)/den
            z2 = x.b / g2.b
            z1 = (x.a - z2 * g2.a) / g1.a
            cs.extend([z1, z2])
        out = tuple(int(z) if z.denominator == 1 else z for z in cs)
        return out

    def contains(self, vec: Vector) -> bool:
        return all(c.contains(x) for c, x in zip(self.coeff_ideals, vec))

    def canonical_rep(self, vec: Vector) -> Vector:
        """Canonical representative of the unit-scaling orbit of vec."""
        best = None
        best_key = None
        for u in self.field.units():
            w = tuple(x * u for x in vec)
            key = tuple((x.a, x.b) for x in w)
            if best_key is None or key < best_key:
                best, best_key = w, key
        return best

    # -- coefficient ideals and weights ---------------------------------------

    def coefficient_ideal(self, vec: Vector) -> Ideal:
        """a_l = sum of c_i^-1 * l_i; integral when vec is in L."""
        if not any(vec):
            raise ValueError("zero vector has no coefficient ideal")
        key = tuple((x.a, x.b) for x in vec)
        cached = self._ideal_cache.get(key)
        if cached is not None:
            return cached
        total = None
        for inv_c, x in zip(self._inv_ideals, vec):
            if not x:
                continue
            part = inv_c.scale(x)
            total = part if total is None else total + part
        self._ideal_cache[key] = total
        return total

    def weight(self, vec: Vector, mode: str = "phi1") -> Fraction:
        """phi0 is constant 1; phi1(l) = 1/min-class-norm of a_l."""
        if not any(vec):
            raise ValueError("zero vector has no weight")
        if mode == "phi0":
            return Fraction(1)
        if mode != "phi1":
            raise ValueError(f"unknown weight mode {mode!r}")
        key = tuple((x.a, x.b) for x in vec)
        cached = self._weight_cache.get(key)
        if cached is None:
            cls = class_of(self.coefficient_ideal(vec))
            cached = Fraction(1, cls.min_norm)
            self._weight_cache[key] = cached
        return cached

    # -- GL(L) ----------------------------------------------------------------

    def gl_membership(self, g) -> bool:
        """True iff g*L = L, i.e. g_ji in c_j*c_i^-1 for all i, j, same for g^-1."""
        gi = invert_matrix(g)
        if gi is None:
            raise ValueError("singular matrix")
        for mat in (g, gi):
            for j in range(self.n):
                for i in range(self.n):
                    cji = self.coeff_ideals[j] * self._inv_ideals[i]
                    if not cji.contains(mat[j][i]):
                        return False
        return True

    def apply_matrix(self, g, vec: Vector) -> Vector:
        K = self.field
        return tuple(
            sum((g[j][i] * vec[i] for i in range(self.n)), K.zero) for j in range(self.n)
        )

    def to_json(self):
        return {
            "disc": self.field.d,
            "n": self.n,
            "steinitz": self.steinitz_class().to_json(),
            "coeff_ideals": [c.to_json() for c in self.coeff_ideals],
        }


def standard_lattice(field: QuadField, c: Ideal, n: int = 2) -> PseudoLattice:
    """L(c) = e1*O + ... + e_{n-1}*O + e_n*c."""
    ideals = [Ideal.unit_ideal(field) for _ in range(n - 1)] + [c]
    return PseudoLattice(field, ideals)


def lattice_from_pseudo_basis(field: QuadField, ideals: list[Ideal]) -> PseudoLattice:
    """Normalize an arbitrary pseudo-basis to the standard form L(prod c_i)."""
    prod = ideals[0]
    for c in ideals[1:]:
        prod = prod * c
    return standard_lattice(field, prod, n=len(ideals))


def coefficient_ideal(lat: PseudoLattice, vec: Vector) -> Ideal:
    return lat.coefficient_ideal(vec)


def weight(lat: PseudoLattice, vec: Vector, mode: str = "phi1") -> Fraction:
    return lat.weight(vec, mode)


def gl_membership(lat: PseudoLattice, g) -> bool:
    return lat.gl_membership(g)


def invert_matrix(g):
    """Inverse of a 2x2 matrix over K, or None if singular."""
    det = g[0][0] * g[1][1] - g[0][1] * g[1][0]
    if not det:
        return None
    return (
        (g[1][1] / det, -g[0][1] / det),
        (-g[1][0] / det, g[0][0] / det),
    )


def matrix_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(1, n)), a[i][0] * b[0][j]) for j in range(n))
        for i in range(n)
    )


def identity_matrix(field: QuadField, n: int = 2):
    return tuple(
        tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)
    )
