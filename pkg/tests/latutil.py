"""Shared helpers for building lattices and random GL(L) elements in tests."""

import random

from ugv.ideals import Ideal, primes_above
from ugv.lattice import PseudoLattice, identity_matrix, matrix_mul, standard_lattice
from ugv.qfield import make_field


def lat_pair_minus_15():
    K = make_field(-15)
    L0 = standard_lattice(K, Ideal.unit_ideal(K))
    L1 = standard_lattice(K, primes_above(K, 2)[0])
    return L0, L1


def lattice_for(d: int, prime: int | None = None, index: int = 0) -> PseudoLattice:
    K = make_field(d)
    if prime is None:
        return standard_lattice(K, Ideal.unit_ideal(K))
    return standard_lattice(K, primes_above(K, prime)[index])


def random_gl_element(lat: PseudoLattice, rng: random.Random, length: int = 4):
    """A random product of elementary matrices and unit diagonals in GL(L)."""
    K = lat.field
    assert lat.n == 2
    c = lat.coeff_ideals[1]
    cinv = c.inverse()
    units = K.units()

    def rand_in(ideal):
        g1, g2 = ideal.basis()
        return rng.randint(-2, 2) * g1 + rng.randint(-2, 2) * g2

    g = identity_matrix(K)
    for _ in range(length):
        kind = rng.randrange(3)
        if kind == 0:
            e = ((K.one, rand_in(cinv)), (K.zero, K.one))
        elif kind == 1:
            e = ((K.one, K.zero), (rand_in(c), K.one))
        else:
            e = ((rng.choice(units), K.zero), (K.zero, rng.choice(units)))
        g = matrix_mul(g, e)
    return g
