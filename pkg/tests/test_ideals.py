import random
from fractions import Fraction

import pytest

from ugv.ideals import (
    Ideal,
    class_group,
    class_min_norm,
    class_of,
    ideal_norm,
    primes_above,
    principal_ideal,
    steinitz_reps_mod_n,
)
from ugv.qfield import make_field


def test_unit_ideal_product():
    K = make_field(-15)
    o = Ideal.unit_ideal(K)
    assert o * o == o
    assert o.norm() == 1
    assert o.is_module()


def test_primes_above_2_split_minus_15():
    # -15 = 1 mod 8, so 2 splits: x^2 - x + 4 factors mod 2
    K = make_field(-15)
    ps = primes_above(K, 2)
    assert len(ps) == 2
    assert all(p.norm() == 2 for p in ps)
    assert ps[0] != ps[1]
    # product of the two primes is 2*O_K
    two = principal_ideal(K, K.element(2))
    assert ps[0] * ps[1] == two


def test_primes_above_2_ramified_minus_5():
    K = make_field(-5)
    ps = primes_above(K, 2)
    assert len(ps) == 1
    assert ps[0].norm() == 2
    assert ps[0] * ps[0] == principal_ideal(K, K.element(2))


def test_primes_above_5_minus_21():
    K = make_field(-21)
    ps = primes_above(K, 5)
    assert all(p.norm() == 5 for p in ps)
    assert len(ps) == 2  # (-84/5) = (1/5) = 1, split


def test_inert_prime():
    # -15: 7 inert? kronecker(-15, 7): x^2 +15x+60 mod 7 = x^2+x+4: disc 1-16=-15=6 mod 7
    # squares mod 7: 1,2,4 -> 6 not a square -> inert
    K = make_field(-15)
    ps = primes_above(K, 7)
    assert len(ps) == 1
    assert ps[0].norm() == 49


def test_ideal_inverse():
    rng = random.Random(3)
    for d in (-15, -5, -21):
        K = make_field(d)
        o = Ideal.unit_ideal(K)
        for p in (2, 3, 5, 7, 11):
            for i in primes_above(K, p):
                assert i * i.inverse() == o
        for _ in range(10):
            x = K.element(rng.randint(-9, 9), rng.randint(-9, 9))
            if not x:
                continue
            i = principal_ideal(K, x)
            assert i * i.inverse() == o


def test_ideal_norm_multiplicative():
    rng = random.Random(4)
    K = make_field(-21)
    ideals = [i for p in (2, 3, 5, 11) for i in primes_above(K, p)]
    for _ in range(20):
        i = rng.choice(ideals)
        j = rng.choice(ideals)
        assert ideal_norm(i * j) == ideal_norm(i) * ideal_norm(j)


def test_membership_and_module():
    K = make_field(-15)
    p2 = primes_above(K, 2)[0]
    assert p2.is_module()
    assert p2.contains(K.element(2))
    assert not p2.contains(K.one)


def test_class_group_orders():
    assert class_group(make_field(-15)).order == 2
    assert class_group(make_field(-5)).order == 2
    assert class_group(make_field(-6)).order == 2
    assert class_group(make_field(-10)).order == 2
    assert class_group(make_field(-1)).order == 1
    assert class_group(make_field(-3)).order == 1
    cg21 = class_group(make_field(-21))
    assert cg21.order == 4
    assert cg21.exponent == 2
    # class number 3 and 5 fields keep the composition honest
    assert class_group(make_field(-23)).order == 3
    assert class_group(make_field(-47)).order == 5


def test_class_group_minus_15_contents():
    K = make_field(-15)
    cg = class_group(K)
    p2 = primes_above(K, 2)[0]
    assert {c for c in cg.classes} == {cg.identity, class_of(p2)}


def test_group_axioms():
    for d in (-15, -21, -23, -47, -5):
        cg = class_group(make_field(d))
        cs = cg.classes
        for x in cs:
            assert cg.compose(x, cg.identity) == x
            assert cg.compose(x, cg.inverse(x)) == cg.identity
        for x in cs:
            for y in cs:
                assert cg.compose(x, y) == cg.compose(y, x)
                for z in cs:
                    assert cg.compose(cg.compose(x, y), z) == cg.compose(
                        x, cg.compose(y, z)
                    )


def test_class_of_compatible_with_composition():
    rng = random.Random(5)
    for d in (-15, -21, -23, -47):
        K = make_field(d)
        cg = class_group(K)
        pool = [i for p in (2, 3, 5, 7, 11, 13) for i in primes_above(K, p)]
        pool = [i for i in pool if i.norm() < 100]  # drop inert squares, keep primes
        for _ in range(25):
            i = rng.choice(pool)
            j = rng.choice(pool)
            assert class_of(i * j) == cg.compose(class_of(i), class_of(j))


def test_class_of_principal():
    K = make_field(-15)
    i = principal_ideal(K, K.element(5))
    assert class_of(i).is_principal()
    # h = 2 forces the two primes over 2 into the same (self-inverse) class
    p2, p2c = primes_above(K, 2)
    assert class_of(p2) == class_of(p2c)


def test_dictionary_roundtrip():
    # form -> ideal -> class recovers the form, for every class of each field
    for d in (-15, -5, -6, -10, -21, -23, -47):
        cg = class_group(make_field(d))
        for c in cg.classes:
            rep = c.representative_ideal()
            assert rep.is_module()
            assert rep.norm() == c.min_norm
            assert class_of(rep) == c


def test_class_min_norm():
    K = make_field(-15)
    cg = class_group(K)
    assert class_min_norm(cg.identity) == 1
    p2 = primes_above(K, 2)[0]
    assert class_min_norm(class_of(p2)) == 2
    # d=-21: the class of p5 has reduced form (5,4,5)
    K21 = make_field(-21)
    p5 = primes_above(K21, 5)[0]
    assert class_of(p5).form == (5, 4, 5)
    assert class_min_norm(class_of(p5)) == 5


def test_class_of_p2_p3_equals_class_of_p5_minus_21():
    K = make_field(-21)
    cg = class_group(K)
    p2 = primes_above(K, 2)[0]
    p3 = primes_above(K, 3)[0]
    p5 = primes_above(K, 5)[0]
    assert class_of(p2 * p3) == class_of(p5)
    assert cg.compose(class_of(p2), class_of(p3)) == class_of(p5)


def test_steinitz_reps():
    assert len(steinitz_reps_mod_n(make_field(-15), 2)) == 2
    assert len(steinitz_reps_mod_n(make_field(-21), 2)) == 4
    assert len(steinitz_reps_mod_n(make_field(-1), 2)) == 1
    assert len(steinitz_reps_mod_n(make_field(-1), 5)) == 1
    # h=3, n=2: squaring is a bijection, single class
    assert len(steinitz_reps_mod_n(make_field(-23), 2)) == 1
    assert len(steinitz_reps_mod_n(make_field(-23), 3)) == 3


def test_steinitz_reps_match_genus_theory():
    # |Cl/Cl^2| = 2^(t-1), t = number of prime discriminant divisors
    for d, t in ((-15, 2), (-5, 2), (-6, 2), (-10, 2), (-21, 3), (-1, 1), (-7, 1)):
        K = make_field(d)
        assert len(steinitz_reps_mod_n(K, 2)) == 2 ** (t - 1)


def test_min_norm_attained():
    # an explicit integral ideal of norm A exists in each class
    for d in (-15, -21, -47):
        cg = class_group(make_field(d))
        for c in cg.classes:
            rep = c.representative_ideal()
            assert rep.norm() == c.min_norm
            assert rep.den == 1


def test_zero_ideal_rejected():
    K = make_field(-15)
    with pytest.raises(ValueError):
        principal_ideal(K, K.zero)


def test_json_roundtrip():
    K = make_field(-15)
    p2 = primes_above(K, 2)[0]
    i = p2.scale(K.element(Fraction(1, 3)))
    assert Ideal.from_json(K, i.to_json()) == i
