import random
from fractions import Fraction

import pytest

from qsikit.cyclotomic import Cyclotomic, ONE, ZERO, cyclotomic_polynomial
from qsikit.errors import DomainError


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_roots_of_unity_sum_to_zero():
    for n in (2, 3, 4, 5, 6, 8, 9, 12):
        total = ZERO
        for k in range(n):
            total = total + Cyclotomic.zeta(n, k)
        assert total.is_zero(), n


def test_canonical_equality_across_conductors():
    # zeta_6 = 1 + zeta_3 lives in the conductor-3 field
    z6 = Cyclotomic.zeta(6)
    assert z6.conductor == 3
    assert z6 == Cyclotomic.from_exponent_map(3, {0: 1, 1: 1})
    # even-over-odd conductors always collapse
    assert Cyclotomic.zeta(10).conductor == 5
    assert Cyclotomic.zeta(4).conductor == 4


def test_rational_collapse():
    z5 = Cyclotomic.zeta(5)
    value = z5 + z5**2 + z5**3 + z5**4
    assert value == Cyclotomic.from_rational(-1)
    assert value.is_integer() and value.integer_value() == -1
    with pytest.raises(DomainError):
        z5.rational_value()


def test_ring_axioms_randomized():
    rng = random.Random(5)

    def random_value():
        n = rng.choice([1, 3, 4, 5, 8, 12])
        return Cyclotomic.from_exponent_map(
            n, {rng.randrange(n): Fraction(rng.randint(-3, 3),
                                           rng.randint(1, 3))
                for _ in range(2)})

    for _ in range(60):
        a, b, c = random_value(), random_value(), random_value()
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + ZERO == a
        assert a * ONE == a
        assert (a - a).is_zero()


def test_conjugation():
    z7 = Cyclotomic.zeta(7)
    assert z7.conjugate() == Cyclotomic.zeta(7, 6)
    assert z7.abs_squared() == ONE
    value = 2 * z7 + 3 * z7**2
    assert value.conjugate().conjugate() == value
    # conjugation is a ring homomorphism
    other = z7**3 - 1
    assert (value * other).conjugate() == value.conjugate() * other.conjugate()


def test_golden_ratio_arithmetic():
    # zeta_5 + zeta_5^-1 = (-1 + sqrt 5)/2 satisfies x^2 + x - 1 = 0
    g = Cyclotomic.zeta(5) + Cyclotomic.zeta(5, 4)
    assert g.is_real()
    assert (g * g + g - 1).is_zero()
    assert g.real_sign() == 1
    assert (g - 1).real_sign() == -1


def test_real_comparisons():
    g = Cyclotomic.zeta(5) + Cyclotomic.zeta(5, 4)  # about 0.618
    assert g <= ONE
    assert not (ONE <= g)
    assert g <= g
    half = Cyclotomic.from_rational(Fraction(1, 2))
    assert half <= g


def test_sign_of_non_real_raises():
    with pytest.raises(DomainError):
        Cyclotomic.zeta(3).real_sign()


def test_galois_orbit():
    z9 = Cyclotomic.zeta(9)
    with pytest.raises(DomainError):
        z9.galois(3)
    assert z9.galois(2).galois(5) == z9.galois(10 % 9)


def test_json_round_trip():
    import json

    values = [ONE, ZERO, Cyclotomic.zeta(12) * 3 - 2,
              Cyclotomic.from_rational(Fraction(-7, 3))]
    for v in values:
        data = json.loads(json.dumps(v.to_json()))
        assert Cyclotomic.from_json(data) == v


def test_hash_consistency():
    a = Cyclotomic.zeta(6)
    b = Cyclotomic.from_exponent_map(3, {0: 1, 1: 1})
    assert a == b and hash(a) == hash(b)
