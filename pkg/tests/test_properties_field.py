"""Randomized property suite for the cyclotomic field layer.

Runs standalone:  pytest tests/test_properties_field.py

The main loop drives well over 10^4 randomized cases through the field axioms
(associativity, commutativity, distributivity, identities, negation) at level
36 and a couple of smaller levels; inverses get a separate, smaller loop since
each one costs a 12x12 exact solve.
"""

import math
import random
from fractions import Fraction

from e6fine.cyclo import field, multiplicative_order

SEED = 361219
N_AXIOM_CASES = 10_500
N_INVERSE_CASES = 600


def _random_element(rng, fld, max_terms=3):
    vec = [0] * fld.degree
    for _ in range(rng.randint(1, max_terms)):
        vec[rng.randrange(fld.degree)] = rng.randint(-9, 9)
    return fld.element(vec, rng.randint(1, 12))


def test_field_axioms_randomized():
    rng = random.Random(SEED)
    fields = [field(36), field(36), field(36), field(12), field(7)]
    checked = 0
    for _ in range(N_AXIOM_CASES):
        fld = rng.choice(fields)
        a = _random_element(rng, fld)
        b = _random_element(rng, fld)
        c = _random_element(rng, fld)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + fld.zero == a
        assert a * fld.one == a
        assert a - a == fld.zero
        assert a + (-a) == fld.zero
        assert -(-a) == a
        assert (a - b) + b == a
        checked += 1
    assert checked == N_AXIOM_CASES


def test_field_inverses_randomized():
    rng = random.Random(SEED + 1)
    fld = field(36)
    done = 0
    while done < N_INVERSE_CASES:
        a = _random_element(rng, fld, max_terms=4)
        if a.is_zero():
            continue
        inv = a.inverse()
        assert a * inv == fld.one
        assert (fld.one / a) == inv
        b = _random_element(rng, fld)
        assert (b / a) * a == b
        done += 1


def test_rational_scalar_compatibility_randomized():
    rng = random.Random(SEED + 2)
    fld = field(36)
    for _ in range(2000):
        a = _random_element(rng, fld)
        q = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
        assert a * q == a * fld.from_rational(q)
        assert a + q == a + fld.from_rational(q)
        assert q * a - a * q == 0


def test_root_of_unity_orders_randomized():
    rng = random.Random(SEED + 3)
    fld = field(36)
    for _ in range(1500):
        k = rng.randrange(36)
        z = fld.zeta(k)
        expect = 36 // math.gcd(36, k) if k else 1
        assert multiplicative_order(z) == expect
        assert fld.log_zeta(z) == k % 36
