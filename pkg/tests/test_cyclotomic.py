import random
from fractions import Fraction

import pytest
import sympy

from alexinv.cyclotomic import (CharacterPoint, CyclotomicElement, cyclotomic_rank,
                                evaluate_at_character)
from alexinv.laurent import LaurentPoly


def rand_elem(rng, n):
    from alexinv.upoly import euler_phi
    return CyclotomicElement(n, [Fraction(rng.randint(-4, 4)) for _ in range(euler_phi(n))])


def numeric(e: CyclotomicElement):
    z = sympy.exp(2 * sympy.pi * sympy.I / e.order)
    return complex(sum(sympy.Rational(c.numerator, c.denominator) * z ** k
                       for k, c in enumerate(e.coeffs)).evalf(30))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 15])
def test_field_arithmetic_matches_complex_numbers(n):
    rng = random.Random(n)
    for _ in range(10):
        a, b = rand_elem(rng, n), rand_elem(rng, n)
        assert abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-12
        assert abs(numeric(a + b) - (numeric(a) + numeric(b))) < 1e-12
        if not a.is_zero():
            assert a * a.inverse() == CyclotomicElement.from_rational(n, 1)


@pytest.mark.parametrize("n", [3, 5, 8, 12])
def test_zeta_power_and_conjugate(n):
    z = CyclotomicElement.zeta_power(n, 1)
    p = CyclotomicElement.from_rational(n, 1)
    for _ in range(n):
        p = p * z
    assert p == CyclotomicElement.from_rational(n, 1)
    assert z * z.conjugate() == CyclotomicElement.from_rational(n, 1)


def test_order_cap():
    with pytest.raises(ValueError):
        CyclotomicElement(1001)


def test_character_point_normalization():
    chi = CharacterPoint((Fraction(7, 6), Fraction(-1, 4)))
    assert chi.angles == (Fraction(1, 6), Fraction(3, 4))
    assert chi.order == 12
    assert chi.conjugate().angles == (Fraction(5, 6), Fraction(1, 4))
    assert CharacterPoint.from_json(chi.to_json()) == chi


def test_evaluate_at_character():
    f = LaurentPoly.from_coeffs([1, -1, 1])
    assert evaluate_at_character(f, CharacterPoint((Fraction(1, 6),))).is_zero()
    assert not evaluate_at_character(f, CharacterPoint((Fraction(1, 3),))).is_zero()


def test_cyclotomic_rank():
    one = CyclotomicElement.from_rational(6, 1)
    z = CyclotomicElement.zeta_power(6, 1)
    assert cyclotomic_rank([[one, z], [z, z * z]]) == 1
    assert cyclotomic_rank([[one, z], [z, one]]) == 2
