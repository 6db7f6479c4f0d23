import random
from fractions import Fraction

import pytest

from kmhecke.scalars import (
    CyclotomicField,
    FieldMismatchError,
    as_rational_times_zeta,
    multiplicative_order,
    nth_root,
    sqrt,
)


def test_rational_base_case():
    Q = CyclotomicField(1)
    assert Q.degree == 1
    assert Q.zeta == Q.one
    assert Q(Fraction(1, 2)) + Q(Fraction(1, 3)) == Q(Fraction(5, 6))


def test_zeta4_defining_relation():
    F = CyclotomicField(4)
    z = F.zeta
    assert z * z == F(-1)
    assert z ** 4 == F.one  # repeated reduction mod x^2 + 1


def test_product_reduction_in_q_i():
    F = CyclotomicField(4)
    z = F.zeta
    assert (F.one + z) * (F.one - z) == F(2)


def test_inverse_axiom():
    F = CyclotomicField(4)
    a = F(3) + F(2) * F.zeta
    assert a / a == F.one
    assert a * a.inverse() == F.one


def test_division_by_zero():
    F = CyclotomicField(4)
    with pytest.raises(ZeroDivisionError):
        F.one / F.zero


def test_mixing_contexts_is_an_error():
    F4, F8 = CyclotomicField(4), CyclotomicField(8)
    with pytest.raises(FieldMismatchError):
        F4.one + F8.one


def _random_element(F, rng):
    return F.element([Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(F.degree)])


@pytest.mark.parametrize("n", [1, 4, 8, 12])
def test_field_axioms_randomized(n):
    F = CyclotomicField(n)
    rng = random.Random(20240 + n)
    for _ in range(25):
        a, b, c = (_random_element(F, rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == F.zero
        if not a.is_zero():
            assert a * a.inverse() == F.one


@pytest.mark.parametrize("n", [1, 3, 4, 8, 12])
def test_zeta_has_order_exactly_n(n):
    F = CyclotomicField(n)
    assert multiplicative_order(F.zeta) == n


def test_root_of_unity_order_examples():
    F = CyclotomicField(4)
    assert multiplicative_order(F(-1), 10) == 2
    assert multiplicative_order(F.zeta, 10) == 4
    assert multiplicative_order(F(2), 10) is None
    assert multiplicative_order(F(2)) is None  # |2^k| != 1 for every k


def test_canonical_form_is_unique():
    F = CyclotomicField(8)
    # z^4 == -1, entered two different ways
    assert F.element([0, 0, 0, 0, 1]) == F(-1)
    assert F.element([1, 0, 0, 0, 1]) == F.zero


def test_parse_and_str_round_trip():
    F = CyclotomicField(8)
    for text in ["2", "-3/4", "z", "1 + z", "1/2 - 3*z^2", "z^3 - z"]:
        a = F.parse(text)
        assert F.parse(str(a)) == a


def test_parse_rejects_garbage():
    F = CyclotomicField(4)
    with pytest.raises(ValueError):
        F.parse("2**z")
    with pytest.raises(ValueError):
        CyclotomicField(1).parse("z")


def test_rational_times_zeta_decomposition():
    F = CyclotomicField(8)
    a = F(Fraction(3, 2)) * F.zeta_power(5)
    r, k = as_rational_times_zeta(a)
    assert F(r) * F.zeta_power(k) == a
    assert as_rational_times_zeta(F.one + F.zeta) is None


def test_sqrt_of_two_in_q_zeta8():
    F = CyclotomicField(8)
    s = sqrt(F(2))
    assert s is not None and s * s == F(2)
    assert sqrt(F(Fraction(1, 8))) ** 2 == F(Fraction(1, 8))
    assert sqrt(F(-4)) ** 2 == F(-4)  # i lives in Q(zeta_8)


def test_sqrt_absent_from_small_field():
    assert sqrt(CyclotomicField(4)(2)) is None
    assert sqrt(CyclotomicField(1)(-1)) is None


def test_nth_root():
    F = CyclotomicField(8)
    assert nth_root(F(16), 4) ** 4 == F(16)
    assert nth_root(F.zeta_power(3), 3) ** 3 == F.zeta_power(3)
    assert nth_root(F(2), 3) is None  # cube root of 2 is not abelian
