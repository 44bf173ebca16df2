import itertools

import numpy as np
import pytest
from sympy import primerange

from src.core.field import (
    coefficient_array,
    codes_of,
    enumerate_field,
    field_build,
    field_from_order,
    frobenius,
    is_square,
    multiplication_matrix,
    parse_element,
    parse_field_spec,
    sqrt,
    square_character,
)
from src.models.exceptions import (
    BudgetExceeded,
    DivisionByZero,
    EvenCharUnsupported,
    NoIrreducibleFound,
    NonPrime,
    SpecMismatch,
)


def test_prime_field_modulus_is_x(f7):
    assert f7.modulus == (0, 1)
    assert f7.q == 7


def test_f49_modulus_is_x_squared_plus_one(f49):
    assert f49.modulus == (1, 0, 1)
    assert f49.describe() == "GF(7^2)"


def test_non_prime_characteristic():
    with pytest.raises(NonPrime):
        field_build(4, 1)


def test_extension_degree_limits():
    with pytest.raises(BudgetExceeded):
        field_build(2, 5)
    with pytest.raises(NoIrreducibleFound):
        field_build(7, 0)
    with pytest.raises(BudgetExceeded):
        field_build(101, 3, budget=10_000)


def test_inverse_of_three_mod_seven(f7):
    assert f7.element(3).inv() == f7.element(5)
    assert f7.element(3) ** -1 == f7.element(5)


def test_inverse_of_zero(f7):
    with pytest.raises(DivisionByZero):
        f7.zero().inv()
    with pytest.raises(ZeroDivisionError):
        f7.one() / 0


def test_field_axioms_exhaustive_in_f9(f9):
    elements = enumerate_field(f9)
    one, zero = f9.one(), f9.zero()
    for a in elements:
        assert a * one == a
        assert a + zero == a
        assert a + (-a) == zero
        if a:
            assert a * a.inv() == one
    for a, b, c in itertools.product(elements, repeat=3):
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)


def test_mixed_fields_rejected(f5, f7):
    with pytest.raises(SpecMismatch):
        f5.one() + f7.one()


def test_enumeration_order():
    f2 = field_build(2)
    assert [a.coeffs for a in enumerate_field(f2)] == [(0,), (1,)]


def test_f9_index_three_is_x(f9):
    assert enumerate_field(f9)[3].coeffs == (0, 1)


def test_f49_enumeration_is_complete(f49):
    elements = enumerate_field(f49)
    assert len(elements) == 49
    assert len(set(elements)) == 49
    assert [a.to_int() for a in elements] == list(range(49))
    assert all(f49.from_int(a.to_int()) == a for a in elements)


def test_enumeration_budget(f49):
    with pytest.raises(BudgetExceeded):
        enumerate_field(f49, budget=48)


def test_squares_mod_seven(f7):
    assert is_square(f7.zero())
    assert sqrt(f7.zero()) == f7.zero()
    assert is_square(f7.element(2))
    assert sqrt(f7.element(2)) in {f7.element(3), f7.element(4)}
    assert not is_square(f7.element(3))
    assert sqrt(f7.element(3)) is None


def test_square_roots_beyond_table_limit():
    field = field_build(17, 3)
    for code in (5, 100, 2000, 4000, 4912):
        a = field.from_int(code)
        assert sqrt(a * a) * sqrt(a * a) == a * a
    for code in range(1, 40):
        a = field.from_int(code)
        assert (sqrt(a) is None) == (not is_square(a))


def test_even_characteristic_square_roots():
    with pytest.raises(EvenCharUnsupported):
        is_square(field_build(2).one())


def test_field_spec_round_trip(f49):
    assert parse_field_spec(f49.serialize()) == f49
    assert parse_field_spec("49") == f49
    assert field_from_order(49) == f49


def test_field_spec_errors():
    with pytest.raises(SpecMismatch):
        parse_field_spec("q=abc")
    with pytest.raises(NoIrreducibleFound):
        parse_field_spec("q=7^2;mod=0,0,1")
    with pytest.raises(NonPrime):
        field_from_order(12)


def test_parse_element(f49):
    a = parse_element(f49, "3,5")
    assert a.coeffs == (3, 5)
    assert str(a) == "3,5"
    with pytest.raises(SpecMismatch):
        parse_element(f49, "1,2,3")


def test_frobenius_is_an_involution_on_f49(f49):
    for a in enumerate_field(f49):
        assert frobenius(frobenius(a)) == a
        assert (frobenius(a) == a) == a.is_prime_subfield()


def test_multiplication_matrix_matches_product(f49):
    xs = coefficient_array(f49)
    for a in enumerate_field(f49):
        products = codes_of(f49, xs @ multiplication_matrix(a).T)
        expected = [(a * x).to_int() for x in enumerate_field(f49)]
        assert products.tolist() == expected


def test_quadratic_character_is_balanced(f49):
    chi = square_character(f49)
    assert int(chi.sum()) == 0
    assert int(np.count_nonzero(chi == 1)) == 24


def test_fermat_and_additive_frobenius(f9):
    elements = enumerate_field(f9)
    for a in elements:
        if a:
            assert a ** (f9.q - 1) == f9.one()
        for b in elements:
            assert frobenius(a + b) == frobenius(a) + frobenius(b)


SMALL_ORDERS = sorted(p ** m for p in primerange(2, 82) for m in range(1, 5) if p ** m <= 81)


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_field_axioms_for_small_orders(q):
    field = field_from_order(q)
    elements = enumerate_field(field)
    one, zero = field.one(), field.zero()
    for a, b in itertools.product(elements, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
    for a in elements:
        assert a + (-a) == zero
        if a:
            assert a * a.inv() == one
    sample = elements[:: max(1, q // 9)]
    for a, b, c in itertools.product(sample, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("q", [q for q in SMALL_ORDERS if q % 2])
def test_half_of_the_units_are_squares(q):
    field = field_from_order(q)
    units = enumerate_field(field)[1:]
    squares = {a * a for a in units}
    assert len(squares) == (q - 1) // 2
    assert {a for a in units if is_square(a)} == squares
