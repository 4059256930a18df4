import pytest

from cyclopir.gf import (
    GF,
    FieldError,
    field_build,
    field_for_root_of_unity,
    minimal_polynomial,
    multiplicative_order,
    poly_divmod,
    poly_mul,
    poly_trim,
    x_pow_n_minus_1,
)


def poly_mul_mod(a, b, mod, p):
    """Schoolbook product reduced mod a monic polynomial, oracle for table arithmetic."""
    prod = poly_mul(a, b, p)
    _, rem = poly_divmod(prod, mod, p)
    return poly_trim(rem)


def test_gf2_prime_field():
    F = field_build(2, 1)
    one = F.one()
    assert (one + one).is_zero()
    assert (one * one) == one
    assert F.order == 2


def test_gf8_alpha_cubed():
    # direct reduction oracle: x * x^2 mod (x^3 + x + 1) = x + 1
    mod = [1, 1, 0, 1]
    assert poly_mul_mod([0, 1], [0, 0, 1], mod, 2) == [1, 1]
    F = field_build(2, 3)
    a = F.alpha()
    assert (a**3) == a + F.one()
    assert (a**3).as_int() == 0b011


def test_gf8_add_pow_inverse():
    F = field_build(2, 3)
    a = F.alpha()
    assert a + a**2 == a**4
    assert a * a**6 == F.one()
    assert a**7 == F.one()
    assert (a**3).inverse() * a**3 == F.one()
    assert a ** (7 + 2) == a**2  # exponent reduction mod p^s - 1
    z = F.zero()
    assert a + z == a
    assert (z**0) == F.one()
    assert (z**5).is_zero()


def test_gf128_multiplicative_order():
    F = field_build(2, 7)
    a = F.alpha()
    assert a**127 == F.one()
    # 127 is prime, so any proper divisor is 1
    assert a**1 != F.one()
    # log table hit every nonzero element exactly once
    assert sorted(F.antilog) == list(range(1, 128))
    assert all(F.log[F.antilog[i]] == i for i in range(127))
    assert all(F.antilog[F.log[x]] == x for x in range(1, 128))


def test_field_errors():
    F = field_build(2, 3)
    G = field_build(2, 4)
    with pytest.raises(FieldError):
        F.zero().inverse()
    with pytest.raises(FieldError):
        _ = F.alpha() + G.alpha()
    with pytest.raises(FieldError):
        GF(4, 2)  # characteristic not prime
    with pytest.raises(FieldError):
        GF(2, 25)  # 2^25 over the table budget
    with pytest.raises(FieldError):
        GF(2, 3, [1, 0, 0, 1])  # x^3 + 1 is not irreducible


def test_odd_characteristic_field():
    F = field_build(3, 2)
    a = F.alpha()
    assert a**8 == F.one()
    one = F.one()
    assert one + one + one == F.zero()
    assert (a + (-a)).is_zero()
    assert sorted(F.antilog) == list(range(1, 9))


def test_minimal_polynomials_n7():
    F = field_build(2, 3)
    assert minimal_polynomial({1, 2, 4}, F, 7) == [1, 1, 0, 1]
    assert minimal_polynomial({3, 6, 5}, F, 7) == [1, 0, 1, 1]
    assert minimal_polynomial({0}, F, 7) == [1, 1]


def test_minimal_polynomial_errors():
    F = field_build(2, 3)
    with pytest.raises(FieldError):
        minimal_polynomial({1, 2}, F, 7)  # not closed under doubling
    with pytest.raises(FieldError):
        minimal_polynomial({1, 2, 4}, F, 5)  # 5 does not divide 7


def test_minimal_polynomial_embedded_subgroup():
    # n = 21 sits inside GF(2^6) via beta = alpha^3
    F = field_for_root_of_unity(21, 2)
    assert F.s == 6
    p = minimal_polynomial({1, 2, 4, 8, 16, 11}, F, 21)
    assert len(p) == 7
    assert all(c in (0, 1) for c in p)


@pytest.mark.parametrize("n,q", [(7, 2), (15, 2), (21, 2), (31, 2), (63, 2), (127, 2), (255, 2), (11, 2), (8, 3), (13, 3)])
def test_coset_polynomials_factor_x_n_minus_1(n, q):
    from cyclopir.cyclic import coset_representatives, cyclotomic_coset

    F = field_for_root_of_unity(n, q)
    prod = [1]
    for r in coset_representatives(n, q):
        prod = poly_mul(prod, minimal_polynomial(cyclotomic_coset(r, n, q), F, n), q)
    assert prod == poly_trim(x_pow_n_minus_1(n, q))


def test_multiplicative_order_values():
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(2, 127) == 7
    assert multiplicative_order(2, 21) == 6
    assert multiplicative_order(3, 8) == 2


def test_field_axioms_random_sample():
    F = field_build(2, 5)
    elements = [F.from_int(x) for x in range(F.order)]
    import random

    rng = random.Random(7)
    for _ in range(200):
        a, b, c = (rng.choice(elements) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
