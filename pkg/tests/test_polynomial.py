"""Polynomial arithmetic: frozen example values plus seeded-random checks
against independent oracles."""

import random
from fractions import Fraction

import pytest

from flagsphere.errors import NotDivisible, NotPalindromic
from flagsphere.polynomial import ONE_PLUS_T, IntPolynomial


def poly(*coeffs):
    return IntPolynomial(coeffs)


def naive_eval(p, x):
    """Independent oracle: plain power summation, no Horner."""
    return sum(Fraction(c) * Fraction(x) ** i for i, c in enumerate(p.coeffs))


# -- construction -------------------------------------------------------------


def test_trailing_zeros_trimmed():
    assert poly(1, 2, 0, 0).coeffs == (1, 2)
    assert poly(0, 0).coeffs == ()
    assert poly().degree == -1


def test_rejects_non_integer_coefficients():
    with pytest.raises(TypeError):
        IntPolynomial([1.5])


# -- add ----------------------------------------------------------------------


def test_add_examples():
    assert poly(1, 2) + poly(0, 0, 3) == poly(1, 2, 3)
    p = poly(4, -1, 7)
    assert p + poly() == p
    assert poly(1, 1) + poly(-1, -1) == poly()


# -- mul ----------------------------------------------------------------------


def test_mul_examples():
    assert poly(1, 1) * poly(1, 1) == poly(1, 2, 1)
    # hand convolution: equals the icosahedron h-polynomial
    assert poly(1, 1) * poly(1, 8, 1) == poly(1, 9, 9, 1)
    assert poly(3, 5) * poly() == poly()


def test_mul_commutes_seeded():
    rng = random.Random(271828)
    for _ in range(200):
        p = poly(*[rng.randint(-9, 9) for _ in range(rng.randint(0, 6))])
        q = poly(*[rng.randint(-9, 9) for _ in range(rng.randint(0, 6))])
        assert p * q == q * p


# -- derivative ---------------------------------------------------------------


def test_derivative_examples():
    # icosahedron f-polynomial, differentiated termwise
    assert poly(1, 12, 30, 20).derivative() == poly(12, 60, 60)
    assert poly(7).derivative() == poly()
    assert poly(0, 0, 1).derivative() == poly(0, 2)


def test_product_rule_seeded():
    rng = random.Random(314159)
    for _ in range(200):
        p = poly(*[rng.randint(-9, 9) for _ in range(rng.randint(0, 6))])
        q = poly(*[rng.randint(-9, 9) for _ in range(rng.randint(0, 6))])
        lhs = (p * q).derivative()
        rhs = p.derivative() * q + p * q.derivative()
        assert lhs == rhs


# -- evaluation ---------------------------------------------------------------


def test_eval_examples():
    # icosahedron f-polynomial vanishes at -1/2: 1 - 6 + 30/4 - 20/8 = 0
    assert poly(1, 12, 30, 20)(Fraction(-1, 2)) == 0
    # pentagon h-polynomial at -1
    assert poly(1, 3, 1)(-1) == -1
    assert poly()(Fraction(22, 7)) == 0


def test_eval_matches_naive_oracle_on_1000_seeded_pairs():
    rng = random.Random(20090512)
    for _ in range(1000):
        p = poly(*[rng.randint(-50, 50) for _ in range(rng.randint(0, 9))])
        x = Fraction(rng.randint(-40, 40), rng.randint(1, 40))
        assert p(x) == naive_eval(p, x)


# -- division by (1+t) --------------------------------------------------------


def test_divide_examples():
    assert poly(1, 9, 9, 1).divide_out_one_plus_t() == poly(1, 8, 1)
    assert poly(1, 1).divide_out_one_plus_t() == poly(1)
    with pytest.raises(NotDivisible):
        poly(1, 3, 1).divide_out_one_plus_t()  # value at -1 is -1


def test_divide_roundtrip_seeded():
    rng = random.Random(997)
    for _ in range(200):
        q = poly(*[rng.randint(-9, 9) for _ in range(rng.randint(0, 7))])
        p = ONE_PLUS_T * q
        assert p.divide_out_one_plus_t() == q
        assert ONE_PLUS_T * p.divide_out_one_plus_t() == p


# -- palindromicity -----------------------------------------------------------


def test_palindromic_examples():
    assert poly(1, 9, 9, 1).is_palindromic(3)
    assert poly(1, 3, 1).is_palindromic(2)
    assert not poly(1, 2).is_palindromic(2)


def test_palindromic_degree_bound():
    assert not poly(1, 1, 1, 1).is_palindromic(2)
    assert poly(0, 1).is_palindromic(2)  # absent coefficients read as 0


# -- gamma expansion ----------------------------------------------------------


def test_gamma_examples():
    assert poly(1, 9, 9, 1).gamma_expand(3).gammas == (1, 6)
    assert (ONE_PLUS_T ** 4).gamma_expand(4).gammas == (1, 0, 0)
    # h of the subdivided tetrahedron boundary
    assert poly(1, 11, 11, 1).gamma_expand(3).gammas == (1, 8)


def test_gamma_rejects_non_palindromic():
    with pytest.raises(NotPalindromic):
        poly(1, 2).gamma_expand(2)


def test_gamma_reconstruction_seeded():
    rng = random.Random(1729)
    for _ in range(200):
        m = rng.randint(0, 9)
        gammas = [rng.randint(-9, 9) for _ in range(m // 2 + 1)]
        source = IntPolynomial()
        for i, g in enumerate(gammas):
            source = source + (ONE_PLUS_T ** (m - 2 * i)).shift(i) * g
        assert source.is_palindromic(m)
        expanded = source.gamma_expand(m)
        assert expanded.to_polynomial(m) == source
        assert expanded.gammas[0] == source.coefficient(0)
