import itertools
import warnings

import pytest
from sympy import Poly, Rational

from neronpy.errors import InputValidationError, ParseError
from neronpy.exact import x
from neronpy.numtheory import (
    FqPolynomial,
    char_poly_int,
    factor_integer,
    ideal_deg,
    ideal_norm,
    int_poly,
    int_poly_derivative,
    int_poly_eval,
    is_irreducible,
    is_probable_prime,
    kronecker,
    monic_irreducibles,
    monic_prime,
    parse_fq_polynomial,
)


def F(q, *coeffs):
    return FqPolynomial(q, coeffs)


def test_coefficients_are_normalized():
    assert F(5, 7, 5, 0).coeffs == (2,)
    assert F(3, 0, 0).is_zero
    assert F(3, 0, 0).degree == -1


def test_arithmetic_over_f2():
    T = FqPolynomial.T(2)
    one = F(2, 1)
    assert (T + one) * (T + one) == F(2, 1, 0, 1)
    assert (T * T + T).gcd(T) == T
    assert divmod(T * T * T, T + one) == (F(2, 1, 1, 1), one)
    assert str(F(2, 1, 0, 1, 0, 0, 1)) == "T^5 + T^2 + 1"


def test_arithmetic_errors():
    with pytest.raises(ZeroDivisionError):
        divmod(F(3, 1, 1), F(3))
    with pytest.raises(InputValidationError):
        F(2, 1) + F(3, 1)
    with pytest.raises(InputValidationError):
        F(4, 1)


def test_irreducibility_examples():
    assert is_irreducible(F(2, 1, 0, 1, 0, 0, 1))
    assert not is_irreducible(F(2, 1, 0, 1))
    assert is_irreducible(F(5, -3, 0, 1))
    with pytest.raises(InputValidationError):
        is_irreducible(F(5, 1, 2))
    with pytest.raises(InputValidationError):
        is_irreducible(F(5, 1))


def _has_factor(f):
    q = f.q
    for d in range(1, f.degree // 2 + 1):
        for lower in itertools.product(range(q), repeat=d):
            g = FqPolynomial(q, tuple(lower) + (1,))
            if (f % g).is_zero:
                return True
    return False


@pytest.mark.parametrize("q,max_degree", [(2, 7), (3, 4), (5, 3)])
def test_irreducibility_against_trial_division(q, max_degree):
    for degree in range(1, max_degree + 1):
        for lower in itertools.product(range(q), repeat=degree):
            f = FqPolynomial(q, tuple(lower) + (1,))
            assert is_irreducible(f) == (not _has_factor(f)), str(f)


def test_monic_irreducible_counts():
    assert [len(list(monic_irreducibles(2, d))) for d in range(1, 6)] == [2, 1, 2, 3, 6]
    assert len(list(monic_irreducibles(3, 2))) == 3


def test_norm_and_degree():
    assert ideal_norm(FqPolynomial.T(2)) == 2
    assert ideal_deg(FqPolynomial.T(2)) == 1
    assert ideal_norm(F(2, 1, 0, 1, 0, 0, 1)) == 32
    assert ideal_norm(F(5, -3, 0, 1)) == 25
    with pytest.raises(InputValidationError):
        ideal_norm(F(5))


def test_monic_prime_warns_and_normalizes():
    with pytest.warns(UserWarning):
        assert monic_prime(F(3, 1, 2)) == F(3, 2, 1)


def test_parse_both_syntaxes():
    assert parse_fq_polynomial("[1,0,1,0,0,1]", 2) == parse_fq_polynomial("T^5+T^2+1", 2)
    assert parse_fq_polynomial("T**2 - 3", 5) == F(5, 2, 0, 1)
    assert parse_fq_polynomial("[7, 5]", 5) == F(5, 2)
    assert parse_fq_polynomial("T", 3) == FqPolynomial.T(3)


@pytest.mark.parametrize("text", ["T^", "[1, 2", "[a, b]", "T/2", "x + 1"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_fq_polynomial(text, 5)


def test_kronecker_values():
    assert kronecker(-4, 13) == 1
    assert kronecker(-3, 11) == -1
    assert kronecker(-4, 2) == 0
    assert kronecker(-3, 2) == -1
    assert kronecker(2, 7) == 1
    assert kronecker(-3, 5) == -1


def test_kronecker_is_multiplicative():
    for n in range(1, 40):
        for a in range(-12, 13):
            for b in range(-12, 13):
                assert kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n)
    for a in range(-12, 13):
        for m in range(1, 25):
            for n in range(1, 25):
                assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


def test_kronecker_against_squares():
    for p in (3, 5, 7, 11, 13, 17, 19, 23):
        squares = {(r * r) % p for r in range(1, p)}
        for a in range(1, p):
            assert kronecker(a, p) == (1 if a in squares else -1)


def test_integer_polynomials():
    octic = int_poly([4, -4, -44, 16, 38, -8, -11, 1, 1])
    assert int_poly_eval(octic, -3) == 565
    assert int_poly_eval(octic, 3) == 1891
    linear = Poly(x - 7, x)
    assert all(int_poly_eval(int_poly_derivative(linear), v) == 1 for v in (-5, 0, 9))


def test_char_poly_int():
    assert char_poly_int([[1, 0], [0, 1]]) == int_poly([1, -2, 1])
    assert char_poly_int([[0, 1], [1, 0]]) == int_poly([-1, 0, 1])
    P = char_poly_int([[1, 2], [3, 0]])
    assert P == int_poly([-6, -1, 1])
    assert int_poly_eval(P, 3) == 0
    with pytest.raises(InputValidationError):
        char_poly_int([[1, 2]])


def test_factor_integer():
    assert str(factor_integer(1895575)) == "5^2·11·61·113"
    assert str(factor_integer(36)) == "2^2·3^2"
    assert str(factor_integer(20801)) == "11·31·61"
    assert str(factor_integer(-12)) == "-2^2·3"
    assert str(factor_integer(1)) == "1"
    with pytest.raises(InputValidationError):
        factor_integer(0)


def test_factor_integer_beyond_trial_division():
    n = 1000003 * 1000033
    result = factor_integer(n)
    assert result.value == n
    assert result.is_complete
    assert all(is_probable_prime(p) for p, _ in result.factors)


def test_wide_cores_are_left_unfactored():
    n = 1000003 * 1000033
    result = factor_integer(n, max_core_bits=10)
    assert not result.is_complete
    assert result.value == n
    assert str(result) == "C40"


def test_rational_polynomial_values_are_not_truncated():
    P = Poly((x - 3) * (x - Rational(59, 2)), x)
    with pytest.raises(InputValidationError):
        int_poly_eval(P.diff(x), 3)


def test_kronecker_emits_no_warnings():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert kronecker(-3, 11) == -1
        assert kronecker(-4, 13) == 1


def _monic(q, degree):
    return [FqPolynomial(q, tuple(lower) + (1,)) for lower in itertools.product(range(q), repeat=degree)]


@pytest.mark.slow
@pytest.mark.parametrize("q,max_degree", [(2, 16), (3, 10), (5, 6), (7, 5)])
def test_irreducibility_against_products(q, max_degree):
    by_degree = {d: _monic(q, d) for d in range(1, max_degree)}
    for degree in range(1, max_degree + 1):
        reducible = {
            f * g
            for a in range(1, degree // 2 + 1)
            for f in by_degree[a]
            for g in by_degree[degree - a]
        }
        for f in _monic(q, degree):
            assert is_irreducible(f) == (f not in reducible), str(f)
