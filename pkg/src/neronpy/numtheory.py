# numtheory.py

import itertools
import logging
import warnings
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from tokenize import TokenError

from sympy import Poly, SympifyError, Symbol, isprime, primerange
from sympy.functions.combinatorial.numbers import jacobi_symbol
from sympy.ntheory import perfect_power, pollard_rho
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_div,
    gf_gcd,
    gf_irred_p_rabin,
    gf_monic,
    gf_mul,
    gf_neg,
    gf_sub,
)
from sympy.polys.polyerrors import PolynomialError

from .errors import InputValidationError, ParseError
from .exact import charpoly, integer_matrix, poly_from_coeffs, to_fraction, x

logger = logging.getLogger(__name__)

T = Symbol("T")


@dataclass(frozen=True)
class FqPolynomial:
    """
    A polynomial over the prime field F_q.

    Parameters
    ----------
    q : int
        The characteristic; must be prime.
    coeffs : sequence of int
        Coefficients from low degree to high. They are reduced mod q and
        trailing zeros are stripped, so equal polynomials compare equal.
    """

    q: int
    coeffs: tuple

    def __post_init__(self):
        if not isprime(self.q):
            raise InputValidationError(f"q = {self.q} is not prime")
        coeffs = [int(c) % self.q for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def T(cls, q):
        return cls(q, (0, 1))

    @classmethod
    def _from_gf(cls, q, f):
        return cls(q, tuple(int(c) for c in reversed(f)))

    def _gf(self):
        return [ZZ(c) for c in reversed(self.coeffs)]

    def _check(self, other):
        if not isinstance(other, FqPolynomial):
            raise TypeError(f"cannot combine FqPolynomial with {type(other).__name__}")
        if other.q != self.q:
            raise InputValidationError(f"polynomials over F_{self.q} and F_{other.q} do not mix")
        return other

    @property
    def degree(self):
        """Degree in T; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self):
        return self.leading_coefficient == 1

    def monic(self):
        if self.is_zero:
            raise ZeroDivisionError("the zero polynomial has no monic associate")
        _, f = gf_monic(self._gf(), self.q, ZZ)
        return FqPolynomial._from_gf(self.q, f)

    def __add__(self, other):
        other = self._check(other)
        return FqPolynomial._from_gf(self.q, gf_add(self._gf(), other._gf(), self.q, ZZ))

    def __sub__(self, other):
        other = self._check(other)
        return FqPolynomial._from_gf(self.q, gf_sub(self._gf(), other._gf(), self.q, ZZ))

    def __neg__(self):
        return FqPolynomial._from_gf(self.q, gf_neg(self._gf(), self.q, ZZ))

    def __mul__(self, other):
        other = self._check(other)
        return FqPolynomial._from_gf(self.q, gf_mul(self._gf(), other._gf(), self.q, ZZ))

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        quo, rem = gf_div(self._gf(), other._gf(), self.q, ZZ)
        return FqPolynomial._from_gf(self.q, quo), FqPolynomial._from_gf(self.q, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def gcd(self, other):
        """Monic greatest common divisor."""
        other = self._check(other)
        return FqPolynomial._from_gf(self.q, gf_gcd(self._gf(), other._gf(), self.q, ZZ))

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            monomial = "T" if k == 1 else f"T^{k}"
            terms.append(monomial if c == 1 else f"{c}*{monomial}")
        return " + ".join(terms)


@lru_cache(maxsize=4096)
def is_irreducible(f):
    """
    Rabin's irreducibility test over F_q.

    Raises
    ------
    InputValidationError
        If ``f`` is constant or not monic.
    """
    if f.degree < 1:
        raise InputValidationError(f"{f} is constant")
    if not f.is_monic:
        raise InputValidationError(f"{f} is not monic")
    return bool(gf_irred_p_rabin(f._gf(), f.q, ZZ))


def monic_irreducibles(q, degree):
    """All monic irreducible polynomials of the given degree over F_q."""
    for lower in itertools.product(range(q), repeat=degree):
        f = FqPolynomial(q, tuple(reversed(lower)) + (1,))
        if is_irreducible(f):
            yield f


def monic_prime(f):
    """
    The monic generator of the ideal (f).

    Ideals ignore units, so a non-monic input is normalized with a warning.
    """
    if f.is_zero:
        raise InputValidationError("the zero polynomial does not generate a prime ideal")
    if not f.is_monic:
        warnings.warn(f"normalizing non-monic {f} over F_{f.q} to its monic associate")
        return f.monic()
    return f


def ideal_norm(f):
    """|A/(f)| = q^deg f."""
    if f.is_zero:
        raise InputValidationError("the zero ideal has no norm")
    return f.q ** f.degree


def ideal_deg(f):
    if f.is_zero:
        raise InputValidationError("the zero ideal has no degree")
    return f.degree


_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def parse_fq_polynomial(text, q):
    """
    Read a polynomial over F_q.

    Accepts a coefficient list ``[c0, c1, ..., ck]`` (low to high) or a
    symbolic expression in T with integer coefficients such as ``T^5+T^2+1``.

    Raises
    ------
    ParseError
    """
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ParseError(f"unterminated coefficient list {text!r}")
        body = text[1:-1].strip()
        try:
            coeffs = [int(c) for c in body.split(",")] if body else []
        except ValueError:
            raise ParseError(f"bad coefficient list {text!r}") from None
        return FqPolynomial(q, coeffs)
    try:
        expr = parse_expr(text, local_dict={"T": T}, transformations=_TRANSFORMATIONS)
        poly = Poly(expr, T)
    except (SympifyError, SyntaxError, TokenError, TypeError, PolynomialError) as exc:
        raise ParseError(f"cannot read polynomial {text!r}: {exc}") from None
    if not (poly.domain.is_ZZ or poly.domain.is_QQ):
        raise ParseError(f"{text!r} is not a polynomial in T with integer coefficients")
    coeffs = []
    for c in reversed(poly.all_coeffs()):
        c = to_fraction(c)
        if c.denominator != 1:
            raise ParseError(f"coefficient {c} of {text!r} is not an integer")
        coeffs.append(c.numerator)
    return FqPolynomial(q, coeffs)


def kronecker(a, n):
    """
    The Kronecker symbol (a/n).

    Odd positive n go through sympy's Jacobi symbol; the factor 2 and the
    sign of n are handled here.
    """
    a, n = int(a), int(n)
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 == 1 and a % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * int(jacobi_symbol(a % n, n))


def int_poly(coeffs):
    """IntPolynomial from coefficients listed low degree to high."""
    return poly_from_coeffs(coeffs, ZZ)


def int_poly_eval(P, value):
    """
    Exact value of P at an integer.

    Raises
    ------
    InputValidationError
        If the value is not an integer, i.e. P has non-integral coefficients.
    """
    result = to_fraction(P.eval(int(value)))
    if result.denominator != 1:
        raise InputValidationError(f"P({value}) = {result}: P must have integer coefficients")
    return result.numerator


def int_poly_derivative(P):
    return P.diff(x)


def char_poly_int(B):
    """
    Characteristic polynomial of a square integer matrix, over ZZ.

    Raises
    ------
    InputValidationError
        If ``B`` is not square.
    """
    rows = [[int(v) for v in row] for row in B]
    if any(len(row) != len(rows) for row in rows):
        raise InputValidationError("matrix is not square")
    return charpoly(integer_matrix(rows), domain=ZZ)


@dataclass(frozen=True)
class FactoredInteger:
    """
    A signed integer as a product of certified primes and a leftover.

    Attributes
    ----------
    sign : int
        1 or -1.
    factors : tuple of (int, int)
        Distinct primes in ascending order with their exponents.
    cofactor : int
        1 when the factorization is complete, otherwise the product of the
        parts that were not split.
    """

    sign: int
    factors: tuple
    cofactor: int = 1

    @property
    def value(self):
        result = self.sign * self.cofactor
        for p, e in self.factors:
            result *= p ** e
        return result

    @property
    def is_complete(self):
        return self.cofactor == 1

    def __str__(self):
        parts = [str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors]
        if self.cofactor != 1:
            parts.append(f"C{self.cofactor.bit_length()}")
        text = "·".join(parts) or "1"
        return f"-{text}" if self.sign < 0 else text


def is_probable_prime(n):
    """sympy's BPSW test: deterministic below 2^64, no known failure above."""
    return isprime(n)


def factor_integer(n, trial_bound=10000, max_core_bits=120, rho_retries=5):
    """
    Factor ``n`` as far as desk-scale methods go.

    Trial division by the primes below ``trial_bound`` comes first, then
    Pollard rho on what is left. Every reported prime passes
    :func:`is_probable_prime`. A composite remainder that rho cannot split,
    or one wider than ``max_core_bits``, is kept as the cofactor.

    Raises
    ------
    InputValidationError
        If ``n`` is zero.
    """
    n = int(n)
    if n == 0:
        raise InputValidationError("cannot factor zero")
    m = abs(n)
    found = Counter()
    for p in primerange(2, trial_bound):
        if p * p > m:
            break
        while m % p == 0:
            m //= p
            found[p] += 1
    cofactor = 1
    pending = [m] if m > 1 else []
    while pending:
        c = pending.pop()
        if c == 1:
            continue
        if is_probable_prime(c):
            found[c] += 1
            continue
        power = perfect_power(c)
        if power:
            base, exp = power
            pending.extend([int(base)] * int(exp))
            continue
        if c.bit_length() > max_core_bits:
            logger.debug("leaving %d-bit composite unfactored", c.bit_length())
            cofactor *= c
            continue
        d = pollard_rho(c, retries=rho_retries)
        if d is None or d in (1, c):
            logger.debug("pollard rho failed on a %d-bit composite", c.bit_length())
            cofactor *= c
            continue
        pending.extend([int(d), c // int(d)])
    return FactoredInteger(1 if n > 0 else -1, tuple(sorted(found.items())), cofactor)
