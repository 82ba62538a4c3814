# exact.py
#
# Glue between fractions.Fraction (the scalar type of the public API) and the
# sympy domains ZZ / QQ used for matrices and polynomials.

from fractions import Fraction

from sympy import Poly, Rational, Symbol
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from .errors import ArithmeticInconsistency

x = Symbol("x")


def to_fraction(value):
    """Convert an int, Fraction, sympy number or QQ/ZZ element to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(int(value.p), int(value.q))
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    return Fraction(int(value))


def _to_rational(value):
    value = to_fraction(value)
    if value.denominator == 1:
        return value.numerator
    return Rational(value.numerator, value.denominator)


def to_qq(value):
    value = to_fraction(value)
    return QQ(value.numerator, value.denominator)


def require_integer(value, what):
    """
    Return ``value`` as an int, or raise if it is not integral.

    Parameters
    ----------
    value : int or Fraction
        The exact value to gate.
    what : str
        Name used in the error message.
    """
    value = to_fraction(value)
    if value.denominator != 1:
        raise ArithmeticInconsistency(f"{what} = {value} is not an integer")
    return value.numerator


def integer_matrix(rows):
    """Build a DomainMatrix over ZZ from nested sequences of ints."""
    rows = [[ZZ(int(v)) for v in row] for row in rows]
    n = len(rows)
    m = len(rows[0]) if rows else 0
    return DomainMatrix(rows, (n, m), ZZ)


def rational_matrix(rows):
    """Build a DomainMatrix over QQ from nested sequences of rationals."""
    rows = [[to_qq(v) for v in row] for row in rows]
    n = len(rows)
    m = len(rows[0]) if rows else 0
    return DomainMatrix(rows, (n, m), QQ)


def matrix_rows(m):
    """Entries of a DomainMatrix as nested lists of Fractions."""
    return [[to_fraction(v) for v in row] for row in m.to_list()]


def determinant(m):
    """
    Exact determinant of a square DomainMatrix.

    Over ZZ sympy uses Bareiss' fraction-free elimination. The empty matrix
    has determinant 1.
    """
    n, k = m.shape
    if n != k:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return m.domain.one
    return m.det()


def charpoly(m, domain=QQ):
    """
    Characteristic polynomial det(x*I - m) as a monic sympy Poly in ``x``.

    Computed by sympy's division-free Berkowitz scheme over the matrix
    domain, so no floating point is involved.
    """
    n, k = m.shape
    if n != k:
        raise ValueError("characteristic polynomial of a non-square matrix")
    if n == 0:
        return Poly(1, x, domain=domain)
    coeffs = [m.domain.to_sympy(c) for c in m.charpoly()]
    return Poly(coeffs, x, domain=domain)


def poly_from_coeffs(coeffs, domain=ZZ):
    """Build a Poly in ``x`` from coefficients listed low degree to high."""
    coeffs = list(coeffs)
    if not coeffs:
        return Poly(0, x, domain=domain)
    if domain == ZZ:
        coeffs = [int(c) for c in coeffs]
    else:
        coeffs = [_to_rational(c) for c in coeffs]
    return Poly(list(reversed(coeffs)), x, domain=domain)


def poly_coeffs(poly):
    """Coefficients of ``poly`` low degree to high, as Fractions."""
    return [to_fraction(c) for c in reversed(poly.all_coeffs())]


def poly_eval(poly, value):
    return to_fraction(poly.eval(_to_rational(value)))


def reflect(poly):
    """Return P(-x)."""
    return poly.compose(Poly(-x, x, domain=poly.domain))
