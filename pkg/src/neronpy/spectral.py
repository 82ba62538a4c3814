# spectral.py
#
# Weighted Laplacian and adjacency operators. Matrices follow the convention
# "column v holds the image of basis vector v". With unequal weights these
# operators are not symmetric. Spectral quantities are read off exact
# characteristic polynomials, eigenvalues are never computed.

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import prod

import numpy as np
from sympy.polys.domains import QQ

from .errors import ArithmeticInconsistency, GraphValidationError
from .exact import charpoly, poly_eval, rational_matrix, reflect, to_fraction, x
from .graphs import (
    bipartition,
    double_cover,
    integral_regularity,
    mass,
    require_connected,
    require_well_formed,
)
from .homology import discriminant, estar

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    """Both sides of an exact identity and whether they agree."""

    lhs: object
    rhs: object
    equal: bool

    def __iter__(self):
        return iter((self.lhs, self.rhs, self.equal))


def _operator_matrix(g, diagonal):
    n = g.num_vertices
    entries = np.full((n, n), Fraction(0), dtype=object)
    for e in range(g.num_darts):
        v, u = g.terminus(e), g.origin(e)
        c = Fraction(g.vertex_weights[v], g.weight(e))
        if diagonal:
            entries[v, v] += c
            entries[u, v] -= c
        else:
            entries[u, v] += c
    return rational_matrix(entries.tolist())


def laplacian_matrix(g):
    """
    The weighted Laplacian, Delta(v) = sum_{t(e)=v} w(v)/w(e) (v - o(e)).

    Loops contribute nothing since v - o(e) = 0 for them.

    Returns
    -------
    sympy.polys.matrices.DomainMatrix
        Square matrix over QQ indexed by vertex ids.
    """
    require_well_formed(g)
    return _operator_matrix(g, diagonal=True)


def adjacency_matrix(g):
    """The weighted adjacency operator, delta(v) = sum_{t(e)=v} w(v)/w(e) o(e)."""
    require_well_formed(g)
    return _operator_matrix(g, diagonal=False)


def char_poly(m):
    """det(x*I - m) for a square rational DomainMatrix, monic and exact."""
    return charpoly(m.convert_to(QQ), domain=QQ)


def product_nonzero_eigenvalues(g):
    """
    Product of the non-zero eigenvalues of the Laplacian of a connected graph.

    Zero is a simple eigenvalue, so the product is (-1)^(n-1) times the
    coefficient of x in the characteristic polynomial.

    Raises
    ------
    ArithmeticInconsistency
        If the constant term is non-zero or the coefficient of x vanishes
        (zero is then a multiple eigenvalue).
    """
    require_connected(g)
    P = char_poly(laplacian_matrix(g))
    constant = to_fraction(P.coeff_monomial(1))
    linear = to_fraction(P.coeff_monomial(x))
    if constant != 0:
        raise ArithmeticInconsistency(f"Laplacian has non-zero determinant {constant}")
    if linear == 0:
        raise ArithmeticInconsistency("zero is a multiple Laplacian eigenvalue")
    n = g.num_vertices
    return (-1) ** (n - 1) * linear


def spectral_discriminant(g):
    """
    m(G)^-1 * prod_{E*} w(e) / prod_V w(v) * prod of non-zero eigenvalues.
    """
    section_weight = prod(g.weight(e) for e in estar(g))
    vertex_weight = prod(g.vertex_weights)
    return (
        Fraction(1) / mass(g)
        * Fraction(section_weight, vertex_weight)
        * product_nonzero_eigenvalues(g)
    )


def verify_discriminant_formula(g):
    """
    Compare D(G) from the cycle pairing with its spectral expression.

    Returns
    -------
    Check
        ``lhs`` is the discriminant (int), ``rhs`` the spectral value
        (Fraction), ``equal`` their exact equality.
    """
    require_connected(g)
    lhs = discriminant(g)
    rhs = spectral_discriminant(g)
    return Check(lhs, rhs, rhs == lhs)


def double_cover_charpoly_identity(g):
    """
    char(delta of the double cover) against (-1)^h P(x) P(-x).

    P is the characteristic polynomial of the adjacency operator of ``g``
    and h its vertex count. In the sheet basis the adjacency operator of the
    cover is the block matrix ((0, M), (M, 0)).
    """
    require_well_formed(g)
    cover, _ = double_cover(g)
    lhs = char_poly(adjacency_matrix(cover))
    P = char_poly(adjacency_matrix(g))
    rhs = (-1) ** g.num_vertices * P * reflect(P)
    return Check(lhs, rhs, lhs == rhs)


def corollary_product(P, N):
    """
    |P(-N) * P'(N)| for a monic P vanishing at N.

    For the adjacency polynomial of an N-regular graph whose double cover is
    connected, this is the product of the non-zero Laplacian eigenvalues of
    the cover.

    Raises
    ------
    ArithmeticInconsistency
        If P(N) != 0.
    """
    if poly_eval(P, N) != 0:
        raise ArithmeticInconsistency(f"P({N}) = {poly_eval(P, N)} is not zero")
    return abs(poly_eval(P, -N) * poly_eval(P.diff(x), N))


def _regular_cover_degree(g):
    require_connected(g)
    N = integral_regularity(g)
    if N is None:
        raise GraphValidationError("graph is not N-regular for a positive integer N")
    if bipartition(g) is not None:
        raise GraphValidationError("graph is bipartite, its double cover is disconnected")
    return N


def verify_corollary(g):
    """
    corollary_product(char delta(g), N) against the double cover's Laplacian.

    Requires an N-regular, connected, non-bipartite ``g``, which makes the
    double cover connected.
    """
    N = _regular_cover_degree(g)
    lhs = corollary_product(char_poly(adjacency_matrix(g)), N)
    cover, _ = double_cover(g)
    rhs = product_nonzero_eigenvalues(cover)
    return Check(lhs, rhs, lhs == rhs)


def double_cover_discriminant(g):
    """
    D(double cover of g) against the closed form in the adjacency polynomial.

    With P the characteristic polynomial of delta(g) the closed form is
    |P(-N) P'(N)| / (2 m(g)) * prod_{E*} w(e) / prod_V w(v), the weights
    taken on the cover.
    """
    N = _regular_cover_degree(g)
    cover, _ = double_cover(g)
    lhs = discriminant(cover)
    ratio = Fraction(prod(cover.weight(e) for e in estar(cover)), prod(cover.vertex_weights))
    rhs = corollary_product(char_poly(adjacency_matrix(g)), N) / (2 * mass(g)) * ratio
    logger.debug("double cover discriminant %s against closed form %s", lhs, rhs)
    return Check(lhs, rhs, rhs == lhs)


def laplacian_sign_pattern_ok(P):
    """
    True if (-1)^(n-k) times the coefficient of x^k is non-negative for all k.

    This holds whenever every root of P is a non-negative real number.
    """
    coeffs = [to_fraction(c) for c in reversed(P.all_coeffs())]
    n = len(coeffs) - 1
    return all((-1) ** (n - k) * c >= 0 for k, c in enumerate(coeffs))
