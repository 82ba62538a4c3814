# quaternion.py
#
# Orders of component groups of Jacobians of quaternionic modular curves,
# from the characteristic polynomial P of a Brandt matrix and the arithmetic
# of the definite algebra (mass, class number, vertex and edge weight counts).

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

import numpy as np
from sympy import Poly, isprime

from .errors import (
    ArithmeticInconsistency,
    InputValidationError,
    ValidationReport,
    Violation,
)
from .exact import require_integer, x
from .numtheory import (
    FqPolynomial,
    char_poly_int,
    factor_integer,
    ideal_deg,
    ideal_norm,
    int_poly_derivative,
    int_poly_eval,
    is_irreducible,
    kronecker,
    monic_prime,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FFInput:
    """
    Data for the curve attached to the discriminant p * dprime over F_q(T).

    Attributes
    ----------
    q : int
        Prime size of the constant field.
    p : FqPolynomial
        The prime of reduction.
    dprime : tuple of FqPolynomial
        An odd number of distinct primes, all different from ``p``.
    charpoly : sympy.Poly, optional
        Characteristic polynomial of the Brandt matrix at ``p``.
    brandt : tuple of tuple of int, optional
        The Brandt matrix itself; P is derived from it.
    weights : tuple of int, optional
        Unit-group orders w_i, used for the symmetry check of ``brandt``.
    """

    q: int
    p: FqPolynomial
    dprime: tuple
    charpoly: Poly = None
    brandt: tuple = None
    weights: tuple = None


@dataclass(frozen=True)
class QInput:
    """
    Data for the Shimura curve of discriminant p * dprime over Q.

    ``charpoly`` (or ``brandt``) is required unless dprime is 2 or 3.
    """

    p: int
    dprime: tuple
    charpoly: Poly = None
    brandt: tuple = None
    weights: tuple = None


@dataclass(frozen=True)
class GPlusProfile:
    """
    Weight counts of the bipartite dual graph of the reduction.

    Attributes
    ----------
    vertices : int
        Number of vertices, twice the class number.
    vertex_weights : dict
        Weight -> number of vertices of that weight.
    mass : Fraction
        Sum of the inverse vertex weights.
    edge_weights : dict
        Weight -> number of geometric edges of that weight, for weights > 1.
    weight_ratio : Fraction
        prod_{E*} w(e) / prod_V w(v).
    """

    vertices: int
    vertex_weights: dict
    mass: Fraction
    edge_weights: dict
    weight_ratio: Fraction


@dataclass(frozen=True)
class PhiReport:
    """
    Order of a component group with every intermediate invariant.

    Attributes
    ----------
    order : int
    factored : FactoredInteger
    intermediates : dict
        Name -> exact value, in the order they were computed.
    profile : GPlusProfile, optional
    """

    order: int
    factored: object
    intermediates: dict = field(default_factory=dict)
    profile: GPlusProfile = None


def _fraction_power(base, exponent):
    exponent = require_integer(exponent, f"exponent of {base}")
    return Fraction(base) ** exponent


# Brandt matrices

def validate_brandt(B, N, weights=None):
    """
    Sanity checks of a Brandt matrix B(p) with N = |p| + 1.

    Every row must sum to N, which makes N a root of the characteristic
    polynomial. When ``weights`` are supplied, w_j b_ij = w_i b_ji is
    checked and a failure is reported as a warning.

    Returns
    -------
    ValidationReport
        Never raises.
    """
    found = []
    rows = [list(row) for row in B]
    h = len(rows)
    if h == 0 or any(len(row) != h for row in rows):
        return ValidationReport((Violation("shape", "Brandt matrix is not square and non-empty"),))
    if N < 2:
        found.append(Violation("degree", f"N = {N} must be at least 2"))
    arr = np.array([[int(v) for v in row] for row in rows], dtype=object)
    for i, total in enumerate(arr.sum(axis=1)):
        if total != N:
            found.append(Violation("row sum", f"row {i} sums to {total}, expected {N}"))
    if not found and int_poly_eval(char_poly_int(rows), N) != 0:
        found.append(Violation("root", f"N = {N} is not a root of the characteristic polynomial"))
    if weights is not None:
        if len(weights) != h or any(int(w) < 1 for w in weights):
            found.append(Violation("weights", f"expected {h} positive weights"))
        else:
            W = np.array([int(w) for w in weights], dtype=object)
            lhs = arr * W[None, :]
            rhs = arr.T * W[:, None]
            if not (lhs == rhs).all():
                found.append(
                    Violation("weight symmetry", "w_j b_ij != w_i b_ji for some i, j", "warning")
                )
    return ValidationReport(tuple(found))


def _resolve_charpoly(charpoly, brandt, weights, N):
    """P from the supplied polynomial and/or Brandt matrix, checked against N."""
    if brandt is not None:
        report = validate_brandt(brandt, N, weights)
        report.raise_for_errors(InputValidationError)
        for warning in report.warnings:
            logger.warning("%s", warning)
        derived = char_poly_int(brandt)
        if charpoly is not None and Poly(charpoly, x) != derived:
            raise ArithmeticInconsistency(
                "the supplied characteristic polynomial is not that of the Brandt matrix"
            )
        charpoly = derived
    if charpoly is None:
        return None
    if not all(getattr(c, "is_Integer", False) for c in charpoly.all_coeffs()):
        raise InputValidationError("characteristic polynomial must have integer coefficients")
    if charpoly.LC() != 1:
        raise InputValidationError("characteristic polynomial must be monic")
    value = int_poly_eval(charpoly, N)
    if value != 0:
        raise ArithmeticInconsistency(f"P({N}) = {value}, but {N} must be a root of P")
    return charpoly


def _phi_quotient(P, N, denominator):
    P_minus = int_poly_eval(P, -N)
    P_prime = int_poly_eval(int_poly_derivative(P), N)
    order = require_integer(Fraction(abs(P_minus * P_prime)) / denominator, "order")
    if order < 1:
        raise ArithmeticInconsistency(f"order {order} is not positive")
    return order, P_minus, P_prime


# Function field side

def _ff_primes(q, dprime, p=None):
    """Monic, irreducible, distinct primes over F_q, odd in number."""
    if not isprime(q):
        raise InputValidationError(f"q = {q} is not prime")
    primes = []
    for f in dprime:
        if f.q != q:
            raise InputValidationError(f"{f} is not a polynomial over F_{q}")
        f = monic_prime(f)
        if f.degree < 1 or not is_irreducible(f):
            raise InputValidationError(f"{f} is not a prime of F_{q}[T]")
        primes.append(f)
    if len(primes) % 2 == 0:
        raise InputValidationError(
            f"dprime must have an odd number of primes, got {len(primes)}"
        )
    if len(set(primes)) != len(primes):
        raise InputValidationError("the primes of dprime must be distinct")
    if p is not None:
        if p.q != q:
            raise InputValidationError(f"{p} is not a polynomial over F_{q}")
        p = monic_prime(p)
        if p.degree < 1 or not is_irreducible(p):
            raise InputValidationError(f"{p} is not a prime of F_{q}[T]")
        if p in primes:
            raise InputValidationError(f"{p} also divides dprime")
    return p, tuple(primes)


def mass_ff(q, dprime):
    """m(d') = prod(|p_i| - 1) / (q^2 - 1)."""
    _, primes = _ff_primes(q, dprime)
    return Fraction(prod(ideal_norm(f) - 1 for f in primes), q * q - 1)


def h_weight_ff(q, dprime):
    """Number of maximal orders whose unit group modulo constants has order q + 1."""
    _, primes = _ff_primes(q, dprime)
    return require_integer(
        Fraction(prod(1 - (-1) ** ideal_deg(f) for f in primes), 2), "h_(q+1)"
    )


def class_number_ff(q, dprime):
    """h(d') = m(d') + h_(q+1) * q / (q + 1)."""
    value = mass_ff(q, dprime) + h_weight_ff(q, dprime) * Fraction(q, q + 1)
    return require_integer(value, "class number")


def n_d(q, p, dprime):
    """
    The exponent of q + 1 in the denominator of the order formula.

    Computed both as (1 - (-1)^deg p) h_(q+1) and as half the product of
    1 - (-1)^deg over every prime of the discriminant; the two must agree.
    """
    p, primes = _ff_primes(q, dprime, p)
    first = (1 - (-1) ** ideal_deg(p)) * h_weight_ff(q, primes)
    second = require_integer(
        Fraction(prod(1 - (-1) ** ideal_deg(f) for f in (p,) + primes), 2), "n(d)"
    )
    if first != second:
        raise ArithmeticInconsistency(f"the two forms of n(d) disagree: {first} != {second}")
    return first


def heavy_star_count(p):
    """Darts of weight q + 1 ending at a vertex of weight q + 1: 1 + (-1)^deg p."""
    return 1 + (-1) ** ideal_deg(p)


def gplus_profile_ff(q, p, dprime):
    """
    Weight counts of the bipartite double cover over the prime ``p``.

    The ratio of edge to vertex weights obtained from the counts is checked
    against (q + 1)^(-n(d)).
    """
    p, primes = _ff_primes(q, dprime, p)
    h = class_number_ff(q, primes)
    heavy = h_weight_ff(q, primes)
    heavy_edges = heavy * heavy_star_count(p)
    ratio = Fraction(q + 1) ** heavy_edges / Fraction(q + 1) ** (2 * heavy)
    expected = Fraction(1, (q + 1) ** n_d(q, p, primes))
    if ratio != expected:
        raise ArithmeticInconsistency(f"weight ratio {ratio} differs from {expected}")
    vertex_weights = {1: 2 * (h - heavy)}
    if heavy:
        vertex_weights[q + 1] = 2 * heavy
    return GPlusProfile(
        vertices=2 * h,
        vertex_weights=vertex_weights,
        mass=2 * mass_ff(q, primes),
        edge_weights={q + 1: heavy_edges} if heavy_edges else {},
        weight_ratio=ratio,
    )


def phi_ff(inp):
    """
    Order of the component group at p of the Jacobian over F_q(T).

    |P(-N) P'(N)| / (2 m(d') (q + 1)^n(d)) with N = |p| + 1.

    Raises
    ------
    InputValidationError
        Malformed primes, Brandt matrix or missing polynomial.
    ArithmeticInconsistency
        P(N) != 0, deg P != h(d'), or a non-integral order.
    """
    q = inp.q
    p, primes = _ff_primes(q, inp.dprime, inp.p)
    N = ideal_norm(p) + 1
    P = _resolve_charpoly(inp.charpoly, inp.brandt, inp.weights, N)
    if P is None:
        raise InputValidationError("either charpoly or brandt must be given")
    h = class_number_ff(q, primes)
    if P.degree() != h:
        raise ArithmeticInconsistency(f"deg P = {P.degree()} but the class number is {h}")
    m = mass_ff(q, primes)
    heavy = h_weight_ff(q, primes)
    n = n_d(q, p, primes)
    order, P_minus, P_prime = _phi_quotient(P, N, 2 * m * (q + 1) ** n)
    logger.debug("phi_ff over F_%d at %s: order %d", q, p, order)
    intermediates = {
        "N": N,
        "mass": m,
        "class number": h,
        "h_(q+1)": heavy,
        "n(d)": n,
        "P(-N)": P_minus,
        "P'(N)": P_prime,
    }
    return PhiReport(order, factor_integer(order), intermediates, gplus_profile_ff(q, p, primes))


def closed_form_h1(q, p, qprime):
    """
    Order for dprime a single prime of degree at most 2 (class number one).

    (|p|+1)/(q+1) or (|p|+1)(q+1) for deg q' = 1 as deg p is odd or even,
    and |p|+1 for deg q' = 2. The value is checked against :func:`phi_ff`
    with P = x - (|p| + 1).
    """
    p, (qprime,) = _ff_primes(q, (qprime,), p)
    if qprime.degree > 2:
        raise InputValidationError(f"{qprime} has degree {qprime.degree} > 2")
    N = ideal_norm(p) + 1
    if qprime.degree == 2:
        value = N
    elif ideal_deg(p) % 2 == 1:
        value = require_integer(Fraction(N, q + 1), "closed form")
    else:
        value = N * (q + 1)
    general = phi_ff(FFInput(q, p, (qprime,), charpoly=Poly(x - N, x))).order
    if general != value:
        raise ArithmeticInconsistency(f"closed form {value} differs from the general formula {general}")
    return value


# Rational side

def _q_primes(p, dprime):
    dprime = tuple(sorted(int(l) for l in dprime))
    for l in dprime + ((int(p),) if p is not None else ()):
        if not isprime(l):
            raise InputValidationError(f"{l} is not prime")
    if len(dprime) % 2 == 0:
        raise InputValidationError(f"dprime must have an odd number of primes, got {len(dprime)}")
    if len(set(dprime)) != len(dprime):
        raise InputValidationError("the primes of dprime must be distinct")
    if p is not None and int(p) in dprime:
        raise InputValidationError(f"{p} also divides dprime")
    return (int(p) if p is not None else None), dprime


def mass_q(dprime):
    """Eichler's mass m(d') = prod(l - 1) / 12."""
    _, primes = _q_primes(None, dprime)
    return Fraction(prod(l - 1 for l in primes), 12)


def h2_h3(dprime):
    """
    Halved products of 1 - (-4/l) and 1 - (-3/l) over the primes of d'.

    Twice these count the vertices of weight 2 and 3 when d' >= 5; for
    d' = 2 and 3 the vertex weights are 12 and 6 and the counts do not apply.
    """
    _, primes = _q_primes(None, dprime)
    if primes in ((2,), (3,)):
        raise InputValidationError(f"d' = {primes[0]} has no weight 2 / weight 3 vertex counts")
    h2 = require_integer(Fraction(prod(1 - kronecker(-4, l) for l in primes), 2), "h_2")
    h3 = require_integer(Fraction(prod(1 - kronecker(-3, l) for l in primes), 2), "h_3")
    return h2, h3


def n2_n3(p, dprime):
    """The same halved products taken over every prime of d = p * d'."""
    p, primes = _q_primes(p, dprime)
    d = (p,) + primes
    n2 = require_integer(Fraction(prod(1 - kronecker(-4, l) for l in d), 2), "n_2")
    n3 = require_integer(Fraction(prod(1 - kronecker(-3, l) for l in d), 2), "n_3")
    return n2, n3


def class_number_q(dprime):
    """
    Eichler's class number of a maximal order in the definite algebra.

    h(d') = m(d') + prod(1 - (-4/l)) / 4 + prod(1 - (-3/l)) / 3.
    """
    _, primes = _q_primes(None, dprime)
    value = (
        mass_q(primes)
        + Fraction(prod(1 - kronecker(-4, l) for l in primes), 4)
        + Fraction(prod(1 - kronecker(-3, l) for l in primes), 3)
    )
    return require_integer(value, "class number")


def gplus_profile_q(p, dprime):
    """
    Weight counts of the dual graph over p.

    For d' = 2 (resp. 3) the graph has two vertices of weight 12 (resp. 6),
    with (1 + (-4/p))/2 (resp. 1 + (-4/p)) edges of weight 2 and
    1 + (-3/p) (resp. (1 + (-3/p))/2) edges of weight 3. For d' >= 5 the
    vertices of weight 2 and 3 number 2 h_2 and 2 h_3, and the weight ratio
    is checked against 1 / (2^n_2 3^n_3).
    """
    p, primes = _q_primes(p, dprime)
    h = class_number_q(primes)
    k4, k3 = kronecker(-4, p), kronecker(-3, p)
    if primes == (2,):
        vertex_weights = {12: 2}
        edges2 = require_integer(Fraction(1 + k4, 2), "edges of weight 2")
        edges3 = 1 + k3
    elif primes == (3,):
        vertex_weights = {6: 2}
        edges2 = 1 + k4
        edges3 = require_integer(Fraction(1 + k3, 2), "edges of weight 3")
    else:
        h2, h3 = h2_h3(primes)
        vertex_weights = {w: c for w, c in ((1, 2 * (h - h2 - h3)), (2, 2 * h2), (3, 2 * h3)) if c}
        edges2 = h2 * (1 + k4)
        edges3 = h3 * (1 + k3)
    ratio = Fraction(2) ** edges2 * Fraction(3) ** edges3 / prod(
        Fraction(w) ** c for w, c in vertex_weights.items()
    )
    if primes not in ((2,), (3,)):
        n2, n3 = n2_n3(p, primes)
        expected = Fraction(1, 2 ** n2 * 3 ** n3)
        if ratio != expected:
            raise ArithmeticInconsistency(f"weight ratio {ratio} differs from {expected}")
    mass = sum(Fraction(c, w) for w, c in vertex_weights.items())
    if mass != 2 * mass_q(primes):
        raise ArithmeticInconsistency(f"vertex weights give mass {mass}, expected {2 * mass_q(primes)}")
    edge_weights = {w: c for w, c in ((2, edges2), (3, edges3)) if c}
    return GPlusProfile(2 * h, vertex_weights, mass, edge_weights, ratio)


def phi_q(inp):
    """
    Order of the component group at p of the Jacobian of a Shimura curve.

    d' = 2:  (p+1) 2^((-3 + (-4/p))/2) 3^((-3/p))
    d' = 3:  (p+1) 2^((-4/p)) 3^((-1 + (-3/p))/2)
    d' >= 5: |P(-p-1) P'(p+1)| / (2 m(d') 2^n_2 3^n_3)

    Kronecker symbols stand in for Legendre symbols so that p = 2 and
    2 | d' are legal. Exponents are exact and integrality is the last gate.
    For d' = 2 and 3 the closed forms are cross-checked against the general
    |P(-N) P'(N)| / (2 m(d')) times the weight ratio with P = x - N.
    """
    p, primes = _q_primes(inp.p, inp.dprime)
    N = p + 1
    P = _resolve_charpoly(inp.charpoly, inp.brandt, inp.weights, N)
    h = class_number_q(primes)
    if P is not None and P.degree() != h:
        raise ArithmeticInconsistency(f"deg P = {P.degree()} but the class number is {h}")
    k4, k3 = kronecker(-4, p), kronecker(-3, p)
    m = mass_q(primes)
    intermediates = {"N": N, "mass": m, "class number": h, "(-4/p)": k4, "(-3/p)": k3}
    profile = gplus_profile_q(p, primes)
    if primes in ((2,), (3,)):
        if primes == (2,):
            value = N * _fraction_power(2, Fraction(-3 + k4, 2)) * _fraction_power(3, k3)
        else:
            value = N * _fraction_power(2, k4) * _fraction_power(3, Fraction(-1 + k3, 2))
        order = require_integer(value, "order")
        general, P_minus, P_prime = _phi_quotient(
            P if P is not None else Poly(x - N, x), N, 2 * m / profile.weight_ratio
        )
        if general != order:
            raise ArithmeticInconsistency(f"closed form {order} differs from the general formula {general}")
        intermediates.update({"case": f"d' = {primes[0]}", "P(-N)": P_minus, "P'(N)": P_prime})
    else:
        if P is None:
            raise InputValidationError("d' >= 5 needs charpoly or brandt")
        h2, h3 = h2_h3(primes)
        n2, n3 = n2_n3(p, primes)
        order, P_minus, P_prime = _phi_quotient(P, N, 2 * m * 2 ** n2 * 3 ** n3)
        intermediates.update(
            {"case": "d' >= 5", "h_2": h2, "h_3": h3, "n_2": n2, "n_3": n3, "P(-N)": P_minus, "P'(N)": P_prime}
        )
    if order < 1:
        raise ArithmeticInconsistency(f"order {order} is not positive")
    logger.debug("phi_q at %d with d' = %s: order %d", p, primes, order)
    return PhiReport(order, factor_integer(order), intermediates, profile)
