# homology.py

import logging
from collections import deque
from dataclasses import dataclass
from math import prod

import numpy as np
from sympy.polys.matrices.normalforms import invariant_factors

from .errors import InputValidationError
from .exact import determinant, integer_matrix
from .graphs import require_connected, require_well_formed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycleBasis:
    """
    A Z-basis of H_1(G, Z).

    Attributes
    ----------
    section : tuple of int
        The chosen orientation section E(G)*: one dart of every pair that is
        not a folded loop.
    cycles : tuple of tuple of int
        Coefficient vectors indexed like ``section``; the inverse of a section
        dart counts as -1 times that dart.
    """

    section: tuple
    cycles: tuple

    @property
    def rank(self):
        return len(self.cycles)


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric integer matrix of the cycle pairing on a cycle basis."""

    entries: tuple

    @property
    def size(self):
        return len(self.entries)

    def to_domain_matrix(self):
        return integer_matrix(self.entries)

    def determinant(self):
        return int(determinant(self.to_domain_matrix()))

    def is_symmetric(self):
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.size)
            for j in range(i)
        )


@dataclass(frozen=True)
class ComponentGroup:
    """
    A finite abelian group Z/d_1 x ... x Z/d_r with d_1 | d_2 | ... | d_r.

    Attributes
    ----------
    invariant_factors : tuple of int
        All r factors, the trivial ones equal to 1 included.
    order : int
        The product of the factors.
    """

    invariant_factors: tuple
    order: int

    @property
    def rank(self):
        return len(self.invariant_factors)

    @property
    def nontrivial_factors(self):
        return tuple(d for d in self.invariant_factors if d != 1)

    def __str__(self):
        factors = self.nontrivial_factors
        if not factors:
            return "trivial"
        return " x ".join(f"Z/{d}" for d in factors)


def estar(g, rng=None):
    """
    The orientation section E(G)*.

    Folded loops are left out; of every other pair the dart with the smaller
    id is kept, or a random one of the two when ``rng`` is given.
    """
    require_well_formed(g)
    section = []
    for e in g.edge_classes():
        inv = g.inverse(e)
        if inv == e:
            continue
        if rng is not None and rng.random() < 0.5:
            section.append(inv)
        else:
            section.append(e)
    return section


def _spanning_tree(g, root, rng):
    outgoing = [[] for _ in range(g.num_vertices)]
    for d in g.darts:
        if not d.is_folded:
            outgoing[d.origin].append(d.id)
    if rng is not None:
        for darts in outgoing:
            rng.shuffle(darts)
    parent = {root: None}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for e in outgoing[u]:
            t = g.terminus(e)
            if t not in parent:
                parent[t] = e
                queue.append(t)
    return parent


def cycle_basis(g, section=None, root=0, rng=None):
    """
    Fundamental cycles of a BFS spanning tree.

    Parameters
    ----------
    g : WeightedGraph
        A connected graph.
    section : sequence of int, optional
        Orientation section to express the cycles in; defaults to
        ``estar(g, rng)``.
    root : int
        Root of the spanning tree. Ignored when ``rng`` is given.
    rng : numpy.random.Generator, optional
        Randomizes the root, the neighbour order of the search and the
        orientation section.

    Returns
    -------
    CycleBasis
        One cycle per section dart outside the tree, in section order.
        Ordinary loops give cycles of length one; folded loops never appear.
    """
    require_connected(g)
    if rng is not None:
        root = int(rng.integers(0, g.num_vertices))
    if section is None:
        section = estar(g, rng)
    section = tuple(section)
    position = {e: i for i, e in enumerate(section)}

    def signed(e):
        if e in position:
            return position[e], 1
        return position[g.inverse(e)], -1

    parent = _spanning_tree(g, root, rng)
    tree_pairs = {min(e, g.inverse(e)) for e in parent.values() if e is not None}

    def path_from_root(v, vec, sign):
        while parent[v] is not None:
            i, s = signed(parent[v])
            vec[i] += sign * s
            v = g.origin(parent[v])

    cycles = []
    for e in section:
        if min(e, g.inverse(e)) in tree_pairs:
            continue
        vec = [0] * len(section)
        i, s = signed(e)
        vec[i] += s
        path_from_root(g.terminus(e), vec, -1)
        path_from_root(g.origin(e), vec, 1)
        cycles.append(tuple(vec))
    logger.debug("cycle basis of rank %d over %d section darts", len(cycles), len(section))
    return CycleBasis(section, tuple(cycles))


def boundary(g, basis, cycle):
    """Signed incidence sums of a chain, one entry per vertex."""
    out = [0] * g.num_vertices
    for e, c in zip(basis.section, cycle):
        out[g.terminus(e)] += c
        out[g.origin(e)] -= c
    return out


def gram_matrix(g, basis):
    """
    Gram matrix of the cycle pairing (e, e) = w(e), (e, inverse(e)) = -w(e).

    On a section the pairing is diagonal with entries w(e), so the Gram
    matrix is C W C^T for the coefficient matrix C.

    Raises
    ------
    InputValidationError
        If the basis does not fit the graph.
    """
    k = len(basis.section)
    for e in basis.section:
        if not 0 <= e < g.num_darts or g.inverse(e) == e:
            raise InputValidationError(f"dart {e} cannot be part of an orientation section")
    if any(len(c) != k for c in basis.cycles):
        raise InputValidationError("cycle length does not match the orientation section")
    weights = np.array([g.weight(e) for e in basis.section], dtype=object)
    C = np.array([list(c) for c in basis.cycles], dtype=object).reshape(len(basis.cycles), k)
    gram = (C * weights) @ C.T
    return GramMatrix(tuple(tuple(int(v) for v in row) for row in gram))


def leading_minors(gram):
    """Determinants of the leading principal submatrices, sizes 1 .. n."""
    entries = gram.entries
    return [
        int(determinant(integer_matrix([row[:k] for row in entries[:k]])))
        for k in range(1, len(entries) + 1)
    ]


def is_positive_definite(gram):
    return gram.is_symmetric() and all(m > 0 for m in leading_minors(gram))


def discriminant(g, rng=None):
    """
    D(G), the order of the cokernel of H_1 -> Hom(H_1, Z).

    Since the pairing is positive definite this is the determinant of the
    Gram matrix of any cycle basis; a tree gives the empty product 1.
    """
    basis = cycle_basis(g, rng=rng)
    return gram_matrix(g, basis).determinant()


def component_group(g):
    """
    The cokernel of H_1 -> Hom(H_1, Z) as an abelian group.

    Invariant factors come from the Smith normal form of the Gram matrix;
    it has full rank, so every diagonal entry is positive.
    """
    gram = gram_matrix(g, cycle_basis(g))
    if gram.size == 0:
        return ComponentGroup((), 1)
    factors = tuple(sorted(abs(int(d)) for d in invariant_factors(gram.to_domain_matrix())))
    return ComponentGroup(factors, prod(factors))
