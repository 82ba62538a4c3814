# graphs.py

import logging
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx
from networkx.algorithms.isomorphism import (
    categorical_multiedge_match,
    categorical_node_match,
)

from .errors import GraphValidationError, ValidationReport, Violation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Dart:
    """
    One orientation of a geometric edge.

    The terminus is not stored: it is the origin of the inverse dart, so
    t(inverse(e)) = o(e) holds by construction. A dart that is its own
    inverse is a folded loop.

    Attributes
    ----------
    id : int
        Dense 0-based index of the dart in its graph.
    origin : int
        Vertex the dart leaves from.
    inverse : int
        Id of the reversed dart; may equal ``id``.
    weight : int
        Positive weight, equal to the weight of the inverse.
    """

    id: int
    origin: int
    inverse: int
    weight: int

    @property
    def is_folded(self):
        return self.inverse == self.id


@dataclass(frozen=True)
class WeightedGraph:
    """
    A finite graph with an edge involution and positive integer weights.

    Vertices are the integers ``0 .. len(vertex_weights) - 1``. The graph is
    an immutable value; constructing one never validates it, call
    :func:`validate` for that.

    Attributes
    ----------
    vertex_weights : tuple of int
        w(v) for every vertex.
    darts : tuple of Dart
        Darts indexed by their id.
    vertex_labels, dart_labels : tuple of str, optional
        Labels used when the graph was read from, or is written to, a file.
    """

    vertex_weights: tuple
    darts: tuple
    vertex_labels: tuple = None
    dart_labels: tuple = None

    @classmethod
    def build(cls, vertex_weights, edges=(), folded=()):
        """
        Build a graph from geometric edges.

        Parameters
        ----------
        vertex_weights : sequence of int
            One weight per vertex.
        edges : sequence of (u, v, w)
            Each entry adds the dart pair u -> v (even id) and v -> u (odd id)
            of weight w. ``u == v`` gives an ordinary loop.
        folded : sequence of (v, w)
            Each entry adds a single self-inverse dart at v.
        """
        darts = []
        for u, v, w in edges:
            e = len(darts)
            darts.append(Dart(e, int(u), e + 1, int(w)))
            darts.append(Dart(e + 1, int(v), e, int(w)))
        for v, w in folded:
            e = len(darts)
            darts.append(Dart(e, int(v), e, int(w)))
        return cls(tuple(int(w) for w in vertex_weights), tuple(darts))

    @property
    def num_vertices(self):
        return len(self.vertex_weights)

    @property
    def num_darts(self):
        return len(self.darts)

    @property
    def vertices(self):
        return tuple(enumerate(self.vertex_weights))

    def origin(self, e):
        return self.darts[e].origin

    def inverse(self, e):
        return self.darts[e].inverse

    def terminus(self, e):
        return self.darts[self.darts[e].inverse].origin

    def weight(self, e):
        return self.darts[e].weight

    def vertex_label(self, v):
        if self.vertex_labels is None:
            return f"v{v}"
        return self.vertex_labels[v]

    def dart_label(self, e):
        if self.dart_labels is None:
            return f"e{e}"
        return self.dart_labels[e]

    def edge_classes(self):
        """Representative of every geometric edge: the smaller id of each pair."""
        return [d.id for d in self.darts if d.id <= d.inverse]


@dataclass(frozen=True)
class Involution:
    """
    An automorphism of order at most 2 of a weighted graph.

    Attributes
    ----------
    vertex_map : tuple of int
        Image of every vertex.
    dart_map : tuple of int
        Image of every dart.
    """

    vertex_map: tuple
    dart_map: tuple


def validate(g):
    """
    Check every structural requirement of a weighted graph.

    Parameters
    ----------
    g : WeightedGraph

    Returns
    -------
    ValidationReport
        Empty if and only if ``g`` is well-formed. Never raises.
    """
    found = []
    n = g.num_vertices
    m = g.num_darts
    for v, w in enumerate(g.vertex_weights):
        if w < 1:
            found.append(Violation("weight positivity", f"vertex {v} has weight {w}"))
    for position, d in enumerate(g.darts):
        if d.id != position:
            found.append(Violation("dart index", f"dart at position {position} has id {d.id}"))
        if not 0 <= d.origin < n:
            found.append(Violation("vertex reference", f"dart {position} leaves unknown vertex {d.origin}"))
        if d.weight < 1:
            found.append(Violation("weight positivity", f"dart {position} has weight {d.weight}"))
        if not 0 <= d.inverse < m:
            found.append(Violation("involution", f"dart {position} has unknown inverse {d.inverse}"))
            continue
        partner = g.darts[d.inverse]
        if partner.inverse != position:
            found.append(
                Violation("involution", f"inverse of inverse of dart {position} is {partner.inverse}")
            )
        elif partner.weight != d.weight and position < d.inverse:
            found.append(
                Violation(
                    "weight symmetry",
                    f"darts {position} and {d.inverse} have weights {d.weight} and {partner.weight}",
                )
            )
    if g.vertex_labels is not None and len(g.vertex_labels) != n:
        found.append(Violation("labels", "vertex label count differs from vertex count"))
    if g.dart_labels is not None and len(g.dart_labels) != m:
        found.append(Violation("labels", "dart label count differs from dart count"))
    return ValidationReport(tuple(found))


def require_well_formed(g):
    validate(g).raise_for_errors(GraphValidationError)
    return g


def check_involution(g, tau):
    """
    Check that ``tau`` is an involution of the weighted graph ``g``.

    It must be a permutation of order at most 2 on vertices and darts that
    commutes with origin and inverse and preserves both weight functions.

    Returns
    -------
    ValidationReport
    """
    found = []
    n, m = g.num_vertices, g.num_darts
    vmap, dmap = tuple(tau.vertex_map), tuple(tau.dart_map)
    if sorted(vmap) != list(range(n)):
        found.append(Violation("permutation", "vertex map is not a permutation of the vertices"))
    if sorted(dmap) != list(range(m)):
        found.append(Violation("permutation", "dart map is not a permutation of the darts"))
    if found:
        return ValidationReport(tuple(found))
    for v in range(n):
        if vmap[vmap[v]] != v:
            found.append(Violation("order", f"vertex {v} is not mapped back by the square"))
        if g.vertex_weights[vmap[v]] != g.vertex_weights[v]:
            found.append(Violation("weight", f"vertex {v} and its image have different weights"))
    for e in range(m):
        if dmap[dmap[e]] != e:
            found.append(Violation("order", f"dart {e} is not mapped back by the square"))
        if vmap[g.origin(e)] != g.origin(dmap[e]):
            found.append(Violation("origin", f"image of dart {e} does not leave the image of its origin"))
        if dmap[g.inverse(e)] != g.inverse(dmap[e]):
            found.append(Violation("inverse", f"image of the inverse of dart {e} is not the inverse of its image"))
        if g.weight(dmap[e]) != g.weight(e):
            found.append(Violation("weight", f"dart {e} and its image have different weights"))
    return ValidationReport(tuple(found))


def star(g, v):
    """
    Darts terminating at ``v``.

    An ordinary loop at ``v`` contributes both of its darts, a folded loop
    contributes its single dart.
    """
    if not 0 <= v < g.num_vertices:
        raise GraphValidationError(f"unknown vertex {v}")
    return [e for e in range(g.num_darts) if g.terminus(e) == v]


def mass(g):
    """The mass m(G), the sum of the inverse vertex weights."""
    return sum((Fraction(1, w) for w in g.vertex_weights), Fraction(0))


def regularity(g):
    """
    Common value of sum_{t(e)=v} w(v)/w(e) over all vertices.

    Returns
    -------
    Fraction or None
        The value if it is the same at every vertex, None otherwise. Whether
        it is a positive integer is left to the caller.
    """
    if g.num_vertices == 0:
        return None
    sums = [Fraction(0)] * g.num_vertices
    for e in range(g.num_darts):
        v = g.terminus(e)
        sums[v] += Fraction(g.vertex_weights[v], g.weight(e))
    if any(s != sums[0] for s in sums):
        return None
    return sums[0]


def integral_regularity(g):
    """N if ``g`` is N-regular for a positive integer N, None otherwise."""
    value = regularity(g)
    if value is None or value.denominator != 1 or value < 1:
        return None
    return value.numerator


def to_networkx(g):
    """
    The underlying weighted multigraph, one edge per dart pair.

    Edges are keyed by the smaller dart id of the pair and carry ``weight``
    and ``folded`` attributes; nodes carry ``weight``.
    """
    G = nx.MultiGraph()
    for v, w in enumerate(g.vertex_weights):
        G.add_node(v, weight=w)
    for e in g.edge_classes():
        d = g.darts[e]
        G.add_edge(d.origin, g.terminus(e), key=e, weight=d.weight, folded=d.is_folded)
    return G


def is_connected(g):
    if g.num_vertices == 0:
        return False
    return nx.is_connected(to_networkx(g))


def require_connected(g):
    require_well_formed(g)
    if not is_connected(g):
        raise GraphValidationError("graph is empty or disconnected")
    return g


def bipartition(g):
    """
    The 2-colouring (O, I) of a connected graph, O containing vertex 0.

    Returns
    -------
    tuple of frozenset or None
        None when the graph is not bipartite; any loop, ordinary or folded,
        rules bipartiteness out.

    Raises
    ------
    GraphValidationError
        If ``g`` is disconnected.
    """
    require_connected(g)
    if any(g.origin(e) == g.terminus(e) for e in range(g.num_darts)):
        return None
    try:
        colour = nx.bipartite.color(to_networkx(g))
    except nx.NetworkXError:
        return None
    outer = frozenset(v for v, c in colour.items() if c == colour[0])
    inner = frozenset(range(g.num_vertices)) - outer
    return outer, inner


def double_cover(g):
    """
    The bipartite double cover of ``g`` and its sheet-swap involution.

    Vertex (v, s) gets id ``v + s*n`` and dart (e, s) gets id ``e + s*m``.
    Dart (e, s) leaves (o(e), s) and its inverse is (inverse(e), 1 - s), so
    it ends at (t(e), 1 - s). A folded loop unfolds into a genuine pair whose
    two darts are swapped by the involution.

    Returns
    -------
    (WeightedGraph, Involution)
    """
    require_well_formed(g)
    n, m = g.num_vertices, g.num_darts
    darts = []
    for s in (0, 1):
        for d in g.darts:
            darts.append(Dart(d.id + s * m, d.origin + s * n, d.inverse + (1 - s) * m, d.weight))
    vertex_labels = tuple(f"{g.vertex_label(v)}.{s}" for s in (0, 1) for v in range(n))
    dart_labels = tuple(f"{g.dart_label(e)}.{s}" for s in (0, 1) for e in range(m))
    cover = WeightedGraph(g.vertex_weights * 2, tuple(darts), vertex_labels, dart_labels)
    tau = Involution(
        tuple((v + n) % (2 * n) for v in range(2 * n)) if n else (),
        tuple((e + m) % (2 * m) for e in range(2 * m)) if m else (),
    )
    logger.debug("double cover: %d vertices, %d darts", cover.num_vertices, cover.num_darts)
    return cover, tau


def quotient_by_involution(g, tau):
    """
    The quotient graph g / <tau>.

    Each orbit is represented by its smallest member and the image ids
    follow the order of the representatives. Image weights are the original
    weights times the stabilizer order (1 or 2). When tau(e) is the inverse
    of e the image dart is self-inverse.

    Raises
    ------
    GraphValidationError
        If ``tau`` is not an involution of ``g``.
    """
    require_well_formed(g)
    check_involution(g, tau).raise_for_errors(GraphValidationError)
    vmap, dmap = tau.vertex_map, tau.dart_map

    vertex_reps = sorted({min(v, vmap[v]) for v in range(g.num_vertices)})
    vertex_index = {rep: i for i, rep in enumerate(vertex_reps)}
    vertex_class = [vertex_index[min(v, vmap[v])] for v in range(g.num_vertices)]
    vertex_weights = tuple(
        g.vertex_weights[rep] * (2 if vmap[rep] == rep else 1) for rep in vertex_reps
    )

    dart_reps = sorted({min(e, dmap[e]) for e in range(g.num_darts)})
    dart_index = {rep: i for i, rep in enumerate(dart_reps)}
    dart_class = [dart_index[min(e, dmap[e])] for e in range(g.num_darts)]
    darts = tuple(
        Dart(
            i,
            vertex_class[g.origin(rep)],
            dart_class[g.inverse(rep)],
            g.weight(rep) * (2 if dmap[rep] == rep else 1),
        )
        for i, rep in enumerate(dart_reps)
    )
    vertex_labels = dart_labels = None
    if g.vertex_labels is not None:
        vertex_labels = tuple(g.vertex_labels[rep] for rep in vertex_reps)
    if g.dart_labels is not None:
        dart_labels = tuple(g.dart_labels[rep] for rep in dart_reps)
    return WeightedGraph(vertex_weights, darts, vertex_labels, dart_labels)


def is_isomorphic(g, h):
    """Weighted multigraph isomorphism, folded loops told apart from ordinary ones."""
    return nx.is_isomorphic(
        to_networkx(g),
        to_networkx(h),
        node_match=categorical_node_match("weight", 1),
        edge_match=categorical_multiedge_match(["weight", "folded"], [1, False]),
    )


# Named graphs

def cycle_graph(n, edge_weights=None, vertex_weights=None):
    """The cycle C_n, edge i running from vertex i to vertex i+1 mod n."""
    edge_weights = edge_weights or [1] * n
    vertex_weights = vertex_weights or [1] * n
    return WeightedGraph.build(vertex_weights, [(i, (i + 1) % n, edge_weights[i]) for i in range(n)])


def path_graph(n, edge_weights=None, vertex_weights=None):
    edge_weights = edge_weights or [1] * (n - 1)
    vertex_weights = vertex_weights or [1] * n
    return WeightedGraph.build(vertex_weights, [(i, i + 1, edge_weights[i]) for i in range(n - 1)])


def banana_graph(edge_weights=(1, 1, 1), vertex_weights=(1, 1)):
    """Two vertices joined by parallel edges, all oriented from vertex 0 to vertex 1."""
    return WeightedGraph.build(vertex_weights, [(0, 1, w) for w in edge_weights])


def complete_graph(m):
    """K_m with unit weights, which is (m-1)-regular."""
    edges = [(i, j, 1) for i in range(m) for j in range(i + 1, m)]
    return WeightedGraph.build([1] * m, edges)


def folded_bouquet(k, weight=1, vertex_weight=1):
    """One vertex carrying ``k`` folded loops; k-regular when all weights are 1."""
    return WeightedGraph.build([vertex_weight], folded=[(0, weight)] * k)


def random_weighted_graph(
    rng,
    max_vertices=8,
    max_edges=16,
    max_weight=9,
    loops=True,
    folded_loops=True,
    connected=True,
):
    """
    Draw a random well-formed weighted graph.

    Parameters
    ----------
    rng : numpy.random.Generator
        Source of randomness; pass a seeded generator for reproducible runs.
    max_vertices : int
        Upper bound on the vertex count (at least one vertex is drawn).
    max_edges : int
        Upper bound on the number of edge classes, loops included.
    max_weight : int
        Weights are drawn uniformly from 1 .. max_weight.
    loops, folded_loops : bool
        Whether ordinary loops and folded loops may appear.
    connected : bool
        If True a random spanning tree is laid down first.

    Returns
    -------
    WeightedGraph
    """
    n = int(rng.integers(1, max_vertices + 1))
    vertex_weights = [int(w) for w in rng.integers(1, max_weight + 1, size=n)]
    edges, folded = [], []
    if connected:
        for v in range(1, n):
            edges.append((int(rng.integers(0, v)), v, int(rng.integers(1, max_weight + 1))))
    budget = max(max_edges - len(edges), 0)
    for _ in range(int(rng.integers(0, budget + 1))):
        kind = rng.random()
        w = int(rng.integers(1, max_weight + 1))
        if folded_loops and kind < 0.15:
            folded.append((int(rng.integers(0, n)), w))
            continue
        u, v = (int(a) for a in rng.integers(0, n, size=2))
        if u == v and not loops:
            continue
        edges.append((u, v, w))
    # scramble vertex ids so the spanning tree is not rooted at vertex 0
    perm = [int(p) for p in rng.permutation(n)]
    edges = [(perm[u], perm[v], w) for u, v, w in edges]
    folded = [(perm[v], w) for v, w in folded]
    weights = [0] * n
    for v in range(n):
        weights[perm[v]] = vertex_weights[v]
    return WeightedGraph.build(weights, edges, folded)


def random_regular_graph(rng, max_vertices=6):
    """
    A random N-regular graph with unit weights: a cycle with the same number
    of folded loops at every vertex.

    Every vertex of a cycle has degree 2, so adding the same number k of
    folded loops at each vertex gives a (2+k)-regular graph.
    """
    n = int(rng.integers(1, max_vertices + 1))
    k = int(rng.integers(0, 3))
    edges = [(i, (i + 1) % n, 1) for i in range(n)]
    folded = [(v, 1) for v in range(n) for _ in range(k)]
    return WeightedGraph.build([1] * n, edges, folded)

