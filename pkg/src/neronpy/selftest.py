# selftest.py
#
# Randomized property suites over seeded weighted graphs. The full sizes are
# what the test suite runs under the ``slow`` marker; ``REDUCED`` is what the
# command line runs by default.

import logging
from dataclasses import dataclass, field

import numpy as np

from .graphs import (
    bipartition,
    complete_graph,
    cycle_graph,
    folded_bouquet,
    random_regular_graph,
    random_weighted_graph,
)
from .homology import component_group, cycle_basis, discriminant, gram_matrix, is_positive_definite
from .spectral import (
    double_cover_charpoly_identity,
    double_cover_discriminant,
    verify_corollary,
    verify_discriminant_formula,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuiteConfig:
    """
    Sizes of the randomized suites.

    Attributes
    ----------
    seed : int
        Seed of ``numpy.random.default_rng``; the same seed gives the same graphs.
    graphs : int
        Random graphs checked against the discriminant formula.
    rerootings : int
        Random spanning tree and orientation choices per graph.
    cover_graphs : int
        Random graphs checked against the double cover identity.
    regular_graphs : int
        Random regular graphs checked against the double cover formulas.
    max_vertices, max_edges, max_weight : int
        Bounds handed to :func:`random_weighted_graph`.
    """

    seed: int = 0
    graphs: int = 1000
    rerootings: int = 20
    cover_graphs: int = 500
    regular_graphs: int = 50
    max_vertices: int = 8
    max_edges: int = 16
    max_weight: int = 9


REDUCED = SuiteConfig(graphs=60, rerootings=5, cover_graphs=30, regular_graphs=10)


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def __str__(self):
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{self.name}: {self.cases} cases {status}"


def _graphs(config, count, offset):
    rng = np.random.default_rng([config.seed, offset])
    for _ in range(count):
        yield rng, random_weighted_graph(
            rng,
            max_vertices=config.max_vertices,
            max_edges=config.max_edges,
            max_weight=config.max_weight,
        )


def discriminant_suite(config=SuiteConfig()):
    """
    The discriminant against its spectral expression, its invariance under
    re-selection of the spanning tree and orientation, and the Smith form.
    """
    result = SuiteResult("discriminant formula")
    for i, (rng, g) in enumerate(_graphs(config, config.graphs, 0)):
        result.cases += 1
        check = verify_discriminant_formula(g)
        if not check.equal:
            result.failures.append((i, "spectral", check))
            continue
        others = {discriminant(g, rng=rng) for _ in range(config.rerootings)}
        if others != {check.lhs}:
            result.failures.append((i, "rerooting", sorted(others)))
        gram = gram_matrix(g, cycle_basis(g))
        if not is_positive_definite(gram):
            result.failures.append((i, "positive definite", gram))
        if component_group(g).order != gram.determinant():
            result.failures.append((i, "smith", gram))
    logger.debug("%s", result)
    return result


def double_cover_suite(config=SuiteConfig()):
    """char of the cover's adjacency operator against (-1)^h P(x) P(-x)."""
    result = SuiteResult("double cover characteristic polynomial")
    for i, (_, g) in enumerate(_graphs(config, config.cover_graphs, 1)):
        result.cases += 1
        check = double_cover_charpoly_identity(g)
        if not check.equal:
            result.failures.append((i, check))
    logger.debug("%s", result)
    return result


def named_regular_graphs():
    """Regular, connected, non-bipartite instances with their expected products."""
    return [
        ("C_3", cycle_graph(3), 36),
        ("C_5", cycle_graph(5), None),
        ("C_7", cycle_graph(7), None),
        ("K_3", complete_graph(3), None),
        ("K_4", complete_graph(4), None),
        ("K_5", complete_graph(5), None),
        ("folded triple loop", folded_bouquet(3), 6),
    ]


def regular_suite(config=SuiteConfig()):
    """
    The corollary product and the double cover discriminant formula on
    regular graphs. Bipartite draws are skipped since their covers are
    disconnected.
    """
    result = SuiteResult("regular double covers")
    rng = np.random.default_rng([config.seed, 2])
    instances = named_regular_graphs()
    for _ in range(config.regular_graphs):
        g = random_regular_graph(rng)
        if bipartition(g) is None:
            instances.append(("random regular", g, None))
    for name, g, expected in instances:
        result.cases += 1
        corollary = verify_corollary(g)
        if not corollary.equal or (expected is not None and corollary.lhs != expected):
            result.failures.append((name, "corollary", corollary))
        cover = double_cover_discriminant(g)
        if not cover.equal:
            result.failures.append((name, "discriminant", cover))
    logger.debug("%s", result)
    return result


def run_selftest(config=REDUCED):
    """Run every suite; returns the list of :class:`SuiteResult`."""
    return [discriminant_suite(config), double_cover_suite(config), regular_suite(config)]
