from fractions import Fraction

import pytest

from neronpy.errors import GraphValidationError
from neronpy.graphs import (
    Dart,
    Involution,
    WeightedGraph,
    banana_graph,
    bipartition,
    check_involution,
    cycle_graph,
    double_cover,
    folded_bouquet,
    integral_regularity,
    is_connected,
    is_isomorphic,
    mass,
    path_graph,
    quotient_by_involution,
    random_weighted_graph,
    regularity,
    require_well_formed,
    star,
    to_networkx,
    validate,
)


def test_triangle_is_well_formed(triangle):
    report = validate(triangle)
    assert report.ok
    assert len(report) == 0


def test_weight_symmetry_is_reported():
    g = WeightedGraph((1, 1), (Dart(0, 0, 1, 2), Dart(1, 1, 0, 3)))
    assert "weight symmetry" in validate(g).kinds()
    with pytest.raises(GraphValidationError):
        require_well_formed(g)


def test_inverse_must_be_an_involution():
    g = WeightedGraph((1, 1), (Dart(0, 0, 1, 1), Dart(1, 1, 1, 1)))
    assert "involution" in validate(g).kinds()


def test_weights_must_be_positive():
    g = WeightedGraph((0,), ())
    assert validate(g).kinds() == {"weight positivity"}


def test_unknown_origin_is_reported():
    g = WeightedGraph((1,), (Dart(0, 3, 0, 1),))
    assert "vertex reference" in validate(g).kinds()


def test_terminus_is_origin_of_inverse(banana):
    for e in range(banana.num_darts):
        assert banana.terminus(e) == banana.origin(banana.inverse(e))
    assert banana.terminus(0) == 1


def test_star_sizes(banana_unit, folded_triple):
    assert len(star(banana_unit, 0)) == 3
    assert len(star(banana_unit, 1)) == 3
    assert len(star(folded_triple, 0)) == 3
    loop = WeightedGraph.build([1], [(0, 0, 1)])
    assert len(star(loop, 0)) == 2


def test_star_sizes_add_up_to_dart_count(rng):
    for _ in range(20):
        g = random_weighted_graph(rng)
        assert sum(len(star(g, v)) for v in range(g.num_vertices)) == g.num_darts


def test_regularity(banana_unit, banana):
    assert regularity(banana_unit) == 3
    assert regularity(banana) == Fraction(11, 6)
    assert regularity(path_graph(2)) == 1
    assert regularity(path_graph(3)) is None
    assert integral_regularity(banana) is None
    assert integral_regularity(banana_unit) == 3


def test_mass():
    assert mass(banana_graph()) == 2
    assert mass(banana_graph(vertex_weights=(2, 3))) == Fraction(5, 6)


def test_connectivity():
    assert is_connected(cycle_graph(4))
    assert not is_connected(WeightedGraph.build([1, 1]))
    assert not is_connected(WeightedGraph((), ()))


def test_networkx_adapter(banana):
    G = to_networkx(banana)
    assert G.number_of_nodes() == 2
    assert sorted(w for _, _, w in G.edges(data="weight")) == [1, 2, 3]


def test_bipartition():
    outer, inner = bipartition(cycle_graph(4))
    assert outer == {0, 2}
    assert inner == {1, 3}
    assert bipartition(cycle_graph(3)) is None
    assert bipartition(folded_bouquet(1)) is None
    with pytest.raises(GraphValidationError):
        bipartition(WeightedGraph.build([1, 1]))


def test_double_cover_of_triangle_is_hexagon(triangle):
    cover, _ = double_cover(triangle)
    assert is_isomorphic(cover, cycle_graph(6))


def test_double_cover_of_banana_counts(banana):
    cover, _ = double_cover(banana)
    assert cover.num_vertices == 4
    assert len(cover.edge_classes()) == 6
    assert sorted(cover.weight(e) for e in cover.edge_classes()) == [1, 1, 2, 2, 3, 3]


def test_double_cover_is_bipartite_between_sheets(rng):
    for _ in range(20):
        g = random_weighted_graph(rng, connected=False)
        cover, tau = double_cover(g)
        n = g.num_vertices
        for e in range(cover.num_darts):
            assert (cover.origin(e) < n) != (cover.terminus(e) < n)
        assert all(tau.vertex_map[v] != v for v in range(cover.num_vertices))
        assert all(tau.dart_map[e] != e for e in range(cover.num_darts))
        assert not check_involution(cover, tau)


def test_folded_loop_unfolds(folded_triple):
    cover, tau = double_cover(folded_bouquet(1))
    assert cover.num_vertices == 2
    assert not any(d.is_folded for d in cover.darts)
    assert tau.dart_map[0] == cover.inverse(0)
    cover, _ = double_cover(folded_triple)
    assert is_isomorphic(cover, banana_graph())


def test_quotient_undoes_double_cover(rng):
    for _ in range(30):
        g = random_weighted_graph(rng)
        quotient = quotient_by_involution(*double_cover(g))
        assert quotient.vertex_weights == g.vertex_weights
        assert quotient.darts == g.darts


def test_quotient_of_edge_by_flip_is_folded_loop():
    g = WeightedGraph.build([1, 1], [(0, 1, 1)])
    quotient = quotient_by_involution(g, Involution((1, 0), (1, 0)))
    assert quotient.vertex_weights == (1,)
    assert quotient.darts == (Dart(0, 0, 0, 1),)


def test_quotient_rejects_non_automorphism():
    g = WeightedGraph.build([1, 1], [(0, 1, 1)])
    tau = Involution((0, 1), (1, 0))
    assert "origin" in check_involution(g, tau).kinds()
    with pytest.raises(GraphValidationError):
        quotient_by_involution(g, tau)


def test_quotient_weights_double_on_fixed_points():
    g = folded_bouquet(1)
    quotient = quotient_by_involution(g, Involution((0,), (0,)))
    assert quotient.vertex_weights == (2,)
    assert quotient.darts[0].weight == 2


def test_random_graphs_respect_bounds(rng):
    for _ in range(50):
        g = random_weighted_graph(rng, max_vertices=8, max_edges=16, max_weight=9)
        assert validate(g).ok
        assert is_connected(g)
        assert 1 <= g.num_vertices <= 8
        assert len(g.edge_classes()) <= 16
        assert max(g.vertex_weights) <= 9


def test_quotient_of_two_parallel_edges_is_ordinary_loop():
    # tau swaps the vertices and sends e1 to the inverse of e2
    g = WeightedGraph.build([1, 1], [(0, 1, 1), (0, 1, 1)])
    tau = Involution((1, 0), (3, 2, 1, 0))
    assert check_involution(g, tau).ok
    quotient = quotient_by_involution(g, tau)
    assert quotient.vertex_weights == (1,)
    assert quotient.darts == (Dart(0, 0, 1, 1), Dart(1, 0, 0, 1))
    assert not any(d.is_folded for d in quotient.darts)
