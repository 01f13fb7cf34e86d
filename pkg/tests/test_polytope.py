from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from mapoly import linalg
from mapoly.errors import UnboundedSystem, EmptyOrLowerDimensional, DegenerateInput, NotReflexive
from mapoly.polytope import (Polytope, HalfspaceSystem, vertices_of, facets_of, lattice_points,
                             lattice_points_oracle, interior_lattice_points, is_reflexive, is_delzant,
                             triangulate, barycenter, decompose, block_factor, product_polytope)


def test_hexagon_from_halfspaces(hexagon):
    assert hexagon.dim == 2
    assert hexagon.vertices == ((-1, -1), (-1, 0), (0, -1), (0, 1), (1, 0), (1, 1))
    assert len(hexagon.facets) == 6
    assert hexagon.facets.irredundant
    assert all(b == 1 for b in hexagon.facets.b)
    assert len(hexagon.lattice_points) == 7
    assert hexagon.degree_bound == 4


def test_vertices_are_fractions(hexagon):
    assert all(isinstance(x, Fraction) for v in hexagon.vertices for x in v)


def test_redundant_rows_dropped():
    rows = [(-1, 0), (0, -1), (1, -1), (-1, 1), (1, 0), (0, 1)]
    polytope = Polytope.from_halfspaces(rows + [(1, 1)], [1] * 6 + [5])
    assert len(polytope.facets) == 6


def test_halfspace_system_dedupes_and_normalizes():
    assert len(HalfspaceSystem([(1, 0), (1, 0), (0, 1)])) == 2
    system = HalfspaceSystem([(2, 0)], [2]).normalized()
    assert system.A == ((1, 0),)
    assert system.b == (1,)
    with pytest.raises(ValueError):
        HalfspaceSystem([(1, 0)], [1, 2])


def test_contains_and_tight(hexagon):
    assert hexagon.facets.contains((0, 0), strict=True)
    assert hexagon.facets.contains((1, 1))
    assert not hexagon.facets.contains((1, 1), strict=True)
    assert len(hexagon.facets.tight((1, 1))) == 2


def test_unbounded_system():
    with pytest.raises(UnboundedSystem):
        Polytope.from_halfspaces([(1, 0), (0, 1)])


def test_empty_system():
    with pytest.raises(EmptyOrLowerDimensional):
        vertices_of(HalfspaceSystem([(1,), (-1,)], [-1, -1]))


def test_zero_rows(triangle):
    rows = [(-1, 0), (0, -1), (1, 1), (0, 0)]
    assert vertices_of(HalfspaceSystem(rows, [1, 1, 1, 1])) == triangle
    assert len(HalfspaceSystem(rows).normalized()) == 3
    with pytest.raises(EmptyOrLowerDimensional):
        vertices_of(HalfspaceSystem(rows, [1, 1, 1, -1]))
    with pytest.raises(UnboundedSystem):
        HalfspaceSystem([(0, 0)]).normalized()


def test_lower_dimensional_system():
    with pytest.raises(EmptyOrLowerDimensional):
        Polytope.from_halfspaces([(1, 0), (-1, 0), (0, 1), (0, -1)], [0, 0, 1, 1])


def test_degenerate_point_sets():
    with pytest.raises(DegenerateInput):
        facets_of([])
    with pytest.raises(DegenerateInput):
        facets_of([(0, 0), (1, 1), (2, 2)])


def test_from_vertices_drops_interior_points():
    square = Polytope.from_vertices([(-1, -1), (1, -1), (-1, 1), (1, 1), (0, 0), (1, 0)])
    assert len(square.vertices) == 4
    assert len(square.facets) == 4


def test_segment_and_cube():
    segment = facets_of([(-1,), (1,), (0,)])
    assert segment.vertices == ((-1,), (1,))
    cube = Polytope.from_vertices([(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)])
    assert len(cube.facets) == 6
    assert is_reflexive(cube)
    assert is_delzant(cube)


def test_both_descriptions_agree(hexagon):
    again = Polytope.from_vertices(hexagon.vertices)
    assert again == hexagon
    assert again.facets == hexagon.facets


def test_edges(square, hexagon):
    assert all(len(neighbours) == 2 for neighbours in square.edges.values())
    assert hexagon.edge_direction(0, 1) == ((0, 1), 1)
    assert hexagon.edge_direction(1, 3) == ((1, 1), 1)


def test_lattice_points_match_oracle(hexagon, triangle):
    for polytope in (hexagon, triangle):
        assert list(lattice_points(polytope)) == lattice_points_oracle(polytope)
    assert len(triangle.lattice_points) == 10


@pytest.mark.slow
@settings(max_examples=1000, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=3, max_size=7))
def test_random_polygons(points):
    assume(linalg.affine_rank(list(set(points))) == 2)
    polygon = facets_of(points)
    assert all(polygon.facets.contains(p) for p in points)
    assert set(polygon.vertices) <= set(points)
    assert list(polygon.lattice_points) == lattice_points_oracle(polygon)


def test_interior_lattice_points(hexagon):
    assert interior_lattice_points(hexagon) == [(0, 0)]


def test_reflexive_and_delzant(hexagon, square, triangle):
    for polytope in (hexagon, square, triangle):
        assert is_reflexive(polytope)
        assert is_delzant(polytope)


def test_not_reflexive():
    half = Polytope.from_vertices([(-1, -1), (1, -1), (-1, 1)])
    assert not is_reflexive(half)
    with pytest.raises(NotReflexive):
        decompose(half)
    rational = Polytope.from_vertices([(0, 0), (Fraction(1, 2), 0), (0, 1)])
    assert not is_reflexive(rational)


def test_not_delzant():
    # the reflexive triangle with a lattice length 4 edge is singular
    singular = Polytope.from_vertices([(-1, -1), (3, -1), (-1, 1)])
    assert is_reflexive(singular)
    assert not is_delzant(singular)


def test_triangulation_and_barycenter(hexagon, triangle):
    assert len(triangulate(hexagon)) == 4
    assert all(len(s) == 3 for s in triangulate(hexagon))
    assert barycenter(hexagon) == (0, 0)
    assert barycenter(triangle) == (0, 0)
    pentagon = Polytope.from_halfspaces([(-1, 0), (0, -1), (1, 0), (0, 1), (-1, 1)])
    assert barycenter(pentagon) != (0, 0)


def test_barycenter_of_segment(simplex):
    assert barycenter(simplex(1)) == (0,)
    assert barycenter(facets_of([(0,), (3,)])) == (Fraction(3, 2),)


def test_decompose(hexagon, square, simplex):
    assert decompose(hexagon) == ((0, 1),)
    assert decompose(square) == ((0,), (1,))
    assert decompose(simplex(3)) == ((0, 1, 2),)


def test_block_factor(square):
    assert block_factor(square, (0,)).vertices == ((-1,), (1,))


def test_product_polytope(simplex, hexagon, square):
    assert product_polytope(simplex(1), simplex(1)) == square
    prism = product_polytope(hexagon, simplex(1))
    assert len(prism.vertices) == 12
    assert len(prism.facets) == 8
    assert is_reflexive(prism)
    assert is_delzant(prism)
    assert decompose(prism) == ((0, 1), (2,))
