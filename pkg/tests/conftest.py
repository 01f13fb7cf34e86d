import pytest

from mapoly.catalog import simplex_entry
from mapoly.polytope import Polytope

HEXAGON_ROWS = [(-1, 0), (0, -1), (1, -1), (-1, 1), (1, 0), (0, 1)]


@pytest.fixture
def hexagon():
    return Polytope.from_halfspaces(HEXAGON_ROWS)


@pytest.fixture
def square():
    return Polytope.from_vertices([(-1, -1), (1, -1), (-1, 1), (1, 1)])


@pytest.fixture
def triangle():
    return Polytope.from_vertices([(-1, -1), (2, -1), (-1, 2)])


@pytest.fixture
def simplex():
    """ Factory for the reflexive simplex of a given dimension. """
    return lambda n: simplex_entry(n).polytope

