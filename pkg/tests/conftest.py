from fractions import Fraction
from pathlib import Path

import pytest

from borsuk.bodies import body_from_facets, body_from_vertices, vpolytope

F = Fraction


@pytest.fixture
def golden_path():
    return Path(__file__).parent / "golden"


@pytest.fixture
def square_v():
    return body_from_vertices([(1, 1), (1, -1), (-1, 1), (-1, -1)])


@pytest.fixture
def square_h():
    return body_from_facets([((1, 0), 1), ((0, 1), 1)])


@pytest.fixture
def cross_v():
    return body_from_vertices([(1, 0), (-1, 0), (0, 1), (0, -1)])


@pytest.fixture
def cross_h():
    return body_from_facets([((1, 1), 1), ((1, -1), 1)])


HEXAGON_VERTICES = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]


@pytest.fixture
def hexagon_v():
    return body_from_vertices(HEXAGON_VERTICES)


@pytest.fixture
def hexagon_h():
    return body_from_facets([((1, 0), 1), ((0, 1), 1), ((1, 1), 1)])


@pytest.fixture
def triangle():
    return vpolytope([(0, 0), (1, 0), (0, 1)])


@pytest.fixture
def unit_square_poly():
    return vpolytope([(0, 0), (1, 0), (0, 1), (1, 1)])
