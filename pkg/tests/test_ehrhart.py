# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
ehrhart: fitted series, reciprocity, posets and the two inversion routes
"""
from fractions import Fraction
import pytest
from iopcount.ehrhart import (closed_inside_out_series, ehrhart_series, intersection_poset,
                              open_inside_out_series, open_series, open_series_via_reciprocity)
from iopcount.ehrhart.series import moebius_route, reciprocity_route
from iopcount.polytope import Face, count_open_off_arrangement, vertices
from iopcount.ratfunc import RationalGF, coefficients
from iopcount.squares import instance

F = Fraction

def test_square_series(unit_square):
    assert ehrhart_series(unit_square) == RationalGF((1, 1), (1, 1, 1))
    assert open_series(unit_square) == RationalGF((0, 0, 1, 1), (1, 1, 1))

def test_triangle_series(unit_triangle):
    assert ehrhart_series(unit_triangle) == RationalGF((1,), (1, 1, 1))
    assert coefficients(open_series(unit_triangle), 5)[1:] == [0, 0, 1, 3, 6]

def test_rational_series(half_interval):
    series = ehrhart_series(half_interval)
    assert series == RationalGF((1,), (1, 2))
    assert coefficients(open_series(half_interval), 6)[1:] == [0, 0, 1, 1, 2, 2]

def test_face_series(unit_square):
    edge = Face.create(unit_square, [0])
    assert ehrhart_series(edge) == RationalGF((1,), (1, 1))
    assert coefficients(open_series(edge), 4)[1:] == [0, 1, 2, 3]

def test_reciprocity_sign():
    # a lattice point: E = 1/(1 - x), the open series drops t = 0 only
    point = RationalGF((1,), (1,))
    assert open_series_via_reciprocity(point, 0) == RationalGF((0, 1), (1,))
    square = RationalGF((1, 1), (1, 1, 1))
    assert open_series_via_reciprocity(square, 2) == RationalGF((0, 0, 1, 1), (1, 1, 1))
    assert open_series_via_reciprocity(RationalGF(), 3).is_zero()

def test_cross_poset(square_with_cross):
    poset = intersection_poset(square_with_cross)
    assert [flat.codim for flat in poset.elements] == [0, 1, 1, 2]
    assert list(poset.moebius) == [1, -1, -1, 1]
    assert poset.closure_isomorphic
    assert poset.bottom.label == 'cross'
    assert poset.elements[3].label == 'x=y&x+y=1'
    assert poset.leq(0, 3) and not poset.leq(3, 1)
    assert len(poset.by_codim(1)) == 2
    data = poset.to_json()
    assert data['elements'][3]['vertices'] == [[[1, 2], [1, 2]]]
    assert data['elements'][1]['moebius'] == -1

def test_concurrent_lines_poset(unit_square):
    # three lines through the centre: the point has mu = 2
    from iopcount.polytope import Hyperplane, InsideOutPolytope
    iop = InsideOutPolytope(unit_square, (
        Hyperplane((1, -1), 0, 'a'),
        Hyperplane((1, 1), 1, 'b'),
        Hyperplane((2, 0), 1, 'c'),
    ), 'star')
    poset = intersection_poset(iop)
    assert len(poset.elements) == 5
    centre = poset.elements[-1]
    assert centre.label == 'a&b&c'
    assert poset.mu(centre) == 2

@pytest.mark.parametrize('fixture', ['square_with_diagonal', 'square_with_cross'])
def test_routes_agree_with_counts(request, fixture):
    iop = request.getfixturevalue(fixture)
    first = moebius_route(iop)
    assert first == reciprocity_route(iop)
    series = open_inside_out_series(iop)
    values = coefficients(series, 9)
    for t in range(1, 10):
        assert values[t] == count_open_off_arrangement(iop, t)

def test_closed_inside_out_series(square_with_diagonal):
    closed = closed_inside_out_series(square_with_diagonal)
    # (t + 1)^2 + (t + 1)
    assert coefficients(closed, 3) == [2, 6, 12, 20]

def test_reciprocity_round_trip():
    closed = RationalGF((1, 1), (2, 2, 2, 2))
    opened = open_series_via_reciprocity(closed, 3)
    assert opened == RationalGF((0,) * 7 + (1, 1), (2, 2, 2, 2))
    assert open_series_via_reciprocity(opened, 3) == closed

def test_semimagic_flat_series():
    poset = intersection_poset(instance('semimagic-cubic').geometry)
    flats = {tuple(vertices(flat.polytope)): flat for flat in poset.elements}
    segment = flats[((0, 0, 0), (F(1, 4), F(1, 2), F(1, 4)))]
    assert ehrhart_series(segment.polytope) == RationalGF((1,), (1, 4))
    point = flats[((F(1, 5), F(2, 5), F(1, 5)),)]
    assert ehrhart_series(point.polytope) == RationalGF((1,), (5,))

@pytest.mark.parametrize('key', [
    'magic-cubic', 'magic-affine', 'semimagic-cubic', 'magilatin-cubic',
    pytest.param('semimagic-affine', marks=pytest.mark.slow),
    pytest.param('magilatin-affine', marks=pytest.mark.slow),
])
def test_plan_series_match_counts(key):
    for face in instance(key).plan:
        values = coefficients(open_inside_out_series(face.iop), 30)[1:]
        assert values == [count_open_off_arrangement(face.iop, t) for t in range(1, 31)]
