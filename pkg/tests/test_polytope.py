# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
polytope: vertices, faces, inside-out polytopes and lattice counts
"""
from fractions import Fraction
import pytest
from iopcount.polytope import (Face, HPolytope, Hyperplane, InsideOutPolytope,
                               affine_dimension, count_closed, count_open,
                               count_open_off_arrangement, denominator, inside_out_vertices,
                               vertices)
from iopcount.polytope.lattice import dilate_count
from iopcount.polytope.polytope import centroid, meets_interior, span_relation
from iopcount.util import error as err

def test_square_vertices(unit_square):
    assert vertices(unit_square) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert unit_square.dimension() == 2
    assert not unit_square.is_simplex()
    assert centroid(vertices(unit_square)) == (Fraction(1, 2), Fraction(1, 2))

def test_triangle_is_simplex(unit_triangle):
    assert len(vertices(unit_triangle)) == 3
    assert unit_triangle.is_simplex()

def test_denominator(half_interval):
    assert vertices(half_interval) == [(Fraction(0),), (Fraction(1, 2),)]
    assert denominator(vertices(half_interval)) == 2
    with pytest.raises(err.MissingValueError, match='no vertices'):
        denominator([])

def test_unbounded():
    quadrant = HPolytope(2, (), (Hyperplane((-1, 0), 0), Hyperplane((0, -1), 0)))
    with pytest.raises(err.UnboundedPolytopeError, match='unbounded'):
        vertices(quadrant)

def test_empty_polytope():
    empty = HPolytope(1, (), (Hyperplane((-1,), -1), Hyperplane((1,), 0)))
    assert vertices(empty) == []
    assert empty.dimension() == -1

def test_affine_dimension():
    assert affine_dimension([]) == -1
    assert affine_dimension([(0, 0)]) == 0
    assert affine_dimension([(0, 0), (1, 1), (2, 2)]) == 1

def test_zero_normal_rejected():
    with pytest.raises(err.ProvidedValueError):
        Hyperplane((0, 0), 1)

def test_face_create(unit_square):
    face = Face.create(unit_square, [0], name='left')
    assert face.dimension() == 1
    assert face.vertices() == [(0, 0), (0, 1)]
    corner = Face.create(unit_square, [0, 1])
    assert corner.vertices() == [(0, 0)]
    with pytest.raises(err.ProvidedValueError):
        Face.create(unit_square, [0, 2])

def test_plane_containing_polytope_rejected():
    segment = HPolytope(2, (Hyperplane((1, -1), 0),),
                        (Hyperplane((-1, 0), 0), Hyperplane((1, 0), 1)))
    with pytest.raises(err.ProvidedValueError):
        InsideOutPolytope(segment, (Hyperplane((2, -2), 0, 'same'),))

def test_span_relation(unit_square):
    segment = unit_square.with_equalities((Hyperplane((1, -1), 0),))
    assert span_relation(segment, Hyperplane((1, -1), 0)) == 'contains'
    assert span_relation(segment, Hyperplane((1, -1), 1)) == 'disjoint'
    assert span_relation(segment, Hyperplane((1, 0), 0)) == 'transversal'

def test_cutting(unit_square):
    iop = InsideOutPolytope(unit_square, (
        Hyperplane((1, -1), 0, 'x=y'),
        Hyperplane((1, 0), 1, 'x=1'),
        Hyperplane((1, 0), 2, 'x=2'),
    ))
    assert [plane.name for plane in iop.cutting()] == ['x=y']
    assert [plane.name for plane in iop.non_cutting()] == ['x=1', 'x=2']
    assert meets_interior(unit_square, Hyperplane((1, 1), 1))

def test_restrict(square_with_cross, unit_square):
    face = Face.create(unit_square, [0], name='left')
    induced = square_with_cross.restrict(face)
    assert induced.name == 'left'
    assert len(induced.arrangement) == 2
    assert induced.cutting() == ()

def test_inside_out_vertices(square_with_cross):
    points = inside_out_vertices(square_with_cross)
    assert (Fraction(1, 2), Fraction(1, 2)) in points
    assert len(points) == 5
    assert denominator(points) == 2

def test_to_json(square_with_diagonal):
    data = square_with_diagonal.to_json()
    assert data['name'] == 'square'
    assert data['arrangement'][0]['cutting'] is True
    assert [1, 1] in data['vertices'][1]

@pytest.mark.parametrize('t', [1, 2, 3, 7])
def test_square_counts(unit_square, t):
    assert count_closed(unit_square, t) == (t + 1) ** 2
    assert count_open(unit_square, t) == (t - 1) ** 2

@pytest.mark.parametrize('t', [1, 2, 5, 6])
def test_triangle_counts(unit_triangle, t):
    assert count_closed(unit_triangle, t) == (t + 1) * (t + 2) // 2
    assert count_open(unit_triangle, t) == (t - 1) * (t - 2) // 2

@pytest.mark.parametrize('t,closed,opened', [(1, 1, 0), (2, 2, 0), (3, 2, 1), (4, 3, 1), (9, 5, 4)])
def test_rational_interval_counts(half_interval, t, closed, opened):
    assert count_closed(half_interval, t) == closed
    assert count_open(half_interval, t) == opened

@pytest.mark.parametrize('t', [2, 3, 4, 5, 8])
def test_counts_off_arrangement(square_with_diagonal, square_with_cross, t):
    assert count_open_off_arrangement(square_with_diagonal, t) == (t - 1) * (t - 2)
    expected = (t - 1) ** 2 - 2 * (t - 1) + (1 if t % 2 == 0 else 0)
    assert count_open_off_arrangement(square_with_cross, t) == expected

def test_counts_with_equality():
    # the point 1/3 on a line: only multiples of 3 reach it
    point = HPolytope(1, (Hyperplane((3,), 1),), ())
    assert [count_closed(point, t) for t in range(1, 7)] == [0, 0, 1, 0, 0, 1]

def test_dilate_count(unit_square):
    result = dilate_count(unit_square, 3)
    assert (result.closed_count, result.open_count) == (16, 4)

def test_count_rejects_bad_t(unit_square):
    with pytest.raises(err.ProvidedValueError):
        count_closed(unit_square, 0)
