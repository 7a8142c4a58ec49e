# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Shared fixtures
"""
from fractions import Fraction
import pytest
from iopcount.polytope import HPolytope, Hyperplane, InsideOutPolytope
from iopcount.util.config import BudgetConfig

def halfspace(normal, offset, name=''):
    """
    normal . x <= offset
    """
    return Hyperplane(tuple(Fraction(c) for c in normal), Fraction(offset), name)

@pytest.fixture
def unit_square():
    """
    [0, 1]^2
    """
    return HPolytope(2, (), (
        halfspace((-1, 0), 0, 'x>=0'),
        halfspace((0, -1), 0, 'y>=0'),
        halfspace((1, 0), 1, 'x<=1'),
        halfspace((0, 1), 1, 'y<=1'),
    ))

@pytest.fixture
def unit_triangle():
    """
    x, y >= 0, x + y <= 1
    """
    return HPolytope(2, (), (
        halfspace((-1, 0), 0, 'x>=0'),
        halfspace((0, -1), 0, 'y>=0'),
        halfspace((1, 1), 1, 'x+y<=1'),
    ))

@pytest.fixture
def half_interval():
    """
    [0, 1/2] on the line
    """
    return HPolytope(1, (), (halfspace((-1,), 0), halfspace((2,), 1)))

@pytest.fixture
def square_with_diagonal(unit_square):
    """
    [0, 1]^2 with x = y removed
    """
    return InsideOutPolytope(unit_square, (Hyperplane((1, -1), 0, 'x=y'),), 'square')

@pytest.fixture
def square_with_cross(unit_square):
    """
    [0, 1]^2 with both diagonals removed
    """
    return InsideOutPolytope(unit_square, (
        Hyperplane((1, -1), 0, 'x=y'),
        Hyperplane((1, 1), 1, 'x+y=1'),
    ), 'cross')

@pytest.fixture
def small_budget():
    """
    Budget that keeps brute-force tests quick
    """
    return BudgetConfig(cubic_t_max=30, affine_t_max=30, scan_t_max=10, weak_t_max=20)
