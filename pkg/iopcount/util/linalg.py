# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Exact linear algebra over the rationals.

Matrices are handed to sympy as DomainMatrix objects over QQ and come back
as Fraction rows, so callers never see sympy types. Nothing here ever
touches a float.
"""
import math
from fractions import Fraction
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

__all__ = [
        'to_domain_matrix',
        'solve_unique',
        'rref',
        'rank',
        'null_vector',
        'integer_row',
]

def _to_qq(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)

def _to_fraction(value) -> Fraction:
    # sympy Rational (or Integer) out of DomainMatrix.to_Matrix
    return Fraction(int(value.p), int(value.q))

def to_domain_matrix(rows) -> DomainMatrix:
    """
    DomainMatrix over QQ from rows of ints, Fractions or "num/den" text
    """
    entries = [[_to_qq(value) for value in row] for row in rows]
    return DomainMatrix(entries, (len(entries), len(entries[0])), QQ)

def rref(rows):
    """
    Reduced row echelon form. Returns the nonzero rows (pivot entries
    normalized to 1) and the pivot columns.
    """
    rows = [list(row) for row in rows]
    if not rows or not rows[0]:
        return [], []
    reduced, pivots = to_domain_matrix(rows).rref()
    entries = reduced.to_Matrix().tolist()
    return ([[_to_fraction(value) for value in row] for row in entries[:len(pivots)]],
            list(pivots))

def rank(rows) -> int:
    """
    Rank of a rational matrix
    """
    return len(rref(rows)[1])

def solve_unique(matrix, rhs):
    """
    Unique solution of matrix * x = rhs, or None when the system is
    singular or inconsistent
    """
    n_cols = len(matrix[0])
    augmented = [list(row) + [value] for row, value in zip(matrix, rhs)]
    reduced, pivots = rref(augmented)
    if pivots != list(range(n_cols)):
        return None
    return tuple(row[n_cols] for row in reduced)

def null_vector(rows, n_cols: int):
    """
    Spanning vector of a one-dimensional null space, or None when the null
    space has any other dimension
    """
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [col for col in range(n_cols) if col not in pivots]
    if len(free) != 1:
        return None
    free_col = free[0]
    vector = [Fraction(0)] * n_cols
    vector[free_col] = Fraction(1)
    for row, piv_c in zip(reduced, pivots):
        vector[piv_c] = -row[free_col]
    return tuple(vector)

def integer_row(values) -> tuple:
    """
    Scales a rational row by the lcm of its denominators
    """
    scale = 1
    for value in values:
        den = Fraction(value).denominator
        scale = scale * den // math.gcd(scale, den)
    return tuple(int(Fraction(value) * scale) for value in values)
