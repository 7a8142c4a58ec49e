# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Ehrhart series of faces and flats, reciprocity, and the two Möbius
inversion routes for inside-out polytopes.

Closed series are fitted from exact lattice counts: the denominator comes
from the vertex denominators, the numerator from the first counts, and
dim + 2 further counts must agree.
"""
import functools
import logging
from iopcount.ehrhart.poset import intersection_poset
from iopcount.polytope.lattice import count_closed
from iopcount.polytope.polytope import (Face, HPolytope, InsideOutPolytope,
                                        affine_dimension, denominator, vertices)
from iopcount.ratfunc.gf import RationalGF, add, scale
from iopcount.util import error as err

__all__ = [
        'ehrhart_series',
        'open_series',
        'open_series_via_reciprocity',
        'open_inside_out_series',
        'closed_inside_out_series',
        'moebius_route',
        'reciprocity_route',
]

logger = logging.getLogger(__name__)

def _region(shape) -> HPolytope:
    if isinstance(shape, Face):
        return shape.polytope()
    return shape

def _denominator_poly(factors) -> list:
    poly = [1]
    for exponent in factors:
        grown = poly + [0] * exponent
        for idx, value in enumerate(poly):
            grown[idx + exponent] -= value
        poly = grown
    return poly

@functools.lru_cache(maxsize=None)
def _closed_series(polytope: HPolytope) -> RationalGF:
    verts = vertices(polytope)
    if not verts:
        raise err.ProvidedValueError('empty polytope has no Ehrhart series')
    dim = affine_dimension(verts)
    if len(verts) == dim + 1:
        factors = [denominator([vert]) for vert in verts]
    else:
        factors = [denominator(verts)] * (dim + 1)
    base = _denominator_poly(factors)
    top = len(base) - 1
    size = top + dim + 2
    counts = [1] + [count_closed(polytope, t) for t in range(1, size)]

    product = [0] * size
    for i, a in enumerate(base):
        if a == 0:
            continue
        for j in range(size - i):
            product[i + j] += a * counts[j]
    if any(product[top:]):
        raise err.SeriesFitError(
                f'period/denominator hint too small: factors {factors} leave '
                f'nonzero terms {product[top:]}'
        )
    logger.debug('Fitted series of a %d-dimensional face over factors %s from %d counts',
                 dim, factors, size - 1)
    return RationalGF(tuple(product[:top]), tuple(factors))

def ehrhart_series(shape) -> RationalGF:
    """
    Closed Ehrhart series of a face or polytope, constant term 1
    """
    return _closed_series(_region(shape))

def open_series_via_reciprocity(series: RationalGF, dim: int) -> RationalGF:
    """
    (-1)^(1+dim) E(1/x), brought back to numerator over (1 - x^a) form
    """
    if series.is_zero():
        return series
    numerator = series.numerator
    factors = series.denom_factors
    lift = sum(factors) - (len(numerator) - 1)
    if lift < 0:
        raise err.SeriesFormError(
                f'numerator degree {len(numerator) - 1} exceeds denominator degree {sum(factors)}'
        )
    sign = -1 if (dim + 1 + len(factors)) % 2 else 1
    flipped = tuple(sign * value for value in reversed(numerator))
    return RationalGF((0,) * lift + flipped, factors)

def open_series(shape) -> RationalGF:
    """
    Series of the relative interior of a face or polytope
    """
    region = _region(shape)
    return open_series_via_reciprocity(_closed_series(region), affine_dimension(vertices(region)))

def moebius_route(iop: InsideOutPolytope) -> RationalGF:
    """
    sum over flats u of mu(0, u) times the open series of u
    """
    poset = intersection_poset(iop)
    total = RationalGF()
    for flat, value in zip(poset.elements, poset.moebius):
        total = add(total, scale(open_series(flat.polytope), value))
    return total

def closed_inside_out_series(iop: InsideOutPolytope) -> RationalGF:
    """
    sum over flats u of |mu(0, u)| times the closed series of u
    """
    poset = intersection_poset(iop)
    total = RationalGF()
    for flat, value in zip(poset.elements, poset.moebius):
        total = add(total, scale(ehrhart_series(flat.polytope), abs(value)))
    return total

def reciprocity_route(iop: InsideOutPolytope) -> RationalGF:
    """
    Reciprocity applied once, to the closed inside-out series
    """
    dim = affine_dimension(vertices(iop.polytope))
    return open_series_via_reciprocity(closed_inside_out_series(iop), dim)

@functools.lru_cache(maxsize=None)
def _open_inside_out(iop: InsideOutPolytope) -> RationalGF:
    first = moebius_route(iop)
    second = reciprocity_route(iop)
    if first != second:
        raise err.RouteMismatchError(
                f'inside-out routes disagree for {iop.name or "P"}: {first} != {second}'
        )
    return first

def open_inside_out_series(iop: InsideOutPolytope) -> RationalGF:
    """
    Series of the points of P° on no arrangement hyperplane. Both routes
    are computed and must agree.
    """
    return _open_inside_out(iop)
