# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Intersection posets of inside-out polytopes.

A flat is P° cut by some arrangement hyperplanes. Flats are keyed by the
reduced row echelon form of their equality system, so several generating
subsets collapse into one flat. Order is reverse inclusion, which on flats
is inclusion of the sets of hyperplanes containing them.
"""
import functools
import logging
from collections import deque
from dataclasses import dataclass, field
from iopcount.polytope.polytope import (HPolytope, Hyperplane, InsideOutPolytope,
                                        affine_dimension, centroid, flat_key,
                                        span_relation, vertices)
from iopcount.util.generic import rational_pair

__all__ = [
        'Flat',
        'IntersectionPoset',
        'intersection_poset',
]

@dataclass(frozen=True)
class Flat:
    """
    One element of the intersection poset together with its closure in P
    """
    key: tuple
    polytope: HPolytope
    codim: int
    hyperplanes: frozenset
    label: str = field(default='', compare=False)

    def vertices(self) -> list:
        """
        Vertices of the closed flat
        """
        return vertices(self.polytope)

    def dimension(self) -> int:
        """
        Dimension of the closed flat
        """
        return affine_dimension(self.vertices())

@dataclass(frozen=True)
class IntersectionPoset:
    """
    Flats sorted by codimension, with mu(bottom, u) aligned by index
    """
    iop: InsideOutPolytope
    elements: tuple
    moebius: tuple
    closure_isomorphic: bool

    @property
    def bottom(self) -> Flat:
        """
        P° itself
        """
        return self.elements[0]

    def leq(self, lower: int, upper: int) -> bool:
        """
        Reverse inclusion: lower contains upper
        """
        return self.elements[lower].hyperplanes <= self.elements[upper].hyperplanes

    def by_codim(self, codim: int) -> list:
        """
        Flats of one codimension
        """
        return [flat for flat in self.elements if flat.codim == codim]

    def mu(self, flat: Flat) -> int:
        """
        Möbius value of a flat
        """
        return self.moebius[self.elements.index(flat)]

    def to_json(self) -> dict:
        """
        Elements with codimension, containing hyperplanes, Möbius value and
        closed-face vertices
        """
        names = [plane.name for plane in self.iop.arrangement]
        return {
            'name': self.iop.name,
            'closure_isomorphic': self.closure_isomorphic,
            'elements': [
                {
                    'label': flat.label,
                    'codim': flat.codim,
                    'hyperplanes': [names[idx] for idx in sorted(flat.hyperplanes)],
                    'moebius': value,
                    'vertices': [[rational_pair(c) for c in vert] for vert in flat.vertices()],
                }
                for flat, value in zip(self.elements, self.moebius)
            ],
        }

def _label(iop: InsideOutPolytope, hyperplanes) -> str:
    if not hyperplanes:
        return iop.name or 'P'
    return '&'.join(iop.arrangement[idx].name or f'h{idx + 1}' for idx in sorted(hyperplanes))

def _closure(polytope: HPolytope, key: tuple) -> HPolytope:
    equalities = tuple(Hyperplane(row[:-1], row[-1]) for row in key)
    return HPolytope(polytope.ambient_dim, equalities, polytope.inequalities, polytope.coords)

def _moebius(elements) -> tuple:
    values = []
    for idx, flat in enumerate(elements):
        if idx == 0:
            values.append(1)
            continue
        below = sum(values[j] for j in range(idx) if elements[j].hyperplanes < flat.hyperplanes)
        values.append(-below)
    return tuple(values)

def _closure_isomorphic(elements) -> bool:
    vertex_sets = [frozenset(flat.vertices()) for flat in elements]
    if len(set(vertex_sets)) != len(vertex_sets):
        return False
    for low_flat in elements:
        for upper, high_flat in enumerate(elements):
            ordered = low_flat.hyperplanes <= high_flat.hyperplanes
            inside = all(low_flat.polytope.contains(vert) for vert in vertex_sets[upper])
            if ordered != inside:
                return False
    return True

@functools.lru_cache(maxsize=None)
def intersection_poset(iop: InsideOutPolytope) -> IntersectionPoset:
    """
    All nonempty flats of P° and the arrangement, with Möbius values
    """
    logger = logging.getLogger(__name__)
    polytope = iop.polytope
    arrangement = iop.arrangement
    base_key = flat_key([plane.row() for plane in polytope.equalities])
    bottom = Flat(base_key, _closure(polytope, base_key), 0, frozenset(), _label(iop, ()))

    found = {base_key: bottom}
    dead = set()
    queue = deque([bottom])
    while queue:
        flat = queue.popleft()
        for idx, plane in enumerate(arrangement):
            if idx in flat.hyperplanes:
                continue
            if span_relation(flat.polytope, plane) != 'transversal':
                continue
            key = flat_key(list(flat.key) + [plane.row()])
            if key in found or key in dead:
                continue
            closure = _closure(polytope, key)
            verts = vertices(closure)
            if not verts or not polytope.contains(centroid(verts), strict=True):
                dead.add(key)
                continue
            containing = frozenset(
                    j for j, other in enumerate(arrangement)
                    if span_relation(closure, other) == 'contains'
            )
            child = Flat(key, closure, len(key) - len(base_key), containing,
                         _label(iop, containing))
            found[key] = child
            queue.append(child)

    elements = tuple(sorted(found.values(),
                            key=lambda item: (item.codim, tuple(sorted(item.hyperplanes)))))
    moebius = _moebius(elements)
    isomorphic = _closure_isomorphic(elements)
    if not isomorphic:
        logger.warning('Open and closed flat posets of %s are not isomorphic', iop.name or 'P')
    logger.debug('Poset of %s: %d flats, %d discarded outside P°',
                 iop.name or 'P', len(elements), len(dead))
    return IntersectionPoset(iop, elements, moebius, isomorphic)
