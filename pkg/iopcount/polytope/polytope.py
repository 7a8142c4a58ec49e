# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Rational polytopes in H-representation, their faces, and inside-out
polytopes (a polytope paired with a hyperplane arrangement).

Vertices are found by solving every square tight subsystem exactly in a
chart of the polytope's affine span. This is meant for dimension five or
less.
"""
import functools
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from iopcount.util import error as err
from iopcount.util import linalg
from iopcount.util.generic import format_rational, lcm_of, lex_key, rational_pair, to_fraction

__all__ = [
        'Hyperplane',
        'HPolytope',
        'Face',
        'InsideOutPolytope',
        'AffineChart',
        'affine_chart',
        'vertices',
        'inside_out_vertices',
        'denominator',
        'affine_dimension',
        'centroid',
        'span_relation',
        'meets_interior',
        'flat_key',
]

logger = logging.getLogger(__name__)

_DEFAULT_COORDS = ('x', 'y', 'z', 'w')

def _coord_names(dim: int, names=()) -> tuple:
    if names and len(names) == dim:
        return tuple(names)
    if dim <= len(_DEFAULT_COORDS):
        return _DEFAULT_COORDS[:dim]
    return tuple(f'x{i + 1}' for i in range(dim))

def _dot(row, point) -> Fraction:
    return sum((a * b for a, b in zip(row, point)), Fraction(0))

@dataclass(frozen=True)
class Hyperplane:
    """
    The affine hyperplane normal . x = offset. Inequalities of a polytope
    reuse this type and read as normal . x <= offset.
    """
    normal: tuple
    offset: Fraction = Fraction(0)
    name: str = field(default='', compare=False)

    def __post_init__(self):
        normal = tuple(to_fraction(value) for value in self.normal)
        if not normal or all(value == 0 for value in normal):
            raise err.ProvidedValueError('hyperplane normal must not be the zero vector')
        object.__setattr__(self, 'normal', normal)
        object.__setattr__(self, 'offset', to_fraction(self.offset))

    @property
    def dim(self) -> int:
        """
        Ambient dimension
        """
        return len(self.normal)

    def value(self, point) -> Fraction:
        """
        normal . point
        """
        return _dot(self.normal, point)

    def slack(self, point) -> Fraction:
        """
        offset - normal . point; nonnegative inside the halfspace
        """
        return self.offset - self.value(point)

    def contains(self, point) -> bool:
        """
        Exact incidence test
        """
        return self.slack(point) == 0

    def row(self) -> tuple:
        """
        Augmented row (normal..., offset)
        """
        return self.normal + (self.offset,)

    def renamed(self, name: str) -> 'Hyperplane':
        """
        Same hyperplane under another name
        """
        return Hyperplane(self.normal, self.offset, name)

    def describe(self, names=(), relation: str = '=') -> str:
        """
        Human readable form, e.g. "x - y + 2z = 0"
        """
        coords = _coord_names(self.dim, names)
        terms = []
        for coef, coord in zip(self.normal, coords):
            if coef == 0:
                continue
            mag = abs(coef)
            text = coord if mag == 1 else f'{format_rational(mag)}{coord}'
            if not terms:
                terms.append(text if coef > 0 else f'-{text}')
            else:
                terms.append(f'+ {text}' if coef > 0 else f'- {text}')
        return f'{" ".join(terms)} {relation} {format_rational(self.offset)}'

    def __str__(self):
        return self.describe()

@dataclass(frozen=True)
class HPolytope:
    """
    {x : E x = e, A x <= b}. Coordinate names are cosmetic.
    """
    ambient_dim: int
    equalities: tuple = ()
    inequalities: tuple = ()
    coords: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise err.ProvidedValueError('ambient_dim must be positive')
        object.__setattr__(self, 'equalities', tuple(self.equalities))
        object.__setattr__(self, 'inequalities', tuple(self.inequalities))
        object.__setattr__(self, 'coords', tuple(self.coords))
        for plane in self.equalities + self.inequalities:
            if plane.dim != self.ambient_dim:
                raise err.ProvidedValueError(
                        f'{plane} lives in dimension {plane.dim}, expected {self.ambient_dim}'
                )

    def contains(self, point, strict: bool = False) -> bool:
        """
        Exact membership. With strict, every inequality must hold strictly.
        """
        if any(not plane.contains(point) for plane in self.equalities):
            return False
        if strict:
            return all(plane.slack(point) > 0 for plane in self.inequalities)
        return all(plane.slack(point) >= 0 for plane in self.inequalities)

    def with_equalities(self, extra) -> 'HPolytope':
        """
        Same inequalities, more equalities
        """
        return HPolytope(self.ambient_dim, self.equalities + tuple(extra),
                         self.inequalities, self.coords)

    def tight_at(self, point) -> frozenset:
        """
        Indices of the inequalities with zero slack at a point
        """
        return frozenset(i for i, plane in enumerate(self.inequalities) if plane.contains(point))

    def vertices(self) -> list:
        """
        Shortcut for vertices(self)
        """
        return vertices(self)

    def dimension(self) -> int:
        """
        Dimension of the affine hull of the vertices (-1 when empty)
        """
        return affine_dimension(vertices(self))

    def is_simplex(self) -> bool:
        """
        True when the vertex count is one more than the dimension
        """
        verts = vertices(self)
        return bool(verts) and len(verts) == affine_dimension(verts) + 1

    def describe(self) -> list:
        """
        Constraint lines for text output
        """
        lines = [plane.describe(self.coords, '=') for plane in self.equalities]
        lines.extend(plane.describe(self.coords, '<=') for plane in self.inequalities)
        return lines

@dataclass(frozen=True)
class AffineChart:
    """
    Parametrization of the affine span {E x = e} by its free coordinates:
    x_p = constant_p - sum_f coupling_p[f] * x_f for every pivot p.
    """
    ambient_dim: int
    pivots: tuple
    free: tuple
    constants: tuple
    couplings: tuple

    def lift(self, free_values) -> tuple:
        """
        Full point from the free coordinates
        """
        point = [Fraction(0)] * self.ambient_dim
        for col, value in zip(self.free, free_values):
            point[col] = Fraction(value)
        for piv, const, coupling in zip(self.pivots, self.constants, self.couplings):
            point[piv] = const - _dot(coupling, free_values)
        return tuple(point)

    def project(self, plane: Hyperplane) -> tuple:
        """
        Restricts normal . x (<= or =) offset to the free coordinates.
        Returns (coefficients over free coordinates, offset).
        """
        coeffs = [plane.normal[col] for col in self.free]
        offset = plane.offset
        for piv, const, coupling in zip(self.pivots, self.constants, self.couplings):
            weight = plane.normal[piv]
            if weight == 0:
                continue
            offset -= weight * const
            for idx, value in enumerate(coupling):
                coeffs[idx] -= weight * value
        return tuple(coeffs), offset

@functools.lru_cache(maxsize=None)
def affine_chart(polytope: HPolytope):
    """
    Chart of the affine span, or None when the equalities are inconsistent
    """
    dim = polytope.ambient_dim
    rows = [plane.row() for plane in polytope.equalities]
    reduced, pivots = linalg.rref(rows) if rows else ([], [])
    if dim in pivots:
        return None
    free = tuple(col for col in range(dim) if col not in pivots)
    constants = tuple(row[dim] for row in reduced)
    couplings = tuple(tuple(row[col] for col in free) for row in reduced)
    return AffineChart(dim, tuple(pivots), free, constants, couplings)

@functools.lru_cache(maxsize=None)
def _vertex_tuple(polytope: HPolytope) -> tuple:
    chart = affine_chart(polytope)
    if chart is None:
        return ()
    width = len(chart.free)
    rows = []
    for plane in polytope.inequalities:
        coeffs, offset = chart.project(plane)
        if any(coeffs):
            rows.append((coeffs, offset))
        elif offset < 0:
            return ()

    if width == 0:
        return (chart.lift(()),)
    if linalg.rank([coeffs for coeffs, _ in rows]) < width:
        raise err.UnboundedPolytopeError('unbounded: constraint system contains a line')

    found = set()
    for subset in itertools.combinations(range(len(rows)), width):
        sol = linalg.solve_unique([rows[i][0] for i in subset], [rows[i][1] for i in subset])
        if sol is None:
            continue
        if all(_dot(coeffs, sol) <= offset for coeffs, offset in rows):
            found.add(sol)
    if not found:
        return ()

    # extreme rays of the recession cone come from width-1 tight rows
    for subset in itertools.combinations(range(len(rows)), width - 1):
        direction = linalg.null_vector([rows[i][0] for i in subset], width)
        if direction is None:
            continue
        for sign in (1, -1):
            if all(sign * _dot(coeffs, direction) <= 0 for coeffs, _ in rows):
                raise err.UnboundedPolytopeError('unbounded: nonzero recession direction')

    points = sorted((chart.lift(sol) for sol in found), key=lex_key)
    logger.debug('%d vertices in dimension %d', len(points), width)
    return tuple(points)

def vertices(polytope: HPolytope) -> list:
    """
    Exact vertex set in lexicographic order; empty for an empty polytope.
    Raises UnboundedPolytopeError for unbounded constraint systems.
    """
    return list(_vertex_tuple(polytope))

def affine_dimension(points) -> int:
    """
    Dimension of the affine hull of a point set (-1 for no points)
    """
    points = list(points)
    if not points:
        return -1
    base = points[0]
    diffs = [tuple(a - b for a, b in zip(point, base)) for point in points[1:]]
    return linalg.rank(diffs) if diffs else 0

def centroid(points) -> tuple:
    """
    Exact centroid of a nonempty point list
    """
    points = list(points)
    if not points:
        raise err.MissingValueError('no vertices')
    count = len(points)
    return tuple(sum(coords, Fraction(0)) / count for coords in zip(*points))

def denominator(points) -> int:
    """
    Least common denominator of every coordinate of every point
    """
    points = list(points)
    if not points:
        raise err.MissingValueError('no vertices')
    return lcm_of(Fraction(coord).denominator for point in points for coord in point)

def span_relation(polytope: HPolytope, plane: Hyperplane) -> str:
    """
    How a hyperplane sits against the affine span of a polytope:
    'contains', 'disjoint' or 'transversal'
    """
    normals = [eq.normal for eq in polytope.equalities]
    augmented = [eq.row() for eq in polytope.equalities]
    base = linalg.rank(normals) if normals else 0
    if linalg.rank(normals + [plane.normal]) > base:
        return 'transversal'
    base_aug = linalg.rank(augmented) if augmented else 0
    if linalg.rank(augmented + [plane.row()]) == base_aug:
        return 'contains'
    return 'disjoint'

def flat_key(rows) -> tuple:
    """
    Canonical key of an affine subspace given by augmented equality rows
    """
    reduced, _ = linalg.rref(list(rows)) if rows else ([], [])
    return tuple(tuple(row) for row in reduced)

@dataclass(frozen=True)
class Face:
    """
    A face of a polytope: the tight inequalities become equalities, and the
    remaining inequalities are strict in its relative interior. Extra
    equalities let arrangement flats be treated as faces too.
    """
    parent: HPolytope
    tight: frozenset = frozenset()
    extra: tuple = ()
    name: str = field(default='', compare=False)

    @classmethod
    def create(cls, parent: HPolytope, tight=(), extra=(), name: str = '') -> 'Face':
        """
        Builds a face and saturates its tight set from its vertices
        """
        tight = frozenset(tight)
        for idx in tight:
            if not 0 <= idx < len(parent.inequalities):
                raise err.ProvidedValueError(f'{idx} is not an inequality index')
        draft = cls(parent, tight, tuple(extra), name)
        verts = vertices(draft.polytope())
        if not verts:
            raise err.ProvidedValueError(f'face {name or sorted(tight)} is empty')
        saturated = frozenset(
                idx for idx, plane in enumerate(parent.inequalities)
                if all(plane.contains(vert) for vert in verts)
        )
        return cls(parent, saturated, tuple(extra), name)

    def polytope(self) -> HPolytope:
        """
        The closed face as a polytope of its own
        """
        return _face_polytope(self.parent, self.tight, self.extra)

    def vertices(self) -> list:
        """
        Vertices of the closed face
        """
        return vertices(self.polytope())

    def dimension(self) -> int:
        """
        Dimension of the face
        """
        return affine_dimension(self.vertices())

@functools.lru_cache(maxsize=None)
def _face_polytope(parent: HPolytope, tight: frozenset, extra: tuple) -> HPolytope:
    promoted = tuple(parent.inequalities[idx] for idx in sorted(tight))
    remaining = tuple(plane for idx, plane in enumerate(parent.inequalities) if idx not in tight)
    return HPolytope(parent.ambient_dim, parent.equalities + promoted + tuple(extra),
                     remaining, parent.coords)

@dataclass(frozen=True)
class InsideOutPolytope:
    """
    A polytope with a hyperplane arrangement whose points are excluded.
    Hyperplanes missing the open polytope are kept but marked non-cutting.
    """
    polytope: HPolytope
    arrangement: tuple = ()
    name: str = field(default='', compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'arrangement', tuple(self.arrangement))
        for plane in self.arrangement:
            if plane.dim != self.polytope.ambient_dim:
                raise err.ProvidedValueError(f'{plane} has the wrong dimension')
            if span_relation(self.polytope, plane) == 'contains':
                raise err.ProvidedValueError(
                        f'{plane.name or plane} contains the whole polytope {self.name}'
                )

    def cutting(self) -> tuple:
        """
        Arrangement hyperplanes that meet the open polytope
        """
        return _cutting(self.polytope, self.arrangement)

    def non_cutting(self) -> tuple:
        """
        Arrangement hyperplanes that miss the open polytope
        """
        keep = self.cutting()
        return tuple(plane for plane in self.arrangement if plane not in keep)

    def restrict(self, face: Face, name: str = '') -> 'InsideOutPolytope':
        """
        Induced inside-out polytope on a face: hyperplanes missing the face's
        span are dropped and hyperplanes meeting it in the same flat merged
        """
        if face.parent != self.polytope:
            raise err.ProvidedValueError('face does not belong to this polytope')
        region = face.polytope()
        base_rows = [plane.row() for plane in region.equalities]
        seen = set()
        induced = []
        for plane in self.arrangement:
            relation = span_relation(region, plane)
            if relation == 'contains':
                raise err.ProvidedValueError(
                        f'{plane.name or plane} contains the face {face.name}'
                )
            if relation == 'disjoint':
                continue
            key = flat_key(base_rows + [plane.row()])
            if key in seen:
                continue
            seen.add(key)
            induced.append(plane)
        return InsideOutPolytope(region, tuple(induced), name or face.name)

    def to_json(self) -> dict:
        """
        Vertex and arrangement dump
        """
        return {
            'name': self.name,
            'constraints': self.polytope.describe(),
            'arrangement': [
                {'name': plane.name, 'equation': plane.describe(self.polytope.coords),
                 'cutting': plane in self.cutting()}
                for plane in self.arrangement
            ],
            'vertices': [[rational_pair(c) for c in vert] for vert in vertices(self.polytope)],
        }

def meets_interior(polytope: HPolytope, plane: Hyperplane) -> bool:
    """
    True when the hyperplane meets the relative interior of the polytope
    """
    if span_relation(polytope, plane) != 'transversal':
        return False
    section = vertices(polytope.with_equalities((plane,)))
    if not section:
        return False
    return polytope.contains(centroid(section), strict=True)

@functools.lru_cache(maxsize=None)
def _cutting(polytope: HPolytope, arrangement: tuple) -> tuple:
    return tuple(plane for plane in arrangement if meets_interior(polytope, plane))

def inside_out_vertices(iop: InsideOutPolytope) -> list:
    """
    Vertices of the polytope plus every point of the polytope cut out by
    facet and arrangement hyperplanes together
    """
    polytope = iop.polytope
    base = vertices(polytope)
    if not iop.arrangement or not base:
        return base
    chart = affine_chart(polytope)
    width = len(chart.free)
    candidates = [chart.project(plane) for plane in polytope.inequalities]
    candidates.extend(chart.project(plane) for plane in iop.arrangement)
    candidates = [(coeffs, offset) for coeffs, offset in candidates if any(coeffs)]

    found = {tuple(vert) for vert in base}
    for subset in itertools.combinations(range(len(candidates)), width):
        sol = linalg.solve_unique([candidates[i][0] for i in subset],
                                  [candidates[i][1] for i in subset])
        if sol is None:
            continue
        point = chart.lift(sol)
        if polytope.contains(point):
            found.add(point)
    return sorted(found, key=lex_key)
