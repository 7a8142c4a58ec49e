# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
The six counting problems as inside-out polytopes with symmetry weights.

Magic squares are counted unreduced in standard-form coordinates (alpha,
beta, gamma) restricted to alpha > beta > 0, which picks one square out of
each dihedral orbit. Semimagic and magilatin squares are counted through
their reduced normal form (alpha, beta, gamma, delta), gamma solved from the
counting parameter.
"""
import enum
import functools
import logging
from dataclasses import dataclass, field
from iopcount.polytope.polytope import (Face, HPolytope, InsideOutPolytope,
                                        denominator, inside_out_vertices)
from iopcount.squares import normalform as nf
from iopcount.util import constants as const
from iopcount.util import error as err
from iopcount.util.generic import lcm_of

__all__ = [
        'ProblemId',
        'CountMode',
        'WeightedFace',
        'ProblemInstance',
        'instance',
        'all_problems',
]

@dataclass(frozen=True)
class ProblemId:
    """
    family (magic, semimagic, magilatin) and parameter (cubic, affine)
    """
    family: str
    parameter: str

    def __post_init__(self):
        if self.family not in const.ProblemConstants.FAMILIES:
            raise err.ProvidedValueError(f'{self.family} is not a square family')
        if self.parameter not in const.ProblemConstants.PARAMETERS:
            raise err.ProvidedValueError(f'{self.parameter} is not a counting parameter')

    @property
    def key(self) -> str:
        """
        Stable string key, e.g. semimagic-cubic
        """
        return f'{self.family}-{self.parameter}'

    @classmethod
    def from_key(cls, key: str) -> 'ProblemId':
        """
        Parses a problem key
        """
        if key not in const.ProblemConstants.PROBLEM_KEYS:
            raise err.ProvidedValueError(
                    f'{key} is not a problem; choose from {", ".join(const.ProblemConstants.PROBLEM_KEYS)}'
            )
        family, parameter = key.split('-')
        return cls(family, parameter)

    def __str__(self):
        return self.key

class CountMode(enum.Enum):
    """
    What is counted: every square, symmetry types, reduced squares or
    reduced symmetry types
    """
    ALL = 'all'
    SYM = 'sym'
    REDUCED = 'reduced'
    REDUCED_SYM = 'reduced-sym'

    @property
    def symmetry(self) -> bool:
        """
        True when orbits are counted
        """
        return self in (CountMode.SYM, CountMode.REDUCED_SYM)

    @property
    def reduced(self) -> bool:
        """
        True when squares with minimum entry 0 are counted
        """
        return self in (CountMode.REDUCED, CountMode.REDUCED_SYM)

    @classmethod
    def parse(cls, value) -> 'CountMode':
        """
        Accepts a CountMode or its key
        """
        if isinstance(value, cls):
            return value
        for mode in cls:
            if mode.value == value:
                return mode
        raise err.ProvidedValueError(
                f'{value} is not a count mode; choose from {", ".join(const.ProblemConstants.MODE_KEYS)}'
        )

    def __str__(self):
        return self.value

@dataclass(frozen=True)
class WeightedFace:
    """
    One term of a symmetry weight plan
    """
    name: str
    iop: InsideOutPolytope
    weight: int
    sym_weight: int = 1

    def weight_for(self, mode: CountMode) -> int:
        """
        Weight used in a count mode
        """
        return self.sym_weight if mode.symmetry else self.weight

@dataclass(frozen=True)
class ProblemInstance:
    """
    Geometry, weight plan and the convolution linking reduced and
    unreduced counts. geometry_reduced tells whether the plan counts reduced
    squares (semimagic, magilatin) or every square directly (magic).
    """
    problem: ProblemId
    geometry: InsideOutPolytope
    plan: tuple
    convolution: str
    geometry_reduced: bool
    weak_polytope: HPolytope = field(compare=False, default=None)

    @property
    def group_order(self) -> int:
        """
        Order of the symmetry group of the family
        """
        return const.ProblemConstants.GROUP_ORDER[self.problem.family]

    @property
    def convolution_degree(self) -> int:
        """
        Degree added by the convolution from reduced to unreduced counts
        """
        return 2 if self.convolution == 'upper-bound' else 1

    def denominator(self) -> int:
        """
        lcm of the denominators of the inside-out vertices over the plan
        """
        return lcm_of(denominator(inside_out_vertices(face.iop)) for face in self.plan)

def _pair_label(first: int, second: int) -> str:
    return f'{nf.CELL_NAMES[first]}={nf.CELL_NAMES[second]}'

def _magic_scaling(parameter: str) -> nf.Scaling:
    form = nf.MAGIC_FORM
    equalities = ()
    if parameter == 'affine':
        equalities = (('sum', form.form({'gamma': 3}, -1)),)
    return nf.Scaling(form.parameters, ('x', 'y', 'z'), equalities=equalities)

def _magic(problem: ProblemId) -> ProblemInstance:
    form = nf.MAGIC_FORM
    scaling = _magic_scaling(problem.parameter)
    bounds = [
        ('y>=0', form.parameter('beta')),
        ('x>=y', form.form({'alpha': 1, 'beta': -1})),
        ('z>=x+y', form.form({'alpha': -1, 'beta': -1, 'gamma': 1})),
    ]
    if problem.parameter == 'cubic':
        bounds.append(('x+y+z<=1', form.form({'alpha': -1, 'beta': -1, 'gamma': -1}, 1)))
    geometry = nf.build_geometry(form, scaling, bounds,
                                 [('h', form.form({'alpha': 1, 'beta': -2}))],
                                 name=f'P_{problem.parameter[0]}')

    if problem.parameter == 'cubic':
        weak_bounds = [(f'{name}>=0', form.cell(idx)) for idx, name in enumerate(nf.CELL_NAMES)]
        weak_bounds.extend((f'{name}<=t', nf.LinearForm(tuple(-c for c in form.cells[idx]), 1))
                           for idx, name in enumerate(nf.CELL_NAMES))
    else:
        weak_bounds = [(f'{name}>=0', form.cell(idx)) for idx, name in enumerate(nf.CELL_NAMES)]
    weak = nf.build_polytope(form, scaling, weak_bounds)

    plan = (WeightedFace(geometry.name, geometry, const.ProblemConstants.GROUP_ORDER['magic']),)
    convolution = 'upper-bound' if problem.parameter == 'cubic' else 'magic-sum'
    return ProblemInstance(problem, geometry, plan, convolution, False, weak)

def _reduced_scaling(parameter: str) -> nf.Scaling:
    form = nf.SEMIMAGIC_FORM
    if parameter == 'cubic':
        # the largest entry x13 = 2 alpha + beta + gamma equals t
        scale = form.form({'alpha': 2, 'beta': 1, 'gamma': 1}, -1)
    else:
        # the line sum 2 alpha + 2 beta + gamma equals t
        scale = form.form({'alpha': 2, 'beta': 2, 'gamma': 1}, -1)
    return nf.Scaling(('alpha', 'beta', 'delta'), ('x', 'y', 'z'), scale, 'gamma')

def _reduced_bounds() -> list:
    form = nf.SEMIMAGIC_FORM
    return [
        ('OBC', form.parameter('alpha')),
        ('OAB', form.parameter('delta')),
        ('OAC', form.form({'beta': 1, 'delta': -1})),
        ('ABC', form.parameter('gamma')),
    ]

SEMIMAGIC_PLANES = (
    ('pi1', (8, 7)),
    ('pi2', (8, 5)),
    ('pi3', (7, 4)),
    ('pi4', (4, 5)),
    ('pi5', (7, 1)),
    ('pi6', (4, 1)),
    ('pi7', (4, 3)),
)

def _weak_semimagic(parameter: str) -> HPolytope:
    form = nf.WEAK_SEMIMAGIC_FORM
    bounds = [(f'{name}>=0', form.cell(idx)) for idx, name in enumerate(nf.CELL_NAMES)]
    if parameter == 'cubic':
        bounds.extend((f'{name}<=t', nf.LinearForm(tuple(-c for c in form.cells[idx]), 1))
                      for idx, name in enumerate(nf.CELL_NAMES))
        scaling = nf.Scaling(form.parameters, ('s', 'x11', 'x12', 'x21', 'x22'))
    else:
        scaling = nf.Scaling(form.parameters[1:], ('x11', 'x12', 'x21', 'x22'),
                             form.form({'s': 1}, -1), 's')
    return nf.build_polytope(form, scaling, bounds)

def _semimagic(problem: ProblemId) -> ProblemInstance:
    form = nf.SEMIMAGIC_FORM
    excluded = [(name, form.difference(*pair)) for name, pair in SEMIMAGIC_PLANES]
    geometry = nf.build_geometry(form, _reduced_scaling(problem.parameter), _reduced_bounds(),
                                 excluded, name=f'Q_{problem.parameter[0]}')
    plan = (WeightedFace(geometry.name, geometry, const.ProblemConstants.GROUP_ORDER['semimagic']),)
    convolution = 'upper-bound' if problem.parameter == 'cubic' else 'magic-sum'
    return ProblemInstance(problem, geometry, plan, convolution, True,
                           _weak_semimagic(problem.parameter))

# facet name -> bound names tight on it, and its weight 72 / |stabilizer|
MAGILATIN_FACES = (
    ('OAB', ('OAB',), const.ProblemConstants.FACET_WEIGHT),
    ('OAC', ('OAC',), const.ProblemConstants.FACET_WEIGHT),
    ('OBC', ('OBC',), const.ProblemConstants.FACET_WEIGHT),
    ('OB', ('OBC', 'OAB'), const.ProblemConstants.EDGE_WEIGHT),
)

def _cutting_only(iop: InsideOutPolytope, name: str) -> InsideOutPolytope:
    return InsideOutPolytope(iop.polytope, iop.cutting(), name)

def _magilatin(problem: ProblemId) -> ProblemInstance:
    form = nf.SEMIMAGIC_FORM
    # only cells sharing a line must differ
    excluded = [(_pair_label(*pair), form.difference(*pair))
                for pair in form.inequations(same_line_only=True)]
    geometry = nf.build_geometry(form, _reduced_scaling(problem.parameter), _reduced_bounds(),
                                 excluded, name=f'Q_{problem.parameter[0]}')
    logger = logging.getLogger(__name__)
    names = [plane.name for plane in geometry.polytope.inequalities]
    group = const.ProblemConstants.GROUP_ORDER['magilatin']
    plan = [WeightedFace(geometry.name, _cutting_only(geometry, geometry.name), group)]
    for face_name, tight, weight in MAGILATIN_FACES:
        face = Face.create(geometry.polytope, [names.index(bound) for bound in tight], name=face_name)
        restricted = geometry.restrict(face)
        plan.append(WeightedFace(face_name, _cutting_only(restricted, face_name), weight))
        logger.debug('Magilatin face %s: dimension %d, %d cutting lines',
                     face_name, face.dimension(), len(restricted.cutting()))
    convolution = 'upper-bound' if problem.parameter == 'cubic' else 'magic-sum'
    return ProblemInstance(problem, geometry, tuple(plan), convolution, True,
                           _weak_semimagic(problem.parameter))

_BUILDERS = {
    'magic': _magic,
    'semimagic': _semimagic,
    'magilatin': _magilatin,
}

@functools.lru_cache(maxsize=None)
def _instance(problem: ProblemId) -> ProblemInstance:
    return _BUILDERS[problem.family](problem)

def instance(problem) -> ProblemInstance:
    """
    The inside-out geometry and weight plan of a problem (id or key)
    """
    if isinstance(problem, str):
        problem = ProblemId.from_key(problem)
    return _instance(problem)

def all_problems() -> list:
    """
    The six problem ids in key order
    """
    return [ProblemId.from_key(key) for key in const.ProblemConstants.PROBLEM_KEYS]
