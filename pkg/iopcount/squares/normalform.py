# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Normal forms of 3x3 squares and their translation into inside-out
polytopes.

A normal form writes the nine cells as integer linear forms in a few free
parameters. A geometry divides the parameters by the counting parameter t
(upper bound or line sum); one parameter may be solved from a scale
equation when its coefficient there is +-1, which keeps it integral.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from iopcount.polytope.polytope import HPolytope, Hyperplane, InsideOutPolytope
from iopcount.util import error as err

__all__ = [
        'LinearForm',
        'NormalForm',
        'Scaling',
        'MAGIC_FORM',
        'SEMIMAGIC_FORM',
        'WEAK_SEMIMAGIC_FORM',
        'CELL_NAMES',
        'same_line',
        'build_polytope',
        'build_geometry',
]

CELL_NAMES = ('x11', 'x12', 'x13', 'x21', 'x22', 'x23', 'x31', 'x32', 'x33')

def same_line(first: int, second: int) -> bool:
    """
    True when two cells (row-major indices) share a row or a column
    """
    return first // 3 == second // 3 or first % 3 == second % 3

@dataclass(frozen=True)
class LinearForm:
    """
    sum coefficients[i] * parameter[i] + scale * t
    """
    coefficients: tuple
    scale: int = 0

    def __neg__(self):
        return LinearForm(tuple(-c for c in self.coefficients), -self.scale)

    def __sub__(self, other):
        return LinearForm(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)),
                          self.scale - other.scale)

@dataclass(frozen=True)
class NormalForm:
    """
    Nine cells as linear forms over named parameters
    """
    name: str
    parameters: tuple
    cells: tuple

    def cell(self, index: int) -> LinearForm:
        """
        Form of one cell, row-major index 0..8
        """
        return LinearForm(self.cells[index])

    def parameter(self, name: str) -> LinearForm:
        """
        Form of a bare parameter
        """
        return LinearForm(tuple(1 if p == name else 0 for p in self.parameters))

    def form(self, coefficients: dict, scale: int = 0) -> LinearForm:
        """
        Form from {parameter: coefficient}
        """
        for key in coefficients:
            if key not in self.parameters:
                raise err.ProvidedValueError(f'{key} is not a parameter of {self.name}')
        return LinearForm(tuple(coefficients.get(p, 0) for p in self.parameters), scale)

    def difference(self, first: int, second: int) -> LinearForm:
        """
        cell(first) - cell(second)
        """
        return self.cell(first) - self.cell(second)

    def square(self, values) -> tuple:
        """
        Evaluates the nine cells at integer parameter values
        """
        return tuple(sum(c * v for c, v in zip(cell, values)) for cell in self.cells)

    def inequations(self, same_line_only: bool = False) -> list:
        """
        Every pair of cells that must differ, as (first, second) indices
        """
        return [pair for pair in combinations(range(9), 2)
                if not same_line_only or same_line(*pair)]

@dataclass(frozen=True)
class Scaling:
    """
    Which parameters become coordinates x = p / t, which one (if any) is
    solved from the scale equation, and the equalities kept as such
    """
    coordinates: tuple
    coord_names: tuple
    scale_form: LinearForm = None
    eliminate: str = None
    equalities: tuple = field(default=())

def _to_row(form: LinearForm, normal_form: NormalForm, scaling: Scaling) -> tuple:
    """
    form / t as (coefficients over coordinates, constant)
    """
    coeffs = dict(zip(normal_form.parameters, (Fraction(c) for c in form.coefficients)))
    constant = Fraction(form.scale)
    if scaling.eliminate is not None:
        fixed = dict(zip(normal_form.parameters, scaling.scale_form.coefficients))
        pivot = fixed[scaling.eliminate]
        if abs(pivot) != 1:
            raise err.ProvidedValueError(f'{scaling.eliminate} has coefficient {pivot} in the scale form')
        weight = coeffs.pop(scaling.eliminate) / pivot
        for name, value in fixed.items():
            if name != scaling.eliminate:
                coeffs[name] -= weight * value
        constant -= weight * scaling.scale_form.scale
    extra = [name for name, value in coeffs.items()
             if value != 0 and name not in scaling.coordinates]
    if extra:
        raise err.ProvidedValueError(f'parameters {extra} are neither coordinates nor eliminated')
    return tuple(coeffs.get(name, Fraction(0)) for name in scaling.coordinates), constant

def _equality(form, normal_form, scaling, name='') -> Hyperplane:
    normal, constant = _to_row(form, normal_form, scaling)
    return Hyperplane(normal, -constant, name)

def _inequality(form, normal_form, scaling, name='') -> Hyperplane:
    # form >= 0  <=>  -normal . x <= constant
    normal, constant = _to_row(form, normal_form, scaling)
    return Hyperplane(tuple(-c for c in normal), constant, name)

def build_polytope(normal_form: NormalForm, scaling: Scaling, bounds) -> HPolytope:
    """
    Polytope of the forms in bounds (name, form >= 0) plus the scaling's
    own equalities
    """
    equalities = tuple(_equality(form, normal_form, scaling, name)
                       for name, form in scaling.equalities)
    inequalities = tuple(_inequality(form, normal_form, scaling, name)
                         for name, form in bounds)
    return HPolytope(len(scaling.coordinates), equalities, inequalities, scaling.coord_names)

def build_geometry(normal_form: NormalForm, scaling: Scaling, bounds,
                   excluded, name: str = '') -> InsideOutPolytope:
    """
    Inside-out polytope: bounds as above, excluded is a list of
    (hyperplane name, form = 0) pairs. A form that is a nonzero multiple of
    t alone never vanishes and is skipped.
    """
    polytope = build_polytope(normal_form, scaling, bounds)
    arrangement = []
    for label, form in excluded:
        normal, constant = _to_row(form, normal_form, scaling)
        if not any(normal):
            if constant == 0:
                raise err.ProvidedValueError(f'{label} holds identically in {normal_form.name}')
            continue
        arrangement.append(Hyperplane(normal, -constant, label))
    return InsideOutPolytope(polytope, tuple(arrangement), name)

# alpha+gamma, -alpha-beta+gamma, beta+gamma / ... with gamma the centre
MAGIC_FORM = NormalForm(
        'magic',
        ('alpha', 'beta', 'gamma'),
        (
            (1, 0, 1), (-1, -1, 1), (0, 1, 1),
            (-1, 1, 1), (0, 0, 1), (1, -1, 1),
            (0, -1, 1), (1, 1, 1), (-1, 0, 1),
        ),
)

# reduced normal form: x11 = 0 is the minimum, x13 the maximum
SEMIMAGIC_FORM = NormalForm(
        'semimagic',
        ('alpha', 'beta', 'gamma', 'delta'),
        (
            (0, 0, 0, 0), (0, 1, 0, 0), (2, 1, 1, 0),
            (1, 1, 0, 0), (1, 1, 1, -1), (0, 0, 0, 1),
            (1, 1, 1, 0), (1, 0, 0, 1), (0, 1, 0, -1),
        ),
)

# every weakly semimagic square from its line sum and top-left 2x2 block
WEAK_SEMIMAGIC_FORM = NormalForm(
        'weak-semimagic',
        ('s', 'x11', 'x12', 'x21', 'x22'),
        (
            (0, 1, 0, 0, 0), (0, 0, 1, 0, 0), (1, -1, -1, 0, 0),
            (0, 0, 0, 1, 0), (0, 0, 0, 0, 1), (1, 0, 0, -1, -1),
            (1, -1, 0, -1, 0), (1, 0, -1, 0, -1), (-1, 1, 1, 1, 1),
        ),
)
