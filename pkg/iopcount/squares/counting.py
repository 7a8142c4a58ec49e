# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Final generating functions and quasipolynomials of the six problems in all
four count modes, plus the weak counts and derived views used to compare
against published presentations.
"""
import functools
import logging
from dataclasses import dataclass
from fractions import Fraction
from iopcount.ehrhart.series import open_inside_out_series, open_series
from iopcount.polytope.polytope import affine_dimension, vertices
from iopcount.ratfunc.gf import (RationalGF, add, convolve_magic_sum, convolve_upper_bound,
                                 deconvolve_magic_sum, deconvolve_upper_bound, scale, shift)
from iopcount.ratfunc.quasi import Quasipolynomial, to_quasipolynomial
from iopcount.squares.instances import CountMode, ProblemId, instance
from iopcount.util import constants as const
from iopcount.util import error as err
from iopcount.util.generic import positive_int

__all__ = [
        'count_gf',
        'quasipolynomial',
        'principal_constant',
        's7_correction',
        's7_series',
        'truncated_quasipolynomial',
        'weak_gf',
        'weak_quasipolynomial',
        'StructuralReport',
        'structural_checks',
        'order_type_classes',
]

logger = logging.getLogger(__name__)

def _problem(problem) -> ProblemId:
    if isinstance(problem, str):
        return ProblemId.from_key(problem)
    return problem

_CONVOLVE = {
    'upper-bound': convolve_upper_bound,
    'magic-sum': convolve_magic_sum,
}

_DECONVOLVE = {
    'upper-bound': deconvolve_upper_bound,
    'magic-sum': deconvolve_magic_sum,
}

@functools.lru_cache(maxsize=None)
def _count_gf(problem: ProblemId, mode: CountMode) -> RationalGF:
    inst = instance(problem)
    total = RationalGF()
    for face in inst.plan:
        total = add(total, scale(open_inside_out_series(face.iop), face.weight_for(mode)))
    if inst.geometry_reduced and not mode.reduced:
        total = _CONVOLVE[inst.convolution](total)
    elif not inst.geometry_reduced and mode.reduced:
        total = _DECONVOLVE[inst.convolution](total)
    logger.debug('Assembled %s %s: %s', problem.key, mode.value, total)
    return total

def count_gf(problem, mode='all') -> RationalGF:
    """
    Generating function sum over t > 0 of the count at t
    """
    return _count_gf(_problem(problem), CountMode.parse(mode))

@functools.lru_cache(maxsize=None)
def _quasipolynomial(problem: ProblemId, mode: CountMode) -> Quasipolynomial:
    return to_quasipolynomial(_count_gf(problem, mode))

def quasipolynomial(problem, mode='all') -> Quasipolynomial:
    """
    Counting quasipolynomial at its minimal period
    """
    return _quasipolynomial(_problem(problem), CountMode.parse(mode))

def principal_constant(problem) -> int:
    """
    Unsigned constant term of the principal constituent of the count of
    all squares
    """
    value = abs(quasipolynomial(problem, CountMode.ALL).principal[0])
    if value.denominator != 1:
        raise err.ConstituentMismatchError(f'constituent mismatch: constant term {value} is not integral')
    return value.numerator

def s7_correction(t: int) -> int:
    """
    floor((t - 1) / 21) plus one on the residues 10, 13, 16, 17, 19, 20
    """
    t = positive_int('t', t)
    residue = t % const.ProblemConstants.S7_PERIOD
    extra = 1 if residue in const.ProblemConstants.S7_EXTRA_RESIDUES else 0
    return (t - 1) // const.ProblemConstants.S7_PERIOD + extra

def s7_series() -> RationalGF:
    """
    x^10 / ((1 - x^3)(1 - x^7)), whose coefficients are the S_7 values
    """
    return shift(RationalGF((1,), const.ProblemConstants.S7_FACTORS),
                 const.ProblemConstants.S7_SHIFT)

def truncated_quasipolynomial(problem, mode='all') -> Quasipolynomial:
    """
    Affine semimagic and magilatin counts with the S_7 part split off:
    count(t) = truncated(t) - w * S_7(t), w the interior weight of the mode
    """
    problem = _problem(problem)
    mode = CountMode.parse(mode)
    if problem.parameter != 'affine' or problem.family == 'magic' or mode.reduced:
        raise err.ProvidedValueError(
                f'no truncated presentation for {problem.key} {mode.value}'
        )
    weight = instance(problem).plan[0].weight_for(mode)
    return to_quasipolynomial(add(count_gf(problem, mode), scale(s7_series(), weight)))

@functools.lru_cache(maxsize=None)
def _weak_gf(problem: ProblemId) -> RationalGF:
    return open_series(instance(problem).weak_polytope)

def weak_gf(problem) -> RationalGF:
    """
    Series of the weak squares, entries allowed to repeat
    """
    return _weak_gf(_problem(problem))

def weak_quasipolynomial(problem) -> Quasipolynomial:
    """
    Weak counting quasipolynomial
    """
    return to_quasipolynomial(weak_gf(problem))

@dataclass(frozen=True)
class StructuralReport:
    """
    Degree, leading coefficient and period facts of one count
    """
    problem: str
    mode: str
    degree: int
    expected_degree: int
    constant_leading: bool
    leading: Fraction
    weak_leading: Fraction
    volume_matches: bool
    period: int
    denominator: int

    @property
    def degree_matches(self) -> bool:
        """
        degree == geometric dimension + convolution degree
        """
        return self.degree == self.expected_degree

    @property
    def period_matches_denominator(self) -> bool:
        """
        minimal period == inside-out denominator
        """
        return self.period == self.denominator

    def to_json(self) -> dict:
        """
        Flat dict with rationals as text
        """
        def text(value):
            return None if value is None else str(value)
        return {
            'problem': self.problem,
            'mode': self.mode,
            'degree': self.degree,
            'expected_degree': self.expected_degree,
            'degree_matches': self.degree_matches,
            'constant_leading': self.constant_leading,
            'leading': text(self.leading),
            'weak_leading': text(self.weak_leading),
            'volume_matches': self.volume_matches,
            'period': self.period,
            'denominator': self.denominator,
            'period_matches_denominator': self.period_matches_denominator,
        }

def structural_checks(problem, mode='all') -> StructuralReport:
    """
    Records, without raising, how a count compares with its geometry
    """
    problem = _problem(problem)
    mode = CountMode.parse(mode)
    inst = instance(problem)
    quasi = quasipolynomial(problem, mode)

    expected = affine_dimension(vertices(inst.geometry.polytope))
    if inst.geometry_reduced and not mode.reduced:
        expected += inst.convolution_degree
    elif not inst.geometry_reduced and mode.reduced:
        expected -= inst.convolution_degree

    leading = quasi.principal[quasi.degree]
    weak_leading = None
    volume = None
    if not mode.reduced:
        weak = weak_quasipolynomial(problem)
        if weak.degree == quasi.degree:
            weak_leading = weak.principal[weak.degree]
            multiplier = inst.group_order if mode.symmetry else 1
            volume = leading * multiplier == weak_leading
    report = StructuralReport(problem.key, mode.value, quasi.degree, expected,
                              len(quasi.leading_coefficients()) == 1, leading,
                              weak_leading, volume, quasi.period, inst.denominator())
    if not report.degree_matches or not report.period_matches_denominator:
        logger.info('%s %s: degree %d (expected %d), period %d, denominator %d',
                    problem.key, mode.value, report.degree, expected,
                    report.period, report.denominator)
    return report

def order_type_classes(problem) -> int:
    """
    Number of order types up to symmetry, from the principal constant
    """
    problem = _problem(problem)
    if problem.family == 'magilatin':
        raise err.ProvidedValueError('magilatin constant terms do not count order types')
    order = const.ProblemConstants.GROUP_ORDER[problem.family]
    constant = principal_constant(problem)
    if constant % order:
        raise err.ConstituentMismatchError(
                f'constituent mismatch: {constant} is not a multiple of {order}'
        )
    return constant // order
