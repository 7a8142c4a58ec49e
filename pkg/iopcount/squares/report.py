# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Per-coefficient periods of strong and weak counting quasipolynomials.

The report lays the data side by side: the minimal period p_k of each
t^k coefficient, the same for the weak count, their ratios, and whether
each ratio divides the one below it. Nothing here asserts a pattern.
"""
from dataclasses import dataclass
from fractions import Fraction
from iopcount.squares.counting import quasipolynomial, weak_quasipolynomial
from iopcount.squares.instances import CountMode, ProblemId, instance
from iopcount.util.generic import format_rational

__all__ = [
        'PeriodReport',
        'period_report',
]

@dataclass(frozen=True)
class PeriodReport:
    """
    strong_periods[k] and weak_periods[k] are the periods of the t^k
    coefficients; weak entries are None above the weak degree
    """
    problem: str
    mode: str
    degree: int
    period: int
    denominator: int
    strong_periods: tuple
    weak_periods: tuple
    ratios: tuple
    weak_divides: tuple
    ratios_divide_downward: bool
    even_constant_period: int
    odd_constant_period: int

    def to_json(self) -> dict:
        """
        Report as a plain dict
        """
        return {
            'problem': self.problem,
            'mode': self.mode,
            'degree': self.degree,
            'period': self.period,
            'denominator': self.denominator,
            'strong_periods': list(self.strong_periods),
            'weak_periods': list(self.weak_periods),
            'ratios': [None if value is None else format_rational(value) for value in self.ratios],
            'weak_divides': list(self.weak_divides),
            'ratios_divide_downward': self.ratios_divide_downward,
            'even_constant_period': self.even_constant_period,
            'odd_constant_period': self.odd_constant_period,
        }

    def lines(self) -> list:
        """
        Text table, one row per power of t
        """
        rows = [
            f'{self.problem} {self.mode}: degree {self.degree}, period {self.period}, '
            f'denominator {self.denominator}',
            'k  p_k  p_k^w  ratio',
        ]
        for power in range(self.degree, -1, -1):
            weak = self.weak_periods[power]
            ratio = self.ratios[power]
            rows.append(f'{power}  {self.strong_periods[power]}  '
                        f'{"-" if weak is None else weak}  '
                        f'{"-" if ratio is None else format_rational(ratio)}')
        rows.append(f'constant term period: even t {self.even_constant_period}, '
                    f'odd t {self.odd_constant_period}')
        return rows

def _divides_downward(ratios) -> bool:
    known = [value for value in ratios if value is not None]
    for lower, upper in zip(known, known[1:]):
        if lower.denominator != 1 or upper.denominator != 1 or lower.numerator % upper.numerator:
            return False
    return True

def period_report(problem, mode='all') -> PeriodReport:
    """
    Strong and weak coefficient periods of one count
    """
    if isinstance(problem, str):
        problem = ProblemId.from_key(problem)
    mode = CountMode.parse(mode)
    strong = quasipolynomial(problem, mode)
    weak = weak_quasipolynomial(problem)

    strong_periods = tuple(strong.coefficient_period(power) for power in range(strong.degree + 1))
    weak_periods = tuple(weak.coefficient_period(power) if power <= weak.degree else None
                         for power in range(strong.degree + 1))
    ratios = tuple(None if weak_p is None else Fraction(strong_p, weak_p)
                   for strong_p, weak_p in zip(strong_periods, weak_periods))
    divides = tuple(weak_p is not None and strong_p % weak_p == 0
                    for strong_p, weak_p in zip(strong_periods, weak_periods))
    return PeriodReport(
            problem.key, mode.value, strong.degree, strong.period, instance(problem).denominator(),
            strong_periods, weak_periods, ratios, divides, _divides_downward(ratios),
            strong.parity_period(0, 0), strong.parity_period(0, 1),
    )
