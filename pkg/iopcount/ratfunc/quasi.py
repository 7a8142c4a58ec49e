# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Quasipolynomials and their extraction from rational generating functions.

Constituents are indexed by residues r = 1..p, residue p standing for
t = 0 mod p (the principal constituent). Coefficients are exact Fractions,
lowest degree first.
"""
import functools
from dataclasses import dataclass
from fractions import Fraction
from sympy import Poly, Rational, Symbol, factorial
from iopcount.ratfunc.gf import RationalGF, standard_form
from iopcount.util import error as err
from iopcount.util.generic import divisors, format_rational, rational_pair

__all__ = [
        'Quasipolynomial',
        'to_quasipolynomial',
        'eval_quasipolynomial',
        'format_constituent',
]

_T = Symbol('t')

@functools.lru_cache(maxsize=None)
def _binomial_polynomial(degree: int, shift_by: int) -> Poly:
    """
    binomial(m + shift_by, degree) as a polynomial in m over QQ
    """
    poly = Poly(Rational(1, factorial(degree)), _T, domain='QQ')
    for idx in range(degree):
        poly = poly * Poly(_T + shift_by - idx, _T, domain='QQ')
    return poly

def _to_fractions(poly: Poly) -> list:
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    return coeffs or [Fraction(0)]

def _same_under(sequence, step: int) -> bool:
    return all(sequence[idx] == sequence[idx % step] for idx in range(len(sequence)))

def format_constituent(coeffs, var: str = 't') -> str:
    """
    Rational polynomial as text, highest power first
    """
    parts = []
    for power in range(len(coeffs) - 1, -1, -1):
        coef = Fraction(coeffs[power])
        if coef == 0:
            continue
        mag = format_rational(abs(coef))
        if power == 0:
            text = mag
        else:
            mono = var if power == 1 else f'{var}^{power}'
            text = mono if abs(coef) == 1 else f'{mag}*{mono}'
        if not parts:
            parts.append(text if coef > 0 else f'-{text}')
        else:
            parts.append(f'+ {text}' if coef > 0 else f'- {text}')
    return ' '.join(parts) if parts else '0'

@dataclass(frozen=True)
class Quasipolynomial:
    """
    period, degree and one coefficient tuple per residue 1..period
    """
    period: int
    degree: int
    constituents: tuple

    def residue(self, t: int) -> int:
        """
        Residue index in 1..period
        """
        return t % self.period or self.period

    def constituent(self, t: int) -> tuple:
        """
        Coefficients of the constituent that applies at t
        """
        return self.constituents[self.residue(t) - 1]

    @property
    def principal(self) -> tuple:
        """
        The t = 0 mod period constituent
        """
        return self.constituents[-1]

    def __call__(self, t: int) -> int:
        return eval_quasipolynomial(self, t)

    def coefficient_period(self, power: int) -> int:
        """
        Minimal period of the t^power coefficient
        """
        sequence = [coeffs[power] for coeffs in self.constituents]
        for step in divisors(self.period):
            if _same_under(sequence, step):
                return step
        return self.period

    def coefficient_table(self, power: int) -> dict:
        """
        residue -> t^power coefficient over that coefficient's own period
        """
        step = self.coefficient_period(power)
        return {res: self.constituents[res - 1][power] for res in range(1, step + 1)}

    def leading_coefficients(self) -> set:
        """
        Distinct leading coefficients across constituents
        """
        return {coeffs[self.degree] for coeffs in self.constituents}

    def parity_period(self, power: int, parity: int) -> int:
        """
        Minimal period of the t^power coefficient restricted to t of one
        parity, measured in steps of t. Needs an even period.
        """
        if self.period % 2:
            return self.coefficient_period(power)
        values = [self.constituents[res - 1][power]
                  for res in range(1, self.period + 1) if res % 2 == parity % 2]
        for step in divisors(len(values)):
            if _same_under(values, step):
                return 2 * step
        return self.period

    def to_json(self) -> dict:
        """
        {period, degree, constituents} with [num, den] pairs per coefficient
        """
        return {
            'period': self.period,
            'degree': self.degree,
            'constituents': [[rational_pair(c) for c in coeffs] for coeffs in self.constituents],
        }

def to_quasipolynomial(func: RationalGF) -> Quasipolynomial:
    """
    Quasipolynomial of the coefficients of func for t >= 1, at minimal
    period
    """
    if func.is_zero():
        return Quasipolynomial(1, 0, ((Fraction(0),),))
    numerator, period, power = standard_form(func)
    degree = power - 1
    if len(numerator) - 1 > period * power:
        raise err.SeriesFormError(
                f'numerator degree {len(numerator) - 1} exceeds {period * power}'
        )

    constituents = []
    for res in range(1, period + 1):
        acc = Poly(0, _T, domain='QQ')
        first = -1 if res == period else 0
        for idx in range(first, degree + 1):
            exponent = period * idx + res
            if exponent >= len(numerator) or numerator[exponent] == 0:
                continue
            acc = acc + _binomial_polynomial(degree, degree - idx) * numerator[exponent]
        in_t = acc.compose(Poly((_T - res) / period, _T, domain='QQ'))
        coeffs = _to_fractions(in_t)
        constituents.append(coeffs + [Fraction(0)] * (degree + 1 - len(coeffs)))

    top = 0
    for coeffs in constituents:
        for idx, value in enumerate(coeffs):
            if value != 0:
                top = max(top, idx)
    constituents = [tuple(coeffs[:top + 1]) for coeffs in constituents]

    for step in divisors(period):
        if _same_under(constituents, step):
            constituents = constituents[:step]
            break
    return Quasipolynomial(len(constituents), top, tuple(constituents))

def eval_quasipolynomial(quasi: Quasipolynomial, t: int) -> int:
    """
    Exact value at t; the result must be an integer
    """
    value = Fraction(0)
    for coef in reversed(quasi.constituent(t)):
        value = value * t + coef
    if value.denominator != 1:
        raise err.ConstituentMismatchError(
                f'constituent mismatch: value {format_rational(value)} at t={t}'
        )
    return value.numerator
