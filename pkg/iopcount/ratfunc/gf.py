# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Rational generating functions N(x) / prod(1 - x^a).

Numerators are integer coefficient tuples (index = exponent). Denominators
stay a sorted multiset of exponents and are only expanded on demand.
"""
from collections import Counter
from dataclasses import dataclass
from iopcount.util import error as err
from iopcount.util.generic import lcm_of

__all__ = [
        'RationalGF',
        'add',
        'mul',
        'scale',
        'shift',
        'coefficients',
        'coefficient',
        'convolve_upper_bound',
        'convolve_magic_sum',
        'deconvolve_upper_bound',
        'deconvolve_magic_sum',
        'standard_form',
        'format_polynomial',
        'zero',
        'one',
]

def _trim(poly) -> tuple:
    poly = list(poly)
    while poly and poly[-1] == 0:
        poly.pop()
    return tuple(poly)

def _poly_add(left, right) -> list:
    size = max(len(left), len(right))
    out = [0] * size
    for idx, value in enumerate(left):
        out[idx] += value
    for idx, value in enumerate(right):
        out[idx] += value
    return out

def _poly_mul(left, right) -> list:
    if not left or not right:
        return []
    out = [0] * (len(left) + len(right) - 1)
    for i, a in enumerate(left):
        if a == 0:
            continue
        for j, b in enumerate(right):
            if b:
                out[i + j] += a * b
    return out

def _times_one_minus(poly, exponent: int) -> list:
    out = list(poly) + [0] * exponent
    for idx, value in enumerate(poly):
        out[idx + exponent] -= value
    return out

def _divide_one_minus(poly, exponent: int):
    """
    Exact quotient by (1 - x^exponent), or None
    """
    size = len(poly)
    if size == 0:
        return []
    quotient = [0] * size
    for idx in range(size):
        quotient[idx] = poly[idx] + (quotient[idx - exponent] if idx >= exponent else 0)
    if size < exponent or any(quotient[size - exponent:]):
        return None
    return quotient[:size - exponent]

def _product_of_factors(factors) -> list:
    poly = [1]
    for exponent in factors:
        poly = _times_one_minus(poly, exponent)
    return poly

def _term(coef: int, power: int, var: str) -> str:
    mag = abs(coef)
    if power == 0:
        return str(mag)
    mono = var if power == 1 else f'{var}^{power}'
    return mono if mag == 1 else f'{mag}*{mono}'

def format_polynomial(poly, var: str = 'x') -> str:
    """
    Integer polynomial as text, highest power first
    """
    parts = []
    for power in range(len(poly) - 1, -1, -1):
        coef = poly[power]
        if coef == 0:
            continue
        text = _term(coef, power, var)
        if not parts:
            parts.append(text if coef > 0 else f'-{text}')
        else:
            parts.append(f'+ {text}' if coef > 0 else f'- {text}')
    return ' '.join(parts) if parts else '0'

@dataclass(frozen=True, eq=False)
class RationalGF:
    """
    numerator / prod over denom_factors of (1 - x^a). Equality is equality
    of rational functions.
    """
    numerator: tuple = ()
    denom_factors: tuple = ()

    def __post_init__(self):
        numerator = _trim(int(value) for value in self.numerator)
        factors = tuple(sorted(int(value) for value in self.denom_factors))
        if any(value < 1 for value in factors):
            raise err.ProvidedValueError('denominator exponents must be positive')
        if not numerator:
            factors = ()
        object.__setattr__(self, 'numerator', numerator)
        object.__setattr__(self, 'denom_factors', factors)

    __hash__ = None

    @classmethod
    def polynomial(cls, coeffs) -> 'RationalGF':
        """
        A polynomial generating function
        """
        return cls(tuple(coeffs), ())

    def is_zero(self) -> bool:
        """
        True for the zero function
        """
        return not self.numerator

    def __eq__(self, other):
        if not isinstance(other, RationalGF):
            return NotImplemented
        left = _poly_mul(self.numerator, _product_of_factors(other.denom_factors))
        right = _poly_mul(other.numerator, _product_of_factors(self.denom_factors))
        return _trim(left) == _trim(right)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(other, -1))

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return scale(self, -1)

    def to_json(self) -> dict:
        """
        {numerator: [...], denom_factors: [...]}
        """
        return {'numerator': list(self.numerator), 'denom_factors': list(self.denom_factors)}

    def __str__(self):
        top = format_polynomial(self.numerator)
        if not self.denom_factors:
            return top
        bottom = []
        for exponent, mult in sorted(Counter(self.denom_factors).items()):
            base = '(1 - x)' if exponent == 1 else f'(1 - x^{exponent})'
            bottom.append(base if mult == 1 else f'{base}^{mult}')
        return f'({top}) / ({" ".join(bottom)})'

def normalize(numerator, factors) -> RationalGF:
    """
    Cancels (1 - x^a) factors that divide the numerator
    """
    numerator = list(_trim(numerator))
    if not numerator:
        return RationalGF()
    remaining = sorted(factors, reverse=True)
    kept = []
    for exponent in remaining:
        quotient = _divide_one_minus(numerator, exponent)
        if quotient is None:
            kept.append(exponent)
        else:
            numerator = quotient
    return RationalGF(tuple(numerator), tuple(kept))

def zero() -> RationalGF:
    """
    The zero function
    """
    return RationalGF()

def one() -> RationalGF:
    """
    The constant 1
    """
    return RationalGF((1,))

def add(left: RationalGF, right: RationalGF) -> RationalGF:
    """
    Sum over the smallest common (1 - x^a) multiset
    """
    if left.is_zero():
        return right
    if right.is_zero():
        return left
    have_left = Counter(left.denom_factors)
    have_right = Counter(right.denom_factors)
    common = have_left | have_right
    num_left = _poly_mul(left.numerator, _product_of_factors((common - have_left).elements()))
    num_right = _poly_mul(right.numerator, _product_of_factors((common - have_right).elements()))
    return normalize(_poly_add(num_left, num_right), list(common.elements()))

def mul(left: RationalGF, right: RationalGF) -> RationalGF:
    """
    Product of two generating functions
    """
    return normalize(_poly_mul(left.numerator, right.numerator),
                     left.denom_factors + right.denom_factors)

def scale(func: RationalGF, factor: int) -> RationalGF:
    """
    Integer multiple
    """
    if factor == 0:
        return RationalGF()
    return RationalGF(tuple(value * factor for value in func.numerator), func.denom_factors)

def shift(func: RationalGF, power: int) -> RationalGF:
    """
    Multiplies by x^power; a negative power needs that many zero low terms
    """
    if power >= 0:
        if func.is_zero():
            return func
        return RationalGF((0,) * power + func.numerator, func.denom_factors)
    low = -power
    if any(func.numerator[:low]):
        raise err.SeriesFormError(f'cannot divide by x^{low}: low coefficients are nonzero')
    return RationalGF(func.numerator[low:], func.denom_factors)

def coefficients(func: RationalGF, count: int) -> list:
    """
    Series coefficients for exponents 0..count
    """
    size = count + 1
    series = list(func.numerator[:size]) + [0] * max(0, size - len(func.numerator))
    for exponent in func.denom_factors:
        for idx in range(exponent, size):
            series[idx] += series[idx - exponent]
    return series

def coefficient(func: RationalGF, power: int) -> int:
    """
    One series coefficient
    """
    return coefficients(func, power)[power]

_UPPER_BOUND = RationalGF((0, 0, 1), (1, 1))
_MAGIC_SUM = RationalGF((0, 0, 0, 1), (3,))

def convolve_upper_bound(func: RationalGF) -> RationalGF:
    """
    Reduced counts by maximum entry to counts by strict upper bound:
    multiply by x^2 / (1 - x)^2
    """
    return mul(func, _UPPER_BOUND)

def convolve_magic_sum(func: RationalGF) -> RationalGF:
    """
    Reduced counts by line sum to counts by line sum over s = t mod 3:
    multiply by x^3 / (1 - x^3)
    """
    return mul(func, _MAGIC_SUM)

def deconvolve_upper_bound(func: RationalGF) -> RationalGF:
    """
    Exact inverse of convolve_upper_bound
    """
    numerator = _times_one_minus(_times_one_minus(func.numerator, 1), 1)
    return shift(normalize(numerator, func.denom_factors), -2)

def deconvolve_magic_sum(func: RationalGF) -> RationalGF:
    """
    Exact inverse of convolve_magic_sum
    """
    return shift(normalize(_times_one_minus(func.numerator, 3), func.denom_factors), -3)

def standard_form(func: RationalGF) -> tuple:
    """
    (numerator, p, k) with func = numerator / (1 - x^p)^k. A polynomial is
    given one (1 - x) factor so that k >= 1.
    """
    numerator = list(func.numerator)
    factors = list(func.denom_factors)
    if not factors:
        numerator = _times_one_minus(numerator, 1)
        return list(_trim(numerator)), 1, 1
    period = lcm_of(factors)
    for exponent in factors:
        if exponent == period:
            continue
        numerator = _divide_one_minus(_times_one_minus(numerator, period), exponent)
    return list(_trim(numerator)), period, len(factors)
