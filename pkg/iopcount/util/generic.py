# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Generic functions
"""
import math
from fractions import Fraction
from functools import reduce
from iopcount.util import error as err

# General utilities
__all__ = [
        'trim_non_empty_string',
        'positive_int',
        'to_fraction',
        'format_rational',
        'rational_pair',
        'lcm_of',
        'divisors',
        'lex_key',
]

def trim_non_empty_string(key, value) -> str:
    """
    Verify that a given value is a non-empty string
    """
    if not isinstance(value, str) or not value.strip():
        raise err.ProvidedValueError(f'{key} must be a non-empty string')
    return value.strip()

def positive_int(key, value) -> int:
    """
    Verify that a given value is a positive integer
    """
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise err.ProvidedValueError(f'{key} must be a positive integer')
    return value

def to_fraction(value) -> Fraction:
    """
    Converts ints, Fractions and "num/den" strings into a Fraction. Floats
    are refused; nothing in this package is inexact.
    """
    if isinstance(value, float):
        raise err.ProvidedValueError(f'refusing inexact value {value!r}')
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise err.ProvidedValueError(f'not a rational number: {value!r}') from exc

def format_rational(value) -> str:
    """
    Canonical "num/den" text, or a plain integer when the denominator is 1
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'

def rational_pair(value) -> list:
    """
    [num, den] integer pair used by every JSON dump
    """
    value = Fraction(value)
    return [value.numerator, value.denominator]

def lcm_of(values) -> int:
    """
    Least common multiple of an iterable of positive integers (1 if empty)
    """
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)

def divisors(number: int) -> list:
    """
    Positive divisors in increasing order
    """
    small = []
    large = []
    for cand in range(1, math.isqrt(number) + 1):
        if number % cand == 0:
            small.append(cand)
            if cand * cand != number:
                large.append(number // cand)
    return small + large[::-1]

def lex_key(point) -> tuple:
    """
    Exact lexicographic sort key for rational points
    """
    return tuple(Fraction(coord) for coord in point)
