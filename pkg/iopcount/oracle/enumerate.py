# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Brute-force counts of actual squares.

Reduced squares (minimum entry 0) are generated from normal-form candidates
and deduplicated by canonical form, so each orbit is seen once and weighted
by its size. Unreduced counts follow by summing over the shifts of the
reduced squares. scan_squares builds every square row by row and is kept
as an independent check for small t.
"""
import functools
import logging
from iopcount.oracle.square import Square3, canonicalize, orbit_size, satisfies
from iopcount.squares.instances import CountMode
from iopcount.squares.normalform import MAGIC_FORM, SEMIMAGIC_FORM
from iopcount.util import constants as const
from iopcount.util import error as err
from iopcount.util.config import BudgetConfig
from iopcount.util.generic import positive_int

__all__ = [
        'reduced_counts',
        'reduced_counts_table',
        'enumerate_squares',
        'enumerate_weak',
        'scan_squares',
]

logger = logging.getLogger(__name__)

def _check_family(family: str, parameter: str):
    if family not in const.ProblemConstants.FAMILIES:
        raise err.ProvidedValueError(f'{family} is not a square family')
    if parameter not in const.ProblemConstants.PARAMETERS:
        raise err.ProvidedValueError(f'{parameter} is not a counting parameter')

def _magic_candidates(parameter: str, size: int):
    # minimum cell gamma - alpha - beta is 0; max 2(alpha + beta), sum 3(alpha + beta)
    step = 2 if parameter == 'cubic' else 3
    if size % step:
        return
    total = size // step
    for beta in range(1, total):
        alpha = total - beta
        if alpha > beta:
            yield MAGIC_FORM.square((alpha, beta, total))

def _reduced_candidates(parameter: str, size: int):
    # gamma closes the scale equation: x13 = size (cubic) or row sum = size (affine)
    alpha_weight, beta_weight = (2, 1) if parameter == 'cubic' else (2, 2)
    for alpha in range(size // alpha_weight + 1):
        for beta in range((size - alpha_weight * alpha) // beta_weight + 1):
            gamma = size - alpha_weight * alpha - beta_weight * beta
            for delta in range(beta + 1):
                yield SEMIMAGIC_FORM.square((alpha, beta, gamma, delta))

@functools.lru_cache(maxsize=None)
def reduced_counts(family: str, parameter: str, size: int) -> tuple:
    """
    (reduced squares, reduced symmetry types) with largest entry size
    (cubic) or line sum size (affine)
    """
    _check_family(family, parameter)
    if family == 'magic':
        candidates = _magic_candidates(parameter, size)
    else:
        candidates = _reduced_candidates(parameter, size)
    seen = set()
    for entries in candidates:
        square = Square3(entries)
        if min(entries) != 0 or not satisfies(square, family):
            continue
        if parameter == 'cubic' and max(entries) != size:
            continue
        seen.add(canonicalize(square, family))
    total = sum(orbit_size(square, family) for square in seen)
    return total, len(seen)

def reduced_counts_table(family: str, parameter: str, t_max: int,
                         config: BudgetConfig = None) -> list:
    """
    (t, R(t), r(t)) for t = 1..t_max
    """
    config = config or BudgetConfig()
    t_max = positive_int('t_max', t_max)
    config.check(parameter, t_max)
    rows = [(t,) + reduced_counts(family, parameter, t) for t in range(1, t_max + 1)]
    logger.debug('Reduced %s %s table built up to t=%d', family, parameter, t_max)
    return rows

def enumerate_squares(family: str, parameter: str, t: int, mode='all',
                      config: BudgetConfig = None) -> int:
    """
    Squares with entries in (0, t) (cubic) or positive entries and line
    sum t (affine), counted in the given mode
    """
    config = config or BudgetConfig()
    _check_family(family, parameter)
    t = positive_int('t', t)
    mode = CountMode.parse(mode)
    config.check(parameter, t)
    pick = 1 if mode.symmetry else 0
    if mode.reduced:
        return reduced_counts(family, parameter, t)[pick]
    if parameter == 'cubic':
        # a reduced square with maximum w fits t - 1 - w shifts into (0, t)
        return sum((t - 1 - size) * reduced_counts(family, parameter, size)[pick]
                   for size in range(t - 1))
    # adding k to every entry raises the line sum by 3k
    return sum(reduced_counts(family, parameter, size)[pick]
               for size in range(t - 3, -1, -3))

def _box_pairs(low_b: int, high_b: int, low_c: int, high_c: int, total: int) -> int:
    """
    Pairs b + c = total with b, c in their intervals
    """
    low = max(low_b, total - high_c)
    high = min(high_b, total - low_c)
    return max(0, high - low + 1)

def _weak_semimagic(low: int, high: int, sums) -> int:
    count = 0
    for line_sum in sums:
        # third row (g, h, i); the first row is then any composition of
        # line_sum whose column complements stay in range
        for g in range(low, high + 1):
            for h in range(low, high + 1):
                i = line_sum - g - h
                if not low <= i <= high:
                    continue
                bounds = []
                for third in (g, h, i):
                    rest = line_sum - third
                    bounds.append((max(low, rest - high), min(high, rest - low)))
                (low_a, high_a), (low_b, high_b), (low_c, high_c) = bounds
                for a in range(low_a, high_a + 1):
                    count += _box_pairs(low_b, high_b, low_c, high_c, line_sum - a)
    return count

def _weak_magic(parameter: str, t: int) -> int:
    count = 0
    if parameter == 'cubic':
        centres = range(1, t)
    else:
        centres = [t // 3] if t % 3 == 0 else []
    for gamma in centres:
        for alpha in range(-gamma, gamma + 1):
            for beta in range(-gamma, gamma + 1):
                square = MAGIC_FORM.square((alpha, beta, gamma))
                if min(square) < 1:
                    continue
                if parameter == 'cubic' and max(square) > t - 1:
                    continue
                count += 1
    return count

def enumerate_weak(family: str, parameter: str, t: int, config: BudgetConfig = None) -> int:
    """
    Weak squares (repeated entries allowed) in the same counting setting
    """
    config = config or BudgetConfig()
    _check_family(family, parameter)
    t = positive_int('t', t)
    config.check(parameter, t, config.weak_t_max)
    if family == 'magic':
        return _weak_magic(parameter, t)
    if parameter == 'cubic':
        return _weak_semimagic(1, t - 1, range(3, 3 * t - 2))
    return _weak_semimagic(1, t, [t])

def _rows_with_sum(low: int, high: int, line_sum: int):
    for a in range(low, high + 1):
        for b in range(low, high + 1):
            c = line_sum - a - b
            if low <= c <= high:
                yield a, b, c

def _scan(low: int, high: int, sums):
    for line_sum in sums:
        rows = list(_rows_with_sum(low, high, line_sum))
        for first in rows:
            for second in rows:
                third = tuple(line_sum - x - y for x, y in zip(first, second))
                if all(low <= value <= high for value in third):
                    yield Square3(first + second + third)

def scan_squares(family: str, parameter: str, t: int, mode='all',
                 config: BudgetConfig = None) -> int:
    """
    Counts by building every weakly semimagic square in range
    """
    config = config or BudgetConfig()
    _check_family(family, parameter)
    t = positive_int('t', t)
    mode = CountMode.parse(mode)
    config.check(parameter, t, config.scan_t_max)
    if mode.reduced:
        low, high = 0, t
        sums = range(0, 3 * t + 1) if parameter == 'cubic' else [t]
    elif parameter == 'cubic':
        low, high = 1, t - 1
        sums = range(3, 3 * t - 2)
    else:
        low, high = 1, t
        sums = [t]

    count = 0
    seen = set()
    for square in _scan(low, high, sums):
        if not satisfies(square, family):
            continue
        if mode.reduced:
            if min(square.entries) != 0:
                continue
            if parameter == 'cubic' and max(square.entries) != t:
                continue
        if mode.symmetry:
            seen.add(canonicalize(square, family))
        else:
            count += 1
    return len(seen) if mode.symmetry else count
