# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Counting points of the (1/t)-lattice in closed and open polytopes.

The count runs over X = t*x in Z^n. The free coordinates of the affine span
are scanned in order; each one gets an exact integer interval from the
constraints whose last free coordinate it is. Pivot coordinates must come
out integral, which is a congruence on the free ones. The innermost
coordinate is counted in closed form.
"""
import functools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from iopcount.polytope.polytope import (Face, HPolytope, InsideOutPolytope,
                                        affine_chart, vertices)
from iopcount.util import error as err
from iopcount.util.generic import lcm_of, positive_int
from iopcount.util.linalg import integer_row

__all__ = [
        'DilateCount',
        'LatticeScanner',
        'count_closed',
        'count_open',
        'count_open_off_arrangement',
        'dilate_count',
]

@dataclass(frozen=True)
class DilateCount:
    """
    Closed and open counts of one dilate
    """
    t: int
    closed_count: int
    open_count: int

    def __post_init__(self):
        if self.open_count > self.closed_count:
            raise err.GenericError(
                    f'open count {self.open_count} exceeds closed count {self.closed_count}'
            )

def _last_index(coeffs) -> int:
    last = -1
    for idx, value in enumerate(coeffs):
        if value != 0:
            last = idx
    return last

class LatticeScanner:
    """
    Prepared integer form of one polytope (closed or open, with optional
    excluded hyperplanes), reusable for every dilation factor t.
    """
    def __init__(self, polytope: HPolytope, strict: bool = False, exclusions: tuple = ()):
        self.logger = logging.getLogger(self.__module__)
        self.polytope = polytope
        self.strict = 1 if strict else 0
        chart = affine_chart(polytope)
        verts = vertices(polytope) if chart is not None else []
        self.empty = not verts
        if self.empty:
            return
        self.width = len(chart.free)

        # G . X <= h t
        self.constant_rows = []
        self.rows_by_level = [[] for _ in range(self.width)]
        for plane in polytope.inequalities:
            coeffs, offset = chart.project(plane)
            row = integer_row(coeffs + (offset,))
            level = _last_index(row[:-1])
            if level < 0:
                self.constant_rows.append(row[-1])
            else:
                self.rows_by_level[level].append(row)

        # (C t - M . X) = 0 mod L for every pivot with fractional data
        self.constant_congruences = []
        self.congruences_by_level = [[] for _ in range(self.width)]
        for const, coupling in zip(chart.constants, chart.couplings):
            modulus = lcm_of(Fraction(v).denominator for v in coupling + (const,))
            if modulus == 1:
                continue
            scaled = tuple(int(v * modulus) % modulus for v in coupling)
            entry = (int(const * modulus), scaled, modulus)
            level = _last_index(scaled)
            if level < 0:
                self.constant_congruences.append(entry)
            else:
                self.congruences_by_level[level].append(entry)

        # G . X = h t is excluded
        self.exclusions_by_level = [[] for _ in range(self.width)]
        for plane in exclusions:
            coeffs, offset = chart.project(plane)
            row = integer_row(coeffs + (offset,))
            level = _last_index(row[:-1])
            if level >= 0:
                self.exclusions_by_level[level].append(row)

        self.box = []
        for col in chart.free:
            values = [vert[col] for vert in verts]
            self.box.append((min(values), max(values)))
        self.logger.debug('scanner over %d free coordinates, strict=%s', self.width, strict)

    def count(self, t: int) -> int:
        """
        Number of lattice points of the t-th dilate
        """
        if self.empty:
            return 0
        for offset in self.constant_rows:
            if offset * t - self.strict < 0:
                return 0
        for const, _, modulus in self.constant_congruences:
            if (const * t) % modulus:
                return 0
        if self.width == 0:
            return 1
        return self._scan(t, 0, [0] * self.width)

    def _interval(self, t: int, level: int, prefix: list) -> tuple:
        low_frac, high_frac = self.box[level]
        low = math.ceil(low_frac * t)
        high = math.floor(high_frac * t)
        for row in self.rows_by_level[level]:
            coef = row[level]
            rest = row[-1] * t - self.strict
            for idx in range(level):
                rest -= row[idx] * prefix[idx]
            if coef > 0:
                high = min(high, rest // coef)
            else:
                low = max(low, -((-rest) // coef))
        return low, high

    def _congruent(self, t: int, level: int, prefix: list) -> bool:
        for const, scaled, modulus in self.congruences_by_level[level]:
            acc = const * t
            for idx in range(level + 1):
                acc -= scaled[idx] * prefix[idx]
            if acc % modulus:
                return False
        return True

    def _on_excluded(self, t: int, level: int, prefix: list) -> bool:
        for row in self.exclusions_by_level[level]:
            acc = 0
            for idx in range(level + 1):
                acc += row[idx] * prefix[idx]
            if acc == row[-1] * t:
                return True
        return False

    def _scan(self, t: int, level: int, prefix: list) -> int:
        low, high = self._interval(t, level, prefix)
        if low > high:
            return 0
        if level == self.width - 1:
            return self._count_last(t, level, prefix, low, high)
        total = 0
        for value in range(low, high + 1):
            prefix[level] = value
            if not self._congruent(t, level, prefix):
                continue
            if self._on_excluded(t, level, prefix):
                continue
            total += self._scan(t, level + 1, prefix)
        return total

    def _count_last(self, t: int, level: int, prefix: list, low: int, high: int) -> int:
        congruences = self.congruences_by_level[level]
        if not congruences:
            total = high - low + 1
        else:
            period = lcm_of(modulus for _, _, modulus in congruences)
            total = 0
            for start in range(low, min(high, low + period - 1) + 1):
                prefix[level] = start
                if self._congruent(t, level, prefix):
                    total += (high - start) // period + 1

        hits = set()
        for row in self.exclusions_by_level[level]:
            rest = row[-1] * t
            for idx in range(level):
                rest -= row[idx] * prefix[idx]
            if rest % row[level]:
                continue
            value = rest // row[level]
            if low <= value <= high:
                hits.add(value)
        for value in hits:
            prefix[level] = value
            if self._congruent(t, level, prefix):
                total -= 1
        return total

@functools.lru_cache(maxsize=None)
def _scanner(polytope: HPolytope, strict: bool, exclusions: tuple) -> LatticeScanner:
    return LatticeScanner(polytope, strict, exclusions)

def _region(shape) -> HPolytope:
    if isinstance(shape, Face):
        return shape.polytope()
    if isinstance(shape, HPolytope):
        return shape
    raise err.ProvidedValueError(f'cannot count points of {type(shape).__name__}')

def count_closed(shape, t: int) -> int:
    """
    Points x with t*x integral satisfying every constraint weakly
    """
    positive_int('t', t)
    return _scanner(_region(shape), False, ()).count(t)

def count_open(shape, t: int) -> int:
    """
    Points of the relative interior: non-tight inequalities strict
    """
    positive_int('t', t)
    return _scanner(_region(shape), True, ()).count(t)

def count_open_off_arrangement(iop: InsideOutPolytope, t: int) -> int:
    """
    Points of the open polytope lying on no arrangement hyperplane
    """
    positive_int('t', t)
    return _scanner(iop.polytope, True, iop.arrangement).count(t)

def dilate_count(shape, t: int) -> DilateCount:
    """
    Both counts of one dilate
    """
    return DilateCount(t, count_closed(shape, t), count_open(shape, t))
