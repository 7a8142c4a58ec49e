# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
3x3 integer squares, the family predicates and the symmetry groups acting
on them.

Cells are stored row-major. A group element is a permutation of the nine
cell indices; the image of a square s under g has cell i equal to s[g[i]].
"""
import functools
import itertools
from dataclasses import dataclass
from iopcount.util import constants as const
from iopcount.util import error as err

__all__ = [
        'Square3',
        'LINES',
        'symmetry_group',
        'satisfies',
        'canonicalize',
        'orbit',
        'orbit_size',
        'stabilizer_order',
]

ROWS = ((0, 1, 2), (3, 4, 5), (6, 7, 8))
COLUMNS = ((0, 3, 6), (1, 4, 7), (2, 5, 8))
DIAGONALS = ((0, 4, 8), (2, 4, 6))
LINES = ROWS + COLUMNS

@dataclass(frozen=True, order=True)
class Square3:
    """
    A 3x3 square of integers
    """
    entries: tuple

    def __post_init__(self):
        entries = tuple(int(value) for value in self.entries)
        if len(entries) != 9:
            raise err.ProvidedValueError(f'a 3x3 square has 9 entries, got {len(entries)}')
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def from_rows(cls, rows) -> 'Square3':
        """
        Builds a square from three rows
        """
        return cls(tuple(value for row in rows for value in row))

    def rows(self) -> tuple:
        """
        The three rows
        """
        return tuple(tuple(self.entries[idx] for idx in row) for row in ROWS)

    def line_sums(self, diagonals: bool = False) -> set:
        """
        Distinct row and column sums, and diagonal sums when asked
        """
        lines = LINES + DIAGONALS if diagonals else LINES
        return {sum(self.entries[idx] for idx in line) for line in lines}

    def is_weak_semimagic(self) -> bool:
        """
        Every row and column has the same sum
        """
        return len(self.line_sums()) == 1

    def is_weak_magic(self) -> bool:
        """
        Rows, columns and both diagonals have the same sum
        """
        return len(self.line_sums(diagonals=True)) == 1

    def distinct(self) -> bool:
        """
        All nine entries differ
        """
        return len(set(self.entries)) == 9

    def latin_distinct(self) -> bool:
        """
        Entries differ within every row and every column
        """
        return all(len({self.entries[idx] for idx in line}) == 3 for line in LINES)

    def is_magic(self) -> bool:
        """
        Strongly magic
        """
        return self.is_weak_magic() and self.distinct()

    def is_semimagic(self) -> bool:
        """
        Strongly semimagic
        """
        return self.is_weak_semimagic() and self.distinct()

    def is_magilatin(self) -> bool:
        """
        Weakly semimagic with no repeat inside a line
        """
        return self.is_weak_semimagic() and self.latin_distinct()

    def magic_sum(self) -> int:
        """
        Sum of the first row
        """
        return sum(self.entries[:3])

    def image(self, element) -> 'Square3':
        """
        Image under a cell permutation
        """
        return Square3(tuple(self.entries[idx] for idx in element))

    def __str__(self):
        return '\n'.join(' '.join(f'{value:>3}' for value in row) for row in self.rows())

def satisfies(square: Square3, family: str, weak: bool = False) -> bool:
    """
    Family predicate; weak drops the distinctness requirement
    """
    if family == 'magic':
        return square.is_weak_magic() if weak else square.is_magic()
    if family == 'semimagic':
        return square.is_weak_semimagic() if weak else square.is_semimagic()
    if family == 'magilatin':
        return square.is_weak_semimagic() if weak else square.is_magilatin()
    raise err.ProvidedValueError(f'{family} is not a square family')

def _compose(first, second) -> tuple:
    # apply second, then first
    return tuple(second[idx] for idx in first)

def _closure(generators) -> tuple:
    identity = tuple(range(9))
    elements = {identity}
    frontier = [identity]
    while frontier:
        current = frontier.pop()
        for gen in generators:
            nxt = _compose(current, gen)
            if nxt not in elements:
                elements.add(nxt)
                frontier.append(nxt)
    return tuple(sorted(elements))

_TRANSPOSE = (0, 3, 6, 1, 4, 7, 2, 5, 8)
_ROTATE = (6, 3, 0, 7, 4, 1, 8, 5, 2)

@functools.lru_cache(maxsize=None)
def symmetry_group(family: str) -> tuple:
    """
    Cell permutations of a family's symmetry group: the dihedral group of
    the square for magic squares, row and column permutations with the
    transpose otherwise
    """
    if family == 'magic':
        group = _closure([_ROTATE, _TRANSPOSE])
    elif family in ('semimagic', 'magilatin'):
        generators = [_TRANSPOSE]
        for perm in itertools.permutations(range(3)):
            generators.append(tuple(3 * perm[idx // 3] + idx % 3 for idx in range(9)))
            generators.append(tuple(3 * (idx // 3) + perm[idx % 3] for idx in range(9)))
        group = _closure(generators)
    else:
        raise err.ProvidedValueError(f'{family} is not a square family')
    if len(group) != const.ProblemConstants.GROUP_ORDER[family]:
        raise err.GenericError(f'symmetry group of {family} has {len(group)} elements')
    return group

def orbit(square: Square3, family: str) -> frozenset:
    """
    Every image of a square under the family's group
    """
    return frozenset(square.image(element) for element in symmetry_group(family))

def canonicalize(square: Square3, family: str, weak: bool = False) -> Square3:
    """
    Lexicographically least square of the orbit
    """
    if not satisfies(square, family, weak):
        raise err.ProvidedValueError(f'square does not satisfy the {family} predicate:\n{square}')
    return min(square.image(element) for element in symmetry_group(family))

def orbit_size(square: Square3, family: str) -> int:
    """
    Number of distinct images
    """
    return len(orbit(square, family))

def stabilizer_order(square: Square3, family: str) -> int:
    """
    Group elements fixing the square
    """
    return len(symmetry_group(family)) // orbit_size(square, family)
