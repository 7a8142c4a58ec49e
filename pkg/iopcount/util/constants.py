# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
All constants
"""
__all__ = [
        'ErrorConstants',
        'ProblemConstants',
        'BudgetConstants',
        'OeisConstants',
]

# pylint: disable=too-few-public-methods
class ErrorConstants:
    """
    All error codes as constants.

    9000-9099: Generic errors, this applies to all classes
    9100-9199: Geometry errors (polytopes, lattice counting, posets)
    9200-9299: Series errors (generating functions, quasipolynomials)
    9300-9399: Oracle errors (enumeration budgets, verification)
    """
    # General errors
    ERR_GENERAL = 9000
    ERR_PROVIDED_VALUE = 9001
    ERR_MISSING_VALUE = 9003
    ERR_CONFIGURATION = 9004
    ERR_NOTFOUND = 9005

    # Geometry errors
    GEOM_ERR_UNBOUNDED = 9100

    # Series errors
    SERIES_ERR_FIT = 9200
    SERIES_ERR_FORM = 9201
    SERIES_ERR_CONSTITUENT = 9202
    SERIES_ERR_ROUTE = 9203

    # Oracle errors
    ORACLE_ERR_BUDGET = 9300
    ORACLE_ERR_MISMATCH = 9301

# pylint: disable=too-few-public-methods
class ProblemConstants:
    """
    Stable string keys for the six counting problems and the four count
    modes, plus the symmetry multipliers attached to them.
    """
    FAMILIES = ('magic', 'semimagic', 'magilatin')
    PARAMETERS = ('cubic', 'affine')
    PROBLEM_KEYS = (
        'magic-cubic',
        'magic-affine',
        'semimagic-cubic',
        'semimagic-affine',
        'magilatin-cubic',
        'magilatin-affine',
    )
    MODE_KEYS = ('all', 'sym', 'reduced', 'reduced-sym')

    # order of the symmetry group acting on each family
    GROUP_ORDER = {
        'magic': 8,
        'semimagic': 72,
        'magilatin': 72,
    }

    # magilatin facet multipliers: 72 / |stabilizer|
    FACET_WEIGHT = 36
    EDGE_WEIGHT = 12

    # the S_7 correction term is x^10 / ((1 - x^3)(1 - x^7))
    S7_SHIFT = 10
    S7_FACTORS = (3, 7)
    S7_PERIOD = 21
    S7_EXTRA_RESIDUES = (10, 13, 16, 17, 19, 20)

# pylint: disable=too-few-public-methods
class BudgetConstants:
    """
    Default brute-force budgets. These can be overridden by a config file.
    """
    CUBIC_T_MAX = 60
    AFFINE_T_MAX = 60
    SCAN_T_MAX = 15
    WEAK_T_MAX = 40

# pylint: disable=too-few-public-methods
class OeisConstants:
    """
    OEIS sequence ids per (problem, mode). The default b-file offset is 1
    for every sequence; the [oeis] config section overrides it per id.
    """
    DEFAULT_OFFSET = 1
    SEQUENCES = {
        ('magic-cubic', 'all'): 'A108576',
        ('magic-cubic', 'sym'): 'A108577',
        ('magic-cubic', 'reduced'): 'A174256',
        ('magic-cubic', 'reduced-sym'): 'A174257',
        ('magic-affine', 'all'): 'A108578',
        ('magic-affine', 'sym'): 'A108579',
        # reduced magic squares are the same for both parameters
        ('magic-affine', 'reduced'): 'A174256',
        ('magic-affine', 'reduced-sym'): 'A174257',
        ('semimagic-cubic', 'all'): 'A173546',
        ('semimagic-cubic', 'sym'): 'A173723',
        ('semimagic-cubic', 'reduced'): 'A173727',
        ('semimagic-cubic', 'reduced-sym'): 'A173724',
        ('semimagic-affine', 'all'): 'A173547',
        ('semimagic-affine', 'sym'): 'A173725',
        ('semimagic-affine', 'reduced'): 'A173728',
        ('semimagic-affine', 'reduced-sym'): 'A173726',
        ('magilatin-cubic', 'all'): 'A173548',
        ('magilatin-cubic', 'sym'): 'A173729',
        ('magilatin-cubic', 'reduced'): 'A174018',
        ('magilatin-cubic', 'reduced-sym'): 'A174019',
        ('magilatin-affine', 'all'): 'A173549',
        ('magilatin-affine', 'sym'): 'A173730',
        ('magilatin-affine', 'reduced'): 'A174020',
        ('magilatin-affine', 'reduced-sym'): 'A174021',
    }
