# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
Verification tables (generating function against brute force) and their
CSV and OEIS b-file renderings.
"""
import csv
import io
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from iopcount.oracle.enumerate import enumerate_squares
from iopcount.ratfunc.gf import coefficients
from iopcount.squares.counting import count_gf
from iopcount.squares.instances import CountMode, ProblemId
from iopcount.util import constants as const
from iopcount.util import error as err
from iopcount.util import fileutil
from iopcount.util.config import BudgetConfig
from iopcount.util.generic import positive_int

__all__ = [
        'VerificationRow',
        'verification_table',
        'series_values',
        'format_csv',
        'write_csv',
        'format_bfile',
        'write_bfile',
        'oeis_sequence',
]

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class VerificationRow:
    """
    One t of a verification table
    """
    t: int
    gf_value: int
    oracle_value: int

    @property
    def match(self) -> bool:
        """
        True when both counts agree
        """
        return self.gf_value == self.oracle_value

def _problem(problem) -> ProblemId:
    if isinstance(problem, str):
        return ProblemId.from_key(problem)
    return problem

def series_values(problem, mode, terms: int) -> list:
    """
    Counts for t = 1..terms read off the generating function
    """
    terms = positive_int('terms', terms)
    return coefficients(count_gf(problem, mode), terms)[1:]

def verification_table(problem, mode='all', t_max: int = 20, jobs: int = 1,
                       config: BudgetConfig = None) -> list:
    """
    gf and oracle counts for t = 1..t_max, rows where both vanish left out.
    Oracle calls fan out over jobs threads; rows stay ordered by t.
    """
    problem = _problem(problem)
    mode = CountMode.parse(mode)
    config = config or BudgetConfig()
    t_max = positive_int('t_max', t_max)
    jobs = positive_int('jobs', jobs)
    config.check(problem.parameter, t_max)

    expected = series_values(problem, mode, t_max)

    def oracle(t):
        return enumerate_squares(problem.family, problem.parameter, t, mode, config)

    with ThreadPoolExecutor(max_workers=jobs) as executor:
        found = list(executor.map(oracle, range(1, t_max + 1)))

    rows = [VerificationRow(t, gf_value, oracle_value)
            for t, gf_value, oracle_value in zip(range(1, t_max + 1), expected, found)
            if gf_value or oracle_value]
    bad = [row.t for row in rows if not row.match]
    if bad:
        logger.warning('%s %s: mismatch at t=%s', problem.key, mode.value, bad)
    logger.debug('%s %s: %d rows verified up to t=%d', problem.key, mode.value, len(rows), t_max)
    return rows

def format_csv(rows) -> str:
    """
    t,gf,oracle,match lines with a header
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['t', 'gf', 'oracle', 'match'])
    for row in rows:
        writer.writerow([row.t, row.gf_value, row.oracle_value, 'yes' if row.match else 'no'])
    return buffer.getvalue()

def write_csv(rows, file_path: str):
    """
    Writes a verification table as CSV
    """
    fileutil.write_text(file_path, format_csv(rows))

def oeis_sequence(problem, mode='all', config: BudgetConfig = None) -> tuple:
    """
    (sequence id, offset) for a count, NotFoundError when unpublished
    """
    problem = _problem(problem)
    mode = CountMode.parse(mode)
    config = config or BudgetConfig()
    seq_id = const.OeisConstants.SEQUENCES.get((problem.key, mode.value))
    if seq_id is None:
        raise err.NotFoundError(f'no OEIS sequence recorded for {problem.key} {mode.value}')
    return seq_id, config.offset_for(seq_id)

def format_bfile(values, offset: int = 1) -> str:
    """
    OEIS b-file: one "n a(n)" line per value starting at n = offset
    """
    return ''.join(f'{index} {value}\n' for index, value in enumerate(values, start=offset))

def write_bfile(problem, mode, terms: int, file_path: str, config: BudgetConfig = None) -> str:
    """
    Writes the b-file of a published count and returns its sequence id
    """
    seq_id, offset = oeis_sequence(problem, mode, config)
    terms = positive_int('terms', terms)
    values = coefficients(count_gf(problem, mode), offset + terms - 1)[offset:]
    fileutil.write_text(file_path, format_bfile(values, offset))
    return seq_id
