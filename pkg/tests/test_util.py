# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
util: errors, helpers, exact linear algebra, config and output helpers
"""
from fractions import Fraction
import pytest
from iopcount.util import error as err
from iopcount.util import fileutil, linalg
from iopcount.util.color import Color, paint
from iopcount.util.config import BudgetConfig
from iopcount.util.constants import ErrorConstants
from iopcount.util.generic import (divisors, format_rational, lcm_of, positive_int,
                                   rational_pair, to_fraction)

def test_error_codes_and_text():
    exc = err.BudgetExceededError('budget: t=99')
    assert exc.fault_code == ErrorConstants.ORACLE_ERR_BUDGET
    assert str(exc) == 'budget: t=99'
    assert isinstance(exc, err.GenericError)
    assert err.SeriesFitError.fault_code == ErrorConstants.SERIES_ERR_FIT

def test_format_rational():
    assert format_rational(Fraction(3, 10)) == '3/10'
    assert format_rational(Fraction(-74, 35)) == '-74/35'
    assert format_rational(Fraction(8, 4)) == '2'
    assert rational_pair(Fraction(7, 2)) == [7, 2]

def test_to_fraction_refuses_floats():
    assert to_fraction('7/2') == Fraction(7, 2)
    assert to_fraction(3) == Fraction(3)
    with pytest.raises(err.ProvidedValueError):
        to_fraction(0.5)
    with pytest.raises(err.ProvidedValueError):
        to_fraction('seven')

@pytest.mark.parametrize('value', [0, -3, True, '4', None])
def test_positive_int_rejects(value):
    with pytest.raises(err.ProvidedValueError):
        positive_int('t', value)

def test_divisors_and_lcm():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert lcm_of([4, 6, 5]) == 60
    assert lcm_of([]) == 1

def test_solve_unique_and_singular():
    assert linalg.solve_unique([[2, 1], [1, 3]], [3, 5]) == (Fraction(4, 5), Fraction(7, 5))
    assert linalg.solve_unique([[1, 2], [2, 4]], [1, 2]) is None
    assert linalg.solve_unique([[1, 0], [0, 1], [1, 1]], [1, 1, 2]) == (1, 1)
    assert linalg.solve_unique([[1, 0], [0, 1], [1, 1]], [1, 1, 3]) is None

def test_domain_matrix():
    matrix = linalg.to_domain_matrix([[Fraction(1, 2), 1], ['2/3', 0]])
    assert matrix.shape == (2, 2)
    assert matrix.to_Matrix().tolist()[1][0].q == 3

def test_rref_and_rank():
    rows, pivots = linalg.rref([[2, 4, 6], [1, 2, 4]])
    assert pivots == [0, 2]
    assert rows == [[1, 2, 0], [0, 0, 1]]
    assert linalg.rank([[1, 1], [2, 2]]) == 1

def test_null_vector():
    vector = linalg.null_vector([[1, -2]], 2)
    assert vector == (Fraction(2), Fraction(1))
    assert linalg.null_vector([[1, 0, 0]], 3) is None

def test_integer_row():
    assert linalg.integer_row([Fraction(1, 2), Fraction(1, 3), 1]) == (3, 2, 6)

def test_budget_defaults():
    config = BudgetConfig()
    assert config.limit_for('cubic') == 60
    assert config.limit_for('affine') == 60
    assert config.scan_t_max == 15
    assert config.weak_t_max == 40
    assert config.offset_for('A108576') == 1

def test_budget_from_file(tmp_path):
    path = tmp_path / 'budget.ini'
    path.write_text('[budget]\ncubic_t_max = 12\n\n[oeis]\nA173546 = 0\n', encoding='utf-8')
    config = BudgetConfig.from_file(str(path))
    assert config.cubic_t_max == 12
    assert config.affine_t_max == 60
    assert config.offset_for('A173546') == 0
    with pytest.raises(err.BudgetExceededError, match='budget'):
        config.check('cubic', 13)
    config.check('cubic', 12)

@pytest.mark.parametrize('content', [
    '[budget]\ncubic_t_max = lots\n',
    '[budget]\nquartic_t_max = 3\n',
    '[budget]\nscan_t_max = 0\n',
    '[oeis]\nA000001 = 1\n',
    'no section header\n',
])
def test_budget_file_errors(tmp_path, content):
    path = tmp_path / 'budget.ini'
    path.write_text(content, encoding='utf-8')
    with pytest.raises(err.ConfigurationError):
        BudgetConfig.from_file(str(path))

def test_budget_missing_file(tmp_path):
    with pytest.raises(err.ConfigurationError):
        BudgetConfig.from_file(str(tmp_path / 'absent.ini'))

def test_write_text_creates_parents(tmp_path):
    target = tmp_path / 'out' / 'nested' / 'table.csv'
    fileutil.write_text(str(target), 't,value\n1,0\n')
    assert target.read_text(encoding='utf-8') == 't,value\n1,0\n'
    assert not (tmp_path / 'out' / 'nested' / 'table.csv.part').exists()

def test_paint_plain():
    assert paint(Color.FAIL, 'broken', enabled=False) == '[FAIL] broken'
    assert paint(Color.INFO, 'ok').endswith('ok')
