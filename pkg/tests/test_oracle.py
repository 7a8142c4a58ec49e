# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
oracle: square predicates, symmetry, brute-force counts and exports
"""
import pytest
from iopcount.oracle import (Square3, VerificationRow, canonicalize, enumerate_squares,
                             enumerate_weak, format_bfile, format_csv, oeis_sequence, orbit,
                             orbit_size, reduced_counts, reduced_counts_table, scan_squares,
                             series_values, stabilizer_order, symmetry_group,
                             verification_table, write_bfile, write_csv)
from iopcount.util import error as err
from iopcount.util.config import BudgetConfig
from iopcount.util.constants import OeisConstants

LO_SHU = Square3.from_rows(((2, 7, 6), (9, 5, 1), (4, 3, 8)))
CYCLIC = Square3.from_rows(((0, 1, 2), (1, 2, 0), (2, 0, 1)))

def test_square_predicates():
    assert LO_SHU.is_magic()
    assert LO_SHU.magic_sum() == 15
    assert LO_SHU.line_sums(diagonals=True) == {15}
    assert not CYCLIC.is_semimagic()
    assert CYCLIC.is_magilatin()
    assert not CYCLIC.is_weak_magic()
    assert CYCLIC.rows()[1] == (1, 2, 0)
    assert str(CYCLIC).splitlines()[0] == '  0   1   2'
    with pytest.raises(err.ProvidedValueError):
        Square3((1, 2, 3))

def test_symmetry_groups():
    assert len(symmetry_group('magic')) == 8
    assert len(symmetry_group('semimagic')) == 72
    assert symmetry_group('magilatin') == symmetry_group('semimagic')
    with pytest.raises(err.ProvidedValueError):
        symmetry_group('latin')

def test_canonical_forms():
    assert canonicalize(LO_SHU, 'magic') == LO_SHU
    assert orbit_size(LO_SHU, 'magic') == 8
    assert stabilizer_order(LO_SHU, 'magic') == 1
    assert len(orbit(LO_SHU, 'magic')) == 8
    assert orbit_size(CYCLIC, 'magilatin') == 12
    assert stabilizer_order(CYCLIC, 'magilatin') == 6
    rotated = LO_SHU.image((6, 3, 0, 7, 4, 1, 8, 5, 2))
    assert rotated != LO_SHU
    assert canonicalize(rotated, 'magic') == LO_SHU
    with pytest.raises(err.ProvidedValueError):
        canonicalize(CYCLIC, 'semimagic')
    assert canonicalize(Square3((1,) * 9), 'semimagic', weak=True) == Square3((1,) * 9)

@pytest.mark.parametrize('family,parameter,t,mode,expected', [
    ('magic', 'cubic', 10, 'all', 8),
    ('magic', 'cubic', 12, 'sym', 5),
    ('magic', 'affine', 15, 'all', 8),
    ('magilatin', 'affine', 9, 'all', 72),
    ('semimagic', 'affine', 14, 'all', 0),
    ('semimagic', 'cubic', 12, 'all', 936),
    ('magilatin', 'cubic', 4, 'sym', 1),
    ('semimagic', 'cubic', 9, 'reduced', 144),
    ('semimagic', 'cubic', 8, 'reduced-sym', 1),
])
def test_enumerate_examples(family, parameter, t, mode, expected):
    assert enumerate_squares(family, parameter, t, mode) == expected

def test_reduced_counts():
    assert reduced_counts('semimagic', 'cubic', 9) == (144, 2)
    assert reduced_counts('magilatin', 'affine', 6) == (60, 3)
    assert reduced_counts('magilatin', 'affine', 9) == (480, 16)
    table = reduced_counts_table('semimagic', 'cubic', 9)
    assert table[-1] == (9, 144, 2)
    assert [row[0] for row in table] == list(range(1, 10))

def test_magic_table():
    values = [enumerate_squares('magic', 'cubic', t) for t in range(10, 25)]
    assert values == [8, 16, 40, 64, 96, 128, 184, 240, 320, 400, 504, 608, 744, 880, 1056]
    assert enumerate_squares('magic', 'affine', 45) == 304
    assert enumerate_squares('magic', 'affine', 46) == 0

@pytest.mark.parametrize('family', ['magic', 'semimagic', 'magilatin'])
@pytest.mark.parametrize('mode', ['all', 'sym', 'reduced', 'reduced-sym'])
def test_scan_agrees_with_enumeration(small_budget, family, mode):
    for t in range(1, 9):
        assert scan_squares(family, 'cubic', t, mode, small_budget) == \
            enumerate_squares(family, 'cubic', t, mode, small_budget)
    for t in range(1, 11):
        assert scan_squares(family, 'affine', t, mode, small_budget) == \
            enumerate_squares(family, 'affine', t, mode, small_budget)

def test_semimagic_orbits_are_full():
    for t in range(1, 15):
        assert enumerate_squares('semimagic', 'cubic', t, 'all') == \
            72 * enumerate_squares('semimagic', 'cubic', t, 'sym')

def _weak_semimagic_cubic(t):
    return (3 * t**5 - 15 * t**4 + 35 * t**3 - 45 * t**2 + 32 * t - 10) // 10

def _weak_semimagic_affine(t):
    return (t**4 - 6 * t**3 + 15 * t**2 - 18 * t + 8) // 8

def _weak_magic_cubic(t):
    if t % 2:
        return (t - 1) * (t * t - 2 * t + 3) // 6
    return (t - 1) * (t * t - 2 * t + 6) // 6

def _weak_magic_affine(t):
    return (2 * t * t - 6 * t + 9) // 9 if t % 3 == 0 else 0

def test_weak_counts(small_budget):
    for t in range(1, 13):
        assert enumerate_weak('semimagic', 'cubic', t, small_budget) == _weak_semimagic_cubic(t)
        affine = _weak_semimagic_affine(t)
        assert enumerate_weak('semimagic', 'affine', t, small_budget) == affine
        assert enumerate_weak('magilatin', 'affine', t, small_budget) == affine
        assert enumerate_weak('magic', 'cubic', t, small_budget) == _weak_magic_cubic(t)
    for t in range(1, 21):
        assert enumerate_weak('magic', 'affine', t, small_budget) == _weak_magic_affine(t)

@pytest.mark.slow
def test_weak_counts_long():
    for t in range(13, 19):
        assert enumerate_weak('semimagic', 'cubic', t) == _weak_semimagic_cubic(t)
        assert enumerate_weak('magilatin', 'cubic', t) == _weak_semimagic_cubic(t)
        assert enumerate_weak('magic', 'cubic', t) == _weak_magic_cubic(t)
    for t in range(13, 21):
        assert enumerate_weak('semimagic', 'affine', t) == _weak_semimagic_affine(t)
    for t in range(21, 31):
        assert enumerate_weak('magic', 'affine', t) == _weak_magic_affine(t)

def test_budget_limits(small_budget):
    with pytest.raises(err.BudgetExceededError):
        enumerate_squares('magic', 'cubic', 31, config=small_budget)
    with pytest.raises(err.BudgetExceededError):
        scan_squares('magic', 'cubic', 11, config=small_budget)
    with pytest.raises(err.BudgetExceededError):
        enumerate_weak('semimagic', 'affine', 21, small_budget)
    with pytest.raises(err.BudgetExceededError):
        reduced_counts_table('magic', 'affine', 31, small_budget)
    with pytest.raises(err.ProvidedValueError):
        enumerate_squares('latin', 'cubic', 3)
    with pytest.raises(err.ProvidedValueError):
        enumerate_squares('magic', 'cubic', 0)

def test_bfile_and_csv(tmp_path):
    assert format_bfile([1, 2, 3], 0) == '0 1\n1 2\n2 3\n'
    rows = [VerificationRow(4, 12, 12), VerificationRow(5, 48, 47)]
    assert not rows[1].match
    assert format_csv(rows) == 't,gf,oracle,match\n4,12,12,yes\n5,48,47,no\n'
    target = tmp_path / 'table.csv'
    write_csv(rows, str(target))
    assert target.read_text(encoding='utf-8').startswith('t,gf,oracle,match\n')

def test_oeis_lookup():
    assert oeis_sequence('magic-cubic') == ('A108576', 1)
    assert oeis_sequence('semimagic-cubic', 'sym',
                         BudgetConfig(oeis_offsets={'A173723': 0})) == ('A173723', 0)
    assert oeis_sequence('magic-affine', 'reduced') == ('A174256', 1)
    assert oeis_sequence('magic-affine', 'reduced-sym')[0] == oeis_sequence('magic-cubic', 'reduced-sym')[0]

def test_oeis_lookup_unpublished(monkeypatch):
    monkeypatch.delitem(OeisConstants.SEQUENCES, ('magilatin-affine', 'reduced'))
    with pytest.raises(err.NotFoundError):
        oeis_sequence('magilatin-affine', 'reduced')

def test_write_bfile(tmp_path):
    path = tmp_path / 'b108576.txt'
    assert write_bfile('magic-cubic', 'all', 12, str(path)) == 'A108576'
    lines = path.read_text(encoding='utf-8').splitlines()
    assert len(lines) == 12
    assert lines[0] == '1 0'
    assert lines[9] == '10 8'
    assert series_values('magic-cubic', 'all', 12)[-3:] == [8, 16, 40]

def test_verification_table():
    rows = verification_table('magilatin-cubic', 'all', 15, jobs=4)
    assert len(rows) == 12
    assert rows[0].t == 4
    assert [row.gf_value for row in rows][:3] == [12, 48, 120]
    assert all(row.match for row in rows)
    assert rows == verification_table('magilatin-cubic', 'all', 15, jobs=1)

@pytest.mark.slow
@pytest.mark.parametrize('key', ['magic-cubic', 'magic-affine', 'semimagic-cubic',
                                 'semimagic-affine', 'magilatin-cubic', 'magilatin-affine'])
@pytest.mark.parametrize('mode', ['all', 'sym', 'reduced', 'reduced-sym'])
def test_oracle_equivalence(key, mode):
    t_max = 60 if key.startswith('magic') else 40
    rows = verification_table(key, mode, t_max, jobs=4)
    assert all(row.match for row in rows)
