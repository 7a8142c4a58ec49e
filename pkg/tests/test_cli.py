# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
"""
iop_count command line
"""
import json
from iopcount.scripts.iop_count import run
from iopcount.util import constants as const

def test_count(capsys):
    assert run(['count', 'semimagic-cubic', 'all', '--t', '12']) == 0
    assert capsys.readouterr().out == '936\n'
    assert run(['count', '--problem', 'magic-cubic', '--mode', 'sym', '--t', '12']) == 0
    assert capsys.readouterr().out == '5\n'

def test_usage_errors(capsys):
    assert run(['count', 'latin-cubic', '--t', '3']) == 2
    assert run(['count', 'magic-cubic']) == 2
    assert run(['count', 'magic-cubic', '--t', '0']) == 2
    assert run(['count', '--t', '3']) == 2
    assert 'a problem is required' in capsys.readouterr().err

def test_quasipoly(capsys):
    assert run(['quasipoly', 'magic-cubic']) == 0
    out = capsys.readouterr().out
    assert out.startswith('magic-cubic all: period 12, degree 3')
    assert 't = 0 mod 12: 1/6*t^3 - 8/3*t^2 + 38/3*t - 16' in out
    assert 'principal constant: 16' in out

def test_series_formats(capsys):
    assert run(['series', 'magic-cubic', '--terms', '11', '--format', 'csv']) == 0
    assert capsys.readouterr().out.splitlines()[-1] == '11,16'
    assert run(['series', 'magic-cubic', '--terms', '12', '--format', 'json']) == 0
    first = capsys.readouterr().out
    assert run(['series', 'magic-cubic', '--terms', '12', '--format', 'json']) == 0
    assert capsys.readouterr().out == first
    assert json.loads(first)['values'][-3:] == [8, 16, 40]

def test_verify(capsys):
    assert run(['verify', 'magilatin-cubic', 'all', '--t-max', '15', '--jobs', '2']) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1] == '12 of 12 rows matched'
    assert '4 12 12 ok' in out

def test_verify_mismatch(capsys, monkeypatch):
    monkeypatch.setattr('iopcount.oracle.export.enumerate_squares', lambda *args: 0)
    assert run(['verify', 'magic-cubic', '--t-max', '12', '--format', 'csv']) == 1
    captured = capsys.readouterr()
    assert '10,8,0,no' in captured.out
    assert 'disagree' in captured.err

def test_budget_exceeded(capsys, tmp_path):
    config = tmp_path / 'budget.ini'
    config.write_text('[budget]\ncubic_t_max = 10\n', encoding='utf-8')
    assert run(['verify', 'magic-cubic', '--t-max', '12', '--budget', str(config)]) == 1
    assert 'budget' in capsys.readouterr().err

def test_export_bfile(capsys, tmp_path):
    target = tmp_path / 'b108576.txt'
    assert run(['export', 'magic-cubic', '--format', 'bfile', '--terms', '12',
                '--out', str(target)]) == 0
    assert capsys.readouterr().out == ''
    assert target.read_text(encoding='utf-8').splitlines()[9] == '10 8'

def test_export_bfile_unpublished(capsys, tmp_path, monkeypatch):
    monkeypatch.delitem(const.OeisConstants.SEQUENCES, ('magic-cubic', 'all'))
    target = tmp_path / 'magic-cubic.txt'
    assert run(['export', 'magic-cubic', '--format', 'bfile', '--terms', '12',
                '--out', str(target)]) == 0
    assert target.read_text(encoding='utf-8').splitlines()[9] == '10 8'
    assert run(['export', 'magic-cubic', '--format', 'bfile', '--terms', '12']) == 0
    assert capsys.readouterr().out.splitlines()[9] == '10 8'

def test_export_json(capsys):
    assert run(['export', 'magic-cubic', '--format', 'json', '--terms', '12']) == 0
    data = json.loads(capsys.readouterr().out)
    assert data['period'] == 12
    assert data['gf']['denom_factors'] == [1, 1, 4, 6]
    assert data['constituents']['12'] == ['-16', '38/3', '-8/3', '1/6']

def test_geometry(capsys):
    assert run(['geometry', 'magic-cubic', '--format', 'json']) == 0
    data = json.loads(capsys.readouterr().out)
    assert data['denominator'] == 12
    assert data['faces'][0]['name'] == 'P_c'
    assert data['faces'][0]['weight'] == 8
    assert run(['geometry', 'magic-cubic']) == 0
    assert capsys.readouterr().out.startswith('magic-cubic: 1 weighted face(s), denominator 12')

def test_period_report(capsys):
    assert run(['period-report', 'magic-cubic', '--format', 'json']) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data['period'], data['denominator']) == (12, 12)
