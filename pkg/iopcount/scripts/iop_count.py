#!/usr/bin/python3
# -*-:python; coding:utf-8; -*-
# author: iopcount maintainers
# Counts 3x3 magic, semimagic and magilatin squares from their inside-out
# polytopes, and checks the counts against brute force.

import argparse
import json
import logging
import sys
from iopcount.ehrhart import intersection_poset
from iopcount.oracle import (format_bfile, format_csv, oeis_sequence, series_values,
                             verification_table)
from iopcount.polytope import denominator, inside_out_vertices, vertices
from iopcount.ratfunc import coefficients, format_constituent
from iopcount.squares import (count_gf, instance, period_report, quasipolynomial,
                              structural_checks)
from iopcount.util import constants as const
from iopcount.util import error as err
from iopcount.util import fileutil
from iopcount.util.color import Color, paint
from iopcount.util.config import BudgetConfig
from iopcount.util.generic import format_rational

def _positive(value: str) -> int:
    try:
        number = int(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f'{value!r} is not an integer') from exc
    if number < 1:
        raise argparse.ArgumentTypeError(f'{value} must be positive')
    return number

parser = argparse.ArgumentParser(prog='iop_count',
                                 description='Inside-out counting of 3x3 squares')
subparser = parser.add_subparsers(dest='cmd')
subparser.required = True

count_parser = subparser.add_parser('count', help='number of squares at one t')
series_parser = subparser.add_parser('series', help='first coefficients of the generating function')
quasi_parser = subparser.add_parser('quasipoly', help='constituents of the counting quasipolynomial')
geometry_parser = subparser.add_parser('geometry', help='polytopes, vertices and intersection posets')
verify_parser = subparser.add_parser('verify', help='generating function against brute force')
export_parser = subparser.add_parser('export', help='machine-readable dumps')
report_parser = subparser.add_parser('period-report', help='coefficient periods, strong and weak')

for sub in (count_parser, series_parser, quasi_parser, geometry_parser,
            verify_parser, export_parser, report_parser):
    sub.add_argument('problem_pos', nargs='?', choices=const.ProblemConstants.PROBLEM_KEYS,
                     metavar='problem')
    sub.add_argument('mode_pos', nargs='?', choices=const.ProblemConstants.MODE_KEYS,
                     metavar='mode')
    sub.add_argument('--problem', type=str, choices=const.ProblemConstants.PROBLEM_KEYS)
    sub.add_argument('--mode', type=str, choices=const.ProblemConstants.MODE_KEYS)
    sub.add_argument('--format', type=str, choices=('text', 'json', 'csv', 'bfile'), default='text')
    sub.add_argument('--out', type=str, required=False, default='',
                     help='write to this path instead of standard output')
    sub.add_argument('--budget', type=str, required=False, default='',
                     help='budget config file ([budget] and [oeis] sections)')
    sub.add_argument('--debug', action='store_true')

count_parser.add_argument('--t', type=_positive, required=True)
series_parser.add_argument('--terms', type=_positive, default=30)
verify_parser.add_argument('--t-max', type=_positive, default=20)
verify_parser.add_argument('--jobs', type=_positive, default=1)
export_parser.add_argument('--terms', type=_positive, default=60)

def _dump(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + '\n'

def _point(point) -> str:
    return '(' + ', '.join(format_rational(coord) for coord in point) + ')'

def _values_csv(values) -> str:
    return 't,value\n' + ''.join(f'{t},{value}\n' for t, value in enumerate(values, start=1))

def _bfile(problem, mode, terms, config) -> str:
    try:
        _, offset = oeis_sequence(problem, mode, config)
    except err.NotFoundError:
        offset = const.OeisConstants.DEFAULT_OFFSET
    values = coefficients(count_gf(problem, mode), offset + terms - 1)[offset:]
    return format_bfile(values, offset)

def _count(args, config) -> tuple:
    value = series_values(args.problem, args.mode, args.t)[-1]
    if args.format == 'json':
        return _dump({'problem': args.problem, 'mode': args.mode, 't': args.t, 'value': value}), 0
    return f'{value}\n', 0

def _series(args, config) -> tuple:
    values = series_values(args.problem, args.mode, args.terms)
    if args.format == 'json':
        return _dump({'problem': args.problem, 'mode': args.mode,
                      'gf': str(count_gf(args.problem, args.mode)), 'values': values}), 0
    if args.format == 'csv':
        return _values_csv(values), 0
    if args.format == 'bfile':
        return _bfile(args.problem, args.mode, args.terms, config), 0
    return ' '.join(str(value) for value in values) + '\n', 0

def _quasi_data(problem, mode) -> dict:
    quasi = quasipolynomial(problem, mode)
    return {
        'problem': problem,
        'mode': mode,
        'period': quasi.period,
        'degree': quasi.degree,
        'constituents': {str(quasi.residue(res)): [format_rational(c) for c in coeffs]
                         for res, coeffs in enumerate(quasi.constituents, start=1)},
        'principal_constant': format_rational(abs(quasi.principal[0])),
        'checks': structural_checks(problem, mode).to_json(),
    }

def _quasipoly(args, config) -> tuple:
    if args.format == 'json':
        return _dump(_quasi_data(args.problem, args.mode)), 0
    quasi = quasipolynomial(args.problem, args.mode)
    checks = structural_checks(args.problem, args.mode)
    lines = [f'{args.problem} {args.mode}: period {quasi.period}, degree {quasi.degree}']
    for res, coeffs in enumerate(quasi.constituents, start=1):
        lines.append(f't = {res % quasi.period} mod {quasi.period}: {format_constituent(coeffs)}')
    lines.append(f'principal constant: {format_rational(abs(quasi.principal[0]))}')
    lines.append(f'degree {checks.degree} (expected {checks.expected_degree}), '
                 f'constant leading coefficient: {"yes" if checks.constant_leading else "no"}, '
                 f'volume check: {checks.volume_matches}, '
                 f'period {checks.period} / denominator {checks.denominator}')
    return '\n'.join(lines) + '\n', 0

def _geometry(args, config) -> tuple:
    inst = instance(args.problem)
    faces = []
    lines = [f'{args.problem}: {len(inst.plan)} weighted face(s), '
             f'denominator {inst.denominator()}']
    for face in inst.plan:
        iop = face.iop
        poset = intersection_poset(iop)
        io_verts = inside_out_vertices(iop)
        faces.append({
            'name': face.name,
            'weight': face.weight,
            'sym_weight': face.sym_weight,
            'geometry': iop.to_json(),
            'inside_out_vertices': [[format_rational(c) for c in vert] for vert in io_verts],
            'denominator': denominator(io_verts),
            'poset': poset.to_json(),
        })
        lines.append(f'{face.name} (weight {face.weight}, symmetry weight {face.sym_weight})')
        lines.extend(f'  {line}' for line in iop.polytope.describe())
        lines.extend(f'  exclude {plane.name}: {plane.describe(iop.polytope.coords)}'
                     for plane in iop.arrangement)
        lines.append('  vertices: ' + ' '.join(_point(vert) for vert in vertices(iop.polytope)))
        lines.append('  inside-out vertices: ' + ' '.join(_point(vert) for vert in io_verts))
        lines.append(f'  denominator: {denominator(io_verts)}')
        lines.append(f'  poset ({len(poset.elements)} flats, closure isomorphic: '
                     f'{"yes" if poset.closure_isomorphic else "no"}):')
        for flat, value in zip(poset.elements, poset.moebius):
            lines.append(f'    codim {flat.codim}  {flat.label}  mu={value}')
    if args.format == 'json':
        return _dump({'problem': args.problem, 'denominator': inst.denominator(),
                      'faces': faces}), 0
    return '\n'.join(lines) + '\n', 0

def _verify(args, config) -> tuple:
    rows = verification_table(args.problem, args.mode, args.t_max, args.jobs, config)
    status = 0 if all(row.match for row in rows) else 1
    if args.format == 'csv':
        return format_csv(rows), status
    if args.format == 'json':
        return _dump([{'t': row.t, 'gf': row.gf_value, 'oracle': row.oracle_value,
                       'match': row.match} for row in rows]), status
    lines = ['t gf oracle match']
    lines.extend(f'{row.t} {row.gf_value} {row.oracle_value} {"ok" if row.match else "MISMATCH"}'
                 for row in rows)
    matched = sum(1 for row in rows if row.match)
    lines.append(f'{matched} of {len(rows)} rows matched')
    return '\n'.join(lines) + '\n', status

def _export(args, config) -> tuple:
    if args.format == 'bfile':
        return _bfile(args.problem, args.mode, args.terms, config), 0
    if args.format == 'csv':
        return _values_csv(series_values(args.problem, args.mode, args.terms)), 0
    data = _quasi_data(args.problem, args.mode)
    data['gf'] = count_gf(args.problem, args.mode).to_json()
    data['values'] = series_values(args.problem, args.mode, args.terms)
    return _dump(data), 0

def _period_report(args, config) -> tuple:
    report = period_report(args.problem, args.mode)
    if args.format == 'json':
        return _dump(report.to_json()), 0
    return '\n'.join(report.lines()) + '\n', 0

COMMANDS = {
    'count': _count,
    'series': _series,
    'quasipoly': _quasipoly,
    'geometry': _geometry,
    'verify': _verify,
    'export': _export,
    'period-report': _period_report,
}

def run(argv=None) -> int:
    """
    Parses arguments, runs one command and returns the exit status
    """
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    args.problem = args.problem or args.problem_pos
    args.mode = args.mode or args.mode_pos or 'all'
    if not args.problem:
        parser.print_usage(sys.stderr)
        print(f'{parser.prog}: error: a problem is required', file=sys.stderr)
        return 2

    logging.basicConfig(level=logging.DEBUG if args.debug else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        config = BudgetConfig.from_file(args.budget) if args.budget else BudgetConfig()
        output, status = COMMANDS[args.cmd](args, config)
        if args.out and output:
            fileutil.write_text(args.out, output)
        else:
            sys.stdout.write(output)
        if status:
            raise err.VerificationMismatchError(f'{args.problem} {args.mode}: gf and oracle disagree')
    except err.GenericError as exc:
        print(paint(Color.FAIL, str(exc), sys.stderr.isatty()), file=sys.stderr)
        return 1
    return 0

def main():
    """
    Run the main program. Callable via poetry or __main__
    """
    sys.exit(run())

if __name__ == '__main__':
    main()
