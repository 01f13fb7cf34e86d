"""Command line interface, installed as ``mapoly``.

Subcommands write JSON (sorted keys) or text to stdout, log messages go to
stderr. Exit code 0 means success, 1 bad input or usage and 2 an internal
invariant violation.
"""

import argparse
import json
import logging
import pathlib
import sys

from . import __version__, githash
from .ansatz import axis_lengths, h_max, kh_feasible, failed_relation, build_template
from .catalog import builtin_catalog
from .classify import check_gates, classify, decide, emit_report, JSON, TEXT
from .equivalence import enumerate_smooth_reflexive_2d
from .errors import InvariantViolation, MissingBaseVertex
from .formats import PolytopeFile, PolynomialFile
from .monge_ampere import verify_solution, SYMBOLIC, SAMPLED
from .preferences import Preferences

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INVARIANT = 2


class _UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    """ Reports usage errors as exceptions so ``main`` can map them to exit
    code 1. """

    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def _setup_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    handler = logging.StreamHandler(stream=sys.stderr)
    handler.setFormatter(logging.Formatter('%(asctime)s  %(levelname)s  %(message)s'))
    root = logging.getLogger()
    root.setLevel(level)
    root.addHandler(handler)
    return handler


def _dump(data):
    return json.dumps(data, sort_keys=True, indent=2) + '\n'


def _preferences(args):
    prefs = Preferences.load(args.config)
    for attribute in ('max_degree', 'trials', 'seed', 'box'):
        value = getattr(args, attribute, None)
        if value is not None:
            setattr(prefs, attribute, value)
    return prefs


def _check(args, prefs, out):
    polytope = PolytopeFile.load(args.file)
    data = {'polytope': polytope.to_json(), 'gates': check_gates(polytope)}
    try:
        data['k'] = axis_lengths(polytope)
        data['h_max'] = h_max(polytope)
        data['profiles'] = [p.to_json() for p in kh_feasible(polytope)]
        data['failed_relation'] = failed_relation(polytope)
    except MissingBaseVertex as e:
        log.warning(str(e))
        data.update(k=None, h_max=None, profiles=[], failed_relation=None)
    out.write(_dump(data))


def _verify(args, prefs, out):
    polynomial = PolynomialFile.load(args.file)
    verification = verify_solution(polynomial, args.mode, prefs.trials, prefs.seed)
    out.write(_dump(verification.to_json()))


def _obstruct(args, prefs, out):
    polytope = PolytopeFile.load(args.file)
    discrepancies = []
    verdict = decide(polytope, prefs, discrepancies=discrepancies, label=str(args.file))
    data = {'verdict': verdict.to_json(), 'max_degree': prefs.max_degree, 'discrepancies': discrepancies}
    profiles = kh_feasible(polytope)
    if profiles:
        data['template'] = build_template(polytope, profiles[0]).to_json()
    out.write(_dump(data))


def _classify(args, prefs, out):
    report = classify(args.dim, prefs)
    content = emit_report(report, args.format, args.timings)
    if args.out:
        path = pathlib.Path(args.out)
        log.info('Writing report to {}'.format(path))
        path.write_bytes(content)
    else:
        out.write(content.decode('utf-8'))
    if args.csv:
        report.export_entries(args.csv)


def _catalog(args, prefs, out):
    entries = []
    for e in builtin_catalog(args.dim):
        data = e.to_json()
        data['k'] = axis_lengths(e.polytope)
        data['h_max'] = h_max(e.polytope)
        data['integrity'] = e.integrity()
        entries.append(data)
    out.write(_dump(entries))


def _enumerate2d(args, prefs, out):
    enumeration = enumerate_smooth_reflexive_2d(prefs.box)
    out.write(_dump({
        'box': prefs.box,
        'classes': [p.to_json() for p in enumeration.classes],
        'barycenter_zero': [p.to_json() for p in enumeration.barycentric],
    }))


def _parser():
    parser = _Parser(prog='mapoly', description='Exact classification of polytopes carrying polynomial '
                                                'solutions of a Monge-Ampere equation.')
    parser.add_argument('--version', action='version',
                        version='mapoly {} (git hash {})'.format(__version__, githash()))
    parser.add_argument('-v', '--verbose', action='count', default=0, help='More log output, repeat for debug')
    parser.add_argument('--config', help='Preferences ini file')
    commands = parser.add_subparsers(dest='command', parser_class=_Parser)
    commands.required = True

    p = commands.add_parser('check', help='Geometric gates and edge relations of a polytope file')
    p.add_argument('file')
    p.set_defaults(handler=_check)

    p = commands.add_parser('verify', help='Check whether a polynomial solves the Monge-Ampere identity')
    p.add_argument('file')
    p.add_argument('--mode', choices=[SYMBOLIC, SAMPLED], default=SYMBOLIC)
    p.add_argument('--trials', type=int)
    p.add_argument('--seed', type=int)
    p.set_defaults(handler=_verify)

    p = commands.add_parser('obstruct', help='Run the coefficient matching engine on a polytope file')
    p.add_argument('file')
    p.add_argument('--max-degree', dest='max_degree', type=int)
    p.set_defaults(handler=_obstruct)

    p = commands.add_parser('classify', help='Classify all candidates of a dimension')
    p.add_argument('--dim', type=int, required=True)
    p.add_argument('--format', choices=[JSON, TEXT], default=JSON)
    p.add_argument('--out', help='Write the report to this file instead of stdout')
    p.add_argument('--csv', help='Additionally export one line per candidate as CSV')
    p.add_argument('--timings', action='store_true', help='Include wall clock seconds per catalog entry')
    p.set_defaults(handler=_classify)

    p = commands.add_parser('catalog', help='List the built-in polytopes of a dimension')
    p.add_argument('--dim', type=int, required=True)
    p.set_defaults(handler=_catalog)

    p = commands.add_parser('enumerate2d', help='Enumerate smooth reflexive polygons')
    p.add_argument('--box', type=int)
    p.set_defaults(handler=_enumerate2d)
    return parser


def main(argv=None, out=None):
    """ Entry point of the ``mapoly`` console script.

    :param argv: Arguments without the program name, ``sys.argv[1:]`` when
           omitted.
    :param out: Text stream receiving the output, stdout when omitted.
    :return: The exit code.
    """
    if out is None:
        out = sys.stdout
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        sys.stderr.write('mapoly: error: {}\n'.format(e))
        return EXIT_INPUT
    handler = _setup_logging(args.verbose)
    try:
        prefs = _preferences(args)
        args.handler(args, prefs, out)
    except InvariantViolation:
        log.exception('Internal invariant violated')
        return EXIT_INVARIANT
    except (ValueError, OSError) as e:
        log.error(str(e))
        return EXIT_INPUT
    finally:
        logging.getLogger().removeHandler(handler)
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
