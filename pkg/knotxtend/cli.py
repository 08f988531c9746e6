# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Command line: knotxtend invariants|enumerate|certify|simplify
# Author: knotxtend developers
#
# License: BSD 3 clause

import argparse
import os
import sys

from . import __version__
from ._base import FAIL
from .conjecture import TESTS, certify
from .corpus import Corpus, Enumerator
from .diagram import parse_dt, parse_gauss, basic_stats
from .file_io import (write_codes, certificate_to_json, certificate_manifest,
                      write_manifest, diagram_digest, format_code)
from .file_io.json_io import dumps
from .invariants import invariant_bundle, alexander, determinant
from .moves import SimplifyPolicy, simplify
from .utils.errors import (KnotxtendError, SizeCap, MalformedCode,
                           NonRealizable)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_SIZE_CAP = 3
EXIT_DOMAIN = 4

# unreadable input; other KnotxtendErrors are domain errors
_INPUT_ERRORS = (MalformedCode, NonRealizable)


def _add_input_args(p):
    p.add_argument('files', nargs='*',
                   help='Code files (.dt, .gauss, .json) or directories.')
    p.add_argument('--dt', action='append', default=[],
                   help='DT code, e.g. "4 6 2"; may be repeated.')
    p.add_argument('--gauss', action='append', default=[],
                   help='Signed Gauss code; may be repeated.')
    p.add_argument('--json', action='append', default=[],
                   help='JSON diagram file; may be repeated.')


def _add_enumeration_args(p):
    p.add_argument('--max-crossings', type=int, default=None,
                   help='Largest crossing number to enumerate (<= 10).')
    p.add_argument('--min-crossings', type=int, default=3)
    p.add_argument('--genus', type=int, default=None)
    p.add_argument('--sigma', type=int, default=None,
                   help='Absolute signature filter.')
    p.add_argument('--generating', action='store_true',
                   help='Only generator diagrams.')
    p.add_argument('--special', action='store_true',
                   help='Only special diagrams.')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='knotxtend',
        description='Knot diagram invariants, moves and certificates.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--jobs', type=int, default=1,
                        help='Parallel workers; -1 uses all CPUs.')
    common.add_argument('--verbose', type=int, default=0)
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('invariants', parents=[common],
                       help='Invariants of each diagram.')
    _add_input_args(p)
    p.add_argument('--all', action='store_true',
                   help='Full bundle: Jones, skein, Alexander, det, mwf,'
                        ' v2 and signature.')
    p.add_argument('--cap', type=int, default=20)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser('enumerate', parents=[common],
                       help='Prime alternating knots up to a crossing'
                            ' number.')
    _add_enumeration_args(p)
    p.add_argument('--out', default=None,
                   help='Write "name: code" lines to this file.')
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser('certify', parents=[common],
                       help='Run a certificate test over a corpus.')
    _add_input_args(p)
    _add_enumeration_args(p)
    p.add_argument('--test', required=True, choices=sorted(TESTS))
    p.add_argument('--out', default=None,
                   help='Write a CSV manifest to this file.')
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser('simplify', parents=[common],
                       help='Simplify each diagram.')
    _add_input_args(p)
    p.add_argument('--policy', default='wave',
                   choices=['reidemeister', 'wave'])
    p.add_argument('--budget', type=int, default=200)
    p.add_argument('--explore', action='store_true')
    p.set_defaults(func=cmd_simplify)
    return parser


def read_inputs(args, check=False):
    """Corpus of the diagrams named on the command line, in argument
    order: --dt, --gauss, --json, then files."""
    corpus = Corpus(name='command line')
    for kind, parser, codes in (('dt', parse_dt, args.dt),
                                ('gauss', parse_gauss, args.gauss)):
        for i, code in enumerate(codes, 1):
            try:
                diagram = parser(code)
            except KnotxtendError as e:
                raise type(e)('line 1: %s' % e)
            corpus.add('%s%d' % (kind, i), diagram, source='--%s' % kind,
                       check=check)
    for path in args.json:
        corpus.extend_from_file(path, 'json', check)
    for path in args.files:
        part = (Corpus.from_directory(path, check=False)
                if os.path.isdir(path)
                else Corpus.from_file(path, check=False))
        for e in part:
            corpus.add(e.name, e.diagram, e.source, e.code, check=check)
    return corpus


def _enumerator(args):
    return Enumerator(max_crossings=args.max_crossings,
                      min_crossings=args.min_crossings,
                      genus=args.genus,
                      generating=True if args.generating else None,
                      special=True if args.special else None,
                      sigma=args.sigma,
                      n_jobs=args.jobs,
                      verbose=args.verbose)


def _emit(record, out):
    out.write(dumps(record))
    out.write('\n')


def _code(diagram):
    try:
        return format_code(diagram)
    except KnotxtendError:
        return None


def cmd_invariants(args, out):
    for e in read_inputs(args):
        if args.all:
            values = invariant_bundle(e.diagram, cap=args.cap)
        else:
            values = basic_stats(e.diagram)
            values['alexander'] = str(alexander(e.diagram, cap=args.cap))
            values['determinant'] = determinant(e.diagram, cap=args.cap)
        _emit({'name': e.name, 'code': e.code,
               'digest': diagram_digest(e.diagram),
               'invariants': values}, out)
    return EXIT_OK


def cmd_enumerate(args, out):
    if args.max_crossings is None:
        args.max_crossings = 10
    enum = _enumerator(args)
    corpus = enum.run()
    for e in corpus:
        _emit({'name': e.name, 'code': e.code,
               'crossings': e.diagram.num_crossings}, out)
    for a, b in corpus.collisions:
        sys.stderr.write('warning: %s and %s share a knot key\n' % (a, b))
    if args.out is not None:
        write_codes([(e.name, e.diagram) for e in corpus], args.out)
    return EXIT_OK


def cmd_certify(args, out):
    if args.files or args.dt or args.gauss or args.json:
        corpus = read_inputs(args)
    elif args.max_crossings is not None:
        corpus = _enumerator(args).run()
    else:
        raise ValueError('Nothing to certify: give code files, codes'
                         ' or --max-crossings.')
    certs = certify(corpus.diagrams, args.test, n_jobs=args.jobs)
    for e, cert in zip(corpus, certs):
        out.write(certificate_to_json(cert, e.name, e.code))
        out.write('\n')
    if args.out is not None:
        write_manifest(certificate_manifest(corpus.names, corpus.codes,
                                            certs), args.out)
    failed = any(cert.verdict == FAIL for cert in certs)
    return EXIT_FAILED if failed else EXIT_OK


def cmd_simplify(args, out):
    policy = SimplifyPolicy(mode=args.policy, budget=args.budget,
                            explore=args.explore, verbose=args.verbose)
    for e in read_inputs(args):
        d, trace = simplify(e.diagram, policy)
        _emit({'name': e.name, 'input': e.code, 'code': _code(d),
               'crossings': d.num_crossings,
               'trace': trace.to_dict()}, out)
    return EXIT_OK


def main(argv=None, out=None):
    """Run the command line; returns the exit code.

    0 on success, 1 when a certificate failed, 2 on unreadable input or
    bad usage, 3 when a size cap was hit and 4 when a diagram is outside
    the domain of the requested computation.
    """
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except SizeCap as e:
        sys.stderr.write('%s\n' % e)
        return EXIT_SIZE_CAP
    except _INPUT_ERRORS as e:
        sys.stderr.write('%s\n' % e)
        return EXIT_PARSE
    except KnotxtendError as e:
        sys.stderr.write('error: %s: %s\n' % (type(e).__name__, e))
        return EXIT_DOMAIN
    except (ValueError, OSError) as e:
        sys.stderr.write('%s\n' % e)
        return EXIT_PARSE


if __name__ == '__main__':
    sys.exit(main())
