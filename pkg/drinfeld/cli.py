"""
:summary: Command line interface

Every subcommand prints through one of the output formats and returns an exit status:
0 on success or a SURJECTIVE verdict, 2 for an UNKNOWN verdict, 1 on errors.

:license: Apache License, Version 2.0
"""
__docformat__ = "restructuredtext en"

import argparse
import csv
import io
import json
import logging
import sys

from .defaults import (
    DEFAULT_CUTOFF,
    DEFAULT_GAMMA_VALUATION,
    DEFAULT_MAX_PRIME_DEGREE,
    DEFAULT_PRECISION,
    DEFAULT_SEED,
    EXIT_ERROR,
    EXIT_OK,
    EXIT_UNKNOWN,
    OutputFormat,
    Verdict,
    )
from .client import DrinfeldClient, RunConfig
from .exceptions import DrinfeldError
from .transforms import DENSITY_COLUMNS


def _read_module(value):
    """Inline JSON, or the path of a file holding it"""
    if value.lstrip().startswith('{'):
        return value
    with open(value) as fh:
        return fh.read()


def _dumps(data):
    return json.dumps(data, sort_keys=True)


def render(data, fmt, columns=None):
    """Formats transformed results: JSON (one line per item for lists), CSV rows or text"""
    if fmt == OutputFormat.JSON:
        if isinstance(data, list):
            return '\n'.join(_dumps(item) for item in data)
        return _dumps(data)
    if fmt == OutputFormat.CSV:
        rows = data if isinstance(data, list) else [data]
        if columns is None:
            columns = sorted(rows[0]) if rows else []
        out = io.StringIO()
        writer = csv.DictWriter(out, fieldnames=list(columns), extrasaction='ignore',
                                lineterminator='\n')
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
        return out.getvalue().rstrip('\n')
    items = data if isinstance(data, list) else [data]
    blocks = []
    for item in items:
        if isinstance(item, dict):
            blocks.append('\n'.join('{0}: {1}'.format(k, _text(item[k])) for k in sorted(item)))
        else:
            blocks.append(_text(item))
    return '\n\n'.join(blocks)


def _text(value):
    return value if isinstance(value, str) else _dumps(value)


def _add_common(parser):
    parser.add_argument('--threads', type=int, default=None,
                        help='worker processes (default: $DRINFELD_THREADS or 1)')
    parser.add_argument('--seed', type=int, default=DEFAULT_SEED)
    parser.add_argument('--verbose', action='store_true', help='log at DEBUG level')
    parser.add_argument('--emit', choices=OutputFormat.values, default=None,
                        help='output format')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='drinfeldrun',
        description='Exact computations with Drinfeld modules over F_q[T]')
    sub = parser.add_subparsers(dest='command')

    p = sub.add_parser('inspect', help='validate and describe a module')
    p.add_argument('--module', required=True, help='JSON descriptor or a file holding one')

    p = sub.add_parser('torsion', help='basis of phi[T^k] at a good prime')
    p.add_argument('--module', required=True)
    p.add_argument('--prime', required=True)
    p.add_argument('--level', type=int, choices=(1, 2), default=1)

    p = sub.add_parser('frobsample', help='Frobenius samples at good primes')
    p.add_argument('--module', required=True)
    p.add_argument('--max-prime-degree', type=int, default=DEFAULT_MAX_PRIME_DEGREE)
    p.add_argument('--prime', action='append', default=None, help='sample only these primes')
    p.add_argument('--level2', action='store_true', help='also compute Frobenius on phi[T^2]')

    p = sub.add_parser('certify', help='surjectivity certificate of the T-adic image')
    p.add_argument('--module', required=True)
    p.add_argument('--max-prime-degree', type=int, default=DEFAULT_MAX_PRIME_DEGREE)

    p = sub.add_parser('newton', help='Newton polygon of phi_(T^k) at a prime')
    p.add_argument('--module', required=True)
    p.add_argument('--prime', required=True)
    p.add_argument('--k', type=int, default=2)
    p.add_argument('--json', action='store_true', help='same as --emit json')

    p = sub.add_parser('exp', help='truncated lattice exponential at a degree-1 prime')
    p.add_argument('--q', type=int, required=True)
    p.add_argument('--prime', required=True)
    p.add_argument('--gamma-val', type=int, default=DEFAULT_GAMMA_VALUATION)
    p.add_argument('--cutoff', type=int, default=DEFAULT_CUTOFF)
    p.add_argument('--precision', type=int, default=DEFAULT_PRECISION)

    p = sub.add_parser('density', help='exact Pi_r counts over coefficient boxes')
    p.add_argument('--q', type=int, required=True)
    p.add_argument('--r', type=int, default=2)
    p.add_argument('--X', type=int, nargs='+', required=True)

    p = sub.add_parser('eulerprod', help='partial Euler products')
    p.add_argument('--q', type=int, required=True)
    p.add_argument('--p', type=int, required=True)
    p.add_argument('--max-degree', type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument('--exact', dest='exact', action='store_true')
    group.add_argument('--float', dest='exact', action='store_false')
    p.set_defaults(exact=False)

    for choice in sub.choices.values():
        _add_common(choice)
    return parser


def _configure_logging(verbose):
    logger = logging.getLogger('drinfeld')
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter('%(asctime)s %(name)s %(levelname)s %(message)s'))
        logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)


def run(args):
    """Runs one parsed command

    :return: (rendered output, exit status)
    :rtype: tuple
    """
    levels = (1, 2) if getattr(args, 'level2', False) else (1,)
    config = RunConfig(seed=args.seed, threads=args.threads, levels=levels,
                       precision=getattr(args, 'precision', DEFAULT_PRECISION), output=args.emit)
    client = DrinfeldClient(config)
    fmt = config.output
    status = EXIT_OK
    columns = None

    if args.command == 'inspect':
        data = client.inspect(_read_module(args.module))
    elif args.command == 'torsion':
        data = client.torsion(_read_module(args.module), args.prime, args.level)
    elif args.command == 'frobsample':
        data = client.frobsample(_read_module(args.module), args.max_prime_degree, args.prime)
        fmt = fmt or OutputFormat.JSON
    elif args.command == 'certify':
        data = client.certify(_read_module(args.module), args.max_prime_degree)
        status = EXIT_OK if data['verdict'] == Verdict.SURJECTIVE else EXIT_UNKNOWN
        fmt = fmt or OutputFormat.JSON
    elif args.command == 'newton':
        data = client.newton(_read_module(args.module), args.prime, args.k)
        if args.json:
            fmt = OutputFormat.JSON
    elif args.command == 'exp':
        data = client.exp(args.q, args.prime, args.gamma_val, args.cutoff)
    elif args.command == 'density':
        data = client.density(args.q, args.r, args.X)
        fmt = fmt or OutputFormat.CSV
        columns = DENSITY_COLUMNS
    else:
        data = client.eulerprod(args.q, args.p, args.max_degree)
        fmt = fmt or OutputFormat.CSV
        columns = ('B', 'c_B', 'partial') if args.exact else ('B', 'c_B', 'partial_float',
                                                              'log_sum', 'linear_bound')
    return render(data, fmt or OutputFormat.TEXT, columns), status


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_ERROR
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_ERROR
    _configure_logging(args.verbose)
    try:
        output, status = run(args)
    except (DrinfeldError, ValueError, IOError) as e:
        sys.stderr.write('drinfeldrun {0}: {1}\n'.format(args.command, e))
        return EXIT_ERROR
    sys.stdout.write(output + '\n')
    return status


if __name__ == '__main__':
    sys.exit(main())
