"""
mplinalg-bench: matmul timing grids, LU alpha sweeps and the verify suite.

    mplinalg-bench matmul --prec dd --n 1023..1025 --algo simple,block,strassen,winograd --workers 1,8
    mplinalg-bench lu --prec dd --n 512 --alpha 1..10 --update winograd --workers 8
    mplinalg-bench verify --n 64 --nmin 16

Exit status: 0 success, 1 usage error, 2 failed row or failed check.
"""

import argparse
import logging
import os
import sys

from mplinalg.internal.constants import (ALGORITHMS, DEFAULT_BLOCK_SIZE, DEFAULT_N_MIN, DEFAULT_REPETITIONS,
                                         DEFAULT_SEED, EXECUTORS, EXIT_FAILURE, EXIT_OK, EXIT_USAGE,
                                         MATRIX_KINDS, PRECISIONS)
from mplinalg.internal.exceptions import MpLinalgError, PlanError

from .commands import cmd_lu, cmd_matmul, cmd_verify
from .records import CsvSink, RunConfig, parse_int_list, parse_name_list

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s [%(levelname)8s] %(name)s: %(message)s (%(filename)s:%(lineno)s)'
LOG_LEVEL_ENV = 'MPLINALG_LOG_LEVEL'


class _Parser(argparse.ArgumentParser):
    """Reports usage problems as PlanError so that main() owns the exit status"""

    def error(self, message):
        raise PlanError(message, code='usage')


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument('--prec', default='dd', help='comma list of precisions from {}'.format(PRECISIONS))
    common.add_argument('--n', default='64', help='matrix sizes, comma list and a..b ranges')
    common.add_argument('--nmin', type=int, default=DEFAULT_N_MIN, help='recursion cutoff and LU panel unit')
    common.add_argument('--bs', type=int, default=DEFAULT_BLOCK_SIZE, help='Block algorithm tile size')
    common.add_argument('--workers', default='1', help='worker counts, comma list and a..b ranges')
    common.add_argument('--seed', type=int, default=DEFAULT_SEED, help='SplitMix64 seed of random matrices')
    common.add_argument('--executor', choices=EXECUTORS, default='thread')
    common.add_argument('--log-level', default=None, help='logging level, default from ${}'.format(LOG_LEVEL_ENV))

    parser = _Parser(prog='mplinalg-bench', description='Multiple precision matrix multiplication and LU benchmarks')
    commands = parser.add_subparsers(dest='command')

    matmul = commands.add_parser('matmul', parents=[common], help='timing grid of the multiplication algorithms')
    matmul.add_argument('--algo', default='block', help='comma list from {}'.format(ALGORITHMS))
    matmul.add_argument('--matrix', choices=['bench', 'random'], default='bench')
    matmul.add_argument('--reps', type=int, default=DEFAULT_REPETITIONS)
    matmul.add_argument('--verify', action='store_true', help='record the error against the exact product')
    matmul.add_argument('--count-ops', action='store_true', help='record operation counts instead of time')
    matmul.add_argument('--save', default=None, metavar='DIR', help='store every product in DIR')
    matmul.add_argument('--out', default=None, help='CSV path, stdout when absent')

    lu = commands.add_parser('lu', parents=[common], help='blocked LU solves over a range of panel widths')
    lu.add_argument('--alpha', default='1', help='panel width multipliers, K = alpha * nmin')
    lu.add_argument('--update', '--algo', dest='update', default='block',
                    help='trailing update algorithms, comma list from {}'.format(ALGORITHMS))
    lu.add_argument('--matrix', choices=[k for k in MATRIX_KINDS if k != 'bench'], default='random')
    lu.add_argument('--reps', type=int, default=DEFAULT_REPETITIONS)
    lu.add_argument('--count-ops', action='store_true', help='record operation counts instead of time')
    lu.add_argument('--baseline', action='store_true', help='add rows for the row-wise parallel LU')
    lu.add_argument('--out', default=None, help='CSV path, stdout when absent')

    verify = commands.add_parser('verify', parents=[common], help='run the property suite')
    verify.add_argument('--product-file', default=None, help='stored bench product to check as well')
    return parser


def parse_config(argv=None):
    """(RunConfig, log level) from command line arguments"""
    args = build_parser().parse_args(argv)
    if args.command is None:
        raise PlanError('a command is required: matmul, lu or verify', code='usage')
    config = RunConfig(
        command=args.command,
        precisions=parse_name_list(args.prec, PRECISIONS, 'precision'),
        sizes=parse_int_list(args.n),
        algorithms=parse_name_list(getattr(args, 'algo', 'block'), ALGORITHMS, 'algorithm'),
        updates=parse_name_list(getattr(args, 'update', 'block'), ALGORITHMS, 'algorithm'),
        n_min=args.nmin,
        block_size=args.bs,
        alphas=parse_int_list(getattr(args, 'alpha', '1')),
        workers=parse_int_list(args.workers),
        seed=args.seed,
        repetitions=getattr(args, 'reps', DEFAULT_REPETITIONS),
        matrix=getattr(args, 'matrix', None),
        verify=getattr(args, 'verify', False),
        count_ops=getattr(args, 'count_ops', False),
        executor=args.executor,
        out=getattr(args, 'out', None),
        save_dir=getattr(args, 'save', None),
        baseline=getattr(args, 'baseline', False),
        product_file=getattr(args, 'product_file', None),
    )
    return config, args.log_level or os.environ.get(LOG_LEVEL_ENV, 'WARNING')


def configure_logging(level):
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        raise ValueError('unknown log level {!r}'.format(level))
    logging.basicConfig(level=numeric, format=LOG_FORMAT)


def run(config: RunConfig):
    if config.command == 'verify':
        results = cmd_verify(config, out=sys.stdout)
        failed = [r.name for r in results if not r.passed]
        if failed:
            logger.error('verify failed: %s', ', '.join(failed))
            return EXIT_FAILURE
        return EXIT_OK

    command = cmd_matmul if config.command == 'matmul' else cmd_lu
    with CsvSink(config.out) as sink:
        records = command(config, sink)
    failed = sum(1 for r in records if r.failed)
    if failed:
        logger.error('%d of %d rows failed', failed, len(records))
        return EXIT_FAILURE
    return EXIT_OK


def main(argv=None):
    try:
        config, level = parse_config(argv)
    except PlanError as e:
        sys.stderr.write('mplinalg-bench: {}\n'.format(e.message))
        return EXIT_USAGE
    try:
        configure_logging(level)
    except ValueError:
        sys.stderr.write('mplinalg-bench: unknown log level {!r}\n'.format(level))
        return EXIT_USAGE
    try:
        return run(config)
    except PlanError as e:
        sys.stderr.write('mplinalg-bench: {}\n'.format(e.message))
        return EXIT_USAGE
    except MpLinalgError as e:
        logger.error('run failed: %s', e)
        return EXIT_FAILURE
