"""
The three benchmark subcommands. Each takes a :class:`RunConfig` and an
optional sink and returns the rows (or check results) it produced.
"""

import logging
import os
import time
from collections import defaultdict

import numpy as np

from mplinalg.api.base import MatmulPlan
from mplinalg.api.generators import generate_random
from mplinalg.api.simple import matmul_simple
from mplinalg.internal.exceptions import MpLinalgError
from mplinalg.internal.matrix import max_componentwise_rel_error, store_matrix
from mplinalg.session import LinalgSession

from .checks import run_checks
from .records import BenchRecord, RunConfig

logger = logging.getLogger(__name__)


def median_seconds(samples):
    return float(np.median(np.asarray(samples, dtype=float)))


def _failure_code(e):
    if isinstance(e, MpLinalgError):
        return e.code or e.__class__.__name__
    if isinstance(e, MemoryError):
        return 'out_of_memory'
    return e.__class__.__name__


def _emit(records, sink, record):
    records.append(record)
    if sink is not None:
        sink.write(record)
    if record.failed:
        logger.error('%s %s %s n=%d workers=%d failed: %s', record.experiment, record.precision,
                     record.algorithm, record.n, record.workers, record.failure)
    else:
        logger.info('%s %s %s n=%d workers=%d seconds=%s error=%s', record.experiment, record.precision,
                    record.algorithm, record.n, record.workers, record.seconds_median, record.max_rel_error)


def _matmul_operands(session, config, n):
    if config.matrix == 'bench':
        return session.generators.bench_pair(n)
    field = session.field
    return generate_random(n, config.seed, field), generate_random(n, config.seed + 1, field)


def _matmul_reference(session, config, a, b, n):
    if config.matrix == 'bench':
        return session.generators.exact_bench_matrix(n)
    return matmul_simple(a, b)


def cmd_matmul(config: RunConfig, sink=None):
    """
    One row per (precision, n, algorithm, workers). The operands are the
    bench pair (or a seeded random pair); with --verify the product is
    compared against the closed form (or against the simple algorithm).
    """
    records = []
    for precision in config.precisions:
        for n in config.sizes:
            for algorithm in config.algorithms:
                for workers in config.workers:
                    session = LinalgSession(precision=precision, workers=workers, block_size=config.block_size,
                                            n_min=config.n_min, count_ops=config.count_ops,
                                            executor=config.executor)
                    record = BenchRecord(experiment='matmul:{}'.format(config.matrix), precision=precision,
                                         algorithm=algorithm, n=n, bs=config.block_size, nmin=config.n_min,
                                         workers=workers, reps=1 if config.count_ops else config.repetitions)
                    try:
                        _run_matmul(session, config, record)
                    except (MpLinalgError, MemoryError) as e:
                        record.failure = _failure_code(e)
                    _emit(records, sink, record)
    log_speed_ratios(records)
    return records


def _run_matmul(session, config, record):
    n = record.n
    a, b = _matmul_operands(session, config, n)
    if config.count_ops:
        session.reset_counts()
        c = session.matmul(a, b, algorithm=record.algorithm)
        counts = session.counts()
        record.mul_count = counts['mul_count']
        record.add_count = counts['add_count']
    else:
        samples = []
        for _ in range(config.repetitions):
            started = time.perf_counter()
            c = session.matmul(a, b, algorithm=record.algorithm)
            samples.append(time.perf_counter() - started)
        record.seconds_median = median_seconds(samples)

    if config.verify:
        reference = _matmul_reference(session, config, a, b, n)
        record.max_rel_error = float(max_componentwise_rel_error(c, reference))
    if config.save_dir:
        os.makedirs(config.save_dir, exist_ok=True)
        path = os.path.join(config.save_dir, 'matmul_{}_{}_n{}_w{}.txt'.format(
            record.precision, record.algorithm, n, record.workers))
        store_matrix(c, path)


def log_speed_ratios(records):
    """INFO line per (precision, n, algorithm): time at one worker over time at w workers"""
    serial = {}
    grouped = defaultdict(list)
    for r in records:
        if r.failed or r.seconds_median is None:
            continue
        key = (r.precision, r.n, r.algorithm)
        grouped[key].append(r)
        if r.workers == 1:
            serial[key] = r.seconds_median
    for key, rows in grouped.items():
        if key not in serial:
            continue
        for r in rows:
            if r.workers > 1 and r.seconds_median > 0:
                logger.info('speed increase %s %s n=%d: %d workers %.2fx', r.precision, r.algorithm, r.n,
                            r.workers, serial[key] / r.seconds_median)


def cmd_lu(config: RunConfig, sink=None):
    """
    One row per (precision, n, alpha, update algorithm, workers) solving
    A x = b with x = [0, 1, ..., n-1] and b = A x. With --baseline each
    (precision, n, workers) also gets a row for the row-wise parallel
    elimination, algorithm `rowwise`, alpha empty.
    """
    records = []
    for precision in config.precisions:
        for n in config.sizes:
            for workers in config.workers:
                session = LinalgSession(precision=precision, workers=workers, block_size=config.block_size,
                                        n_min=config.n_min, count_ops=config.count_ops,
                                        executor=config.executor)
                try:
                    system = _lu_system(session, config, n)
                except MpLinalgError as e:
                    system = e
                for alpha in config.alphas:
                    for update in config.updates:
                        record = BenchRecord(experiment='lu:{}'.format(config.matrix), precision=precision,
                                             algorithm=update, n=n, bs=alpha * config.n_min, nmin=config.n_min,
                                             alpha=alpha, workers=workers,
                                             reps=1 if config.count_ops else config.repetitions)
                        plan = session.lu.plan(alpha=alpha, update=MatmulPlan(
                            algorithm=update, block_size=config.block_size, n_min=config.n_min))
                        _run_lu(session, config, record, system,
                                lambda a, b, x: session.lu.solve(a, b, plan, x_true=x))
                        _emit(records, sink, record)
                if config.baseline:
                    record = BenchRecord(experiment='lu:{}'.format(config.matrix), precision=precision,
                                         algorithm='rowwise', n=n, nmin=config.n_min, workers=workers,
                                         reps=1 if config.count_ops else config.repetitions)
                    _run_lu(session, config, record, system,
                            lambda a, b, x: session.lu.solve_rowwise(a, b, workers, x_true=x))
                    _emit(records, sink, record)
    return records


def _lu_system(session, config, n):
    a = session.generators.matrix(config.matrix, n, config.seed)
    x_true = session.lu.true_solution(n)
    return a, session.lu.build_rhs(a, x_true), x_true


def _run_lu(session, config, record, system, solver):
    if isinstance(system, Exception):
        record.failure = _failure_code(system)
        return
    a, b, x_true = system
    try:
        if config.count_ops:
            session.reset_counts()
            report = solver(a, b, x_true)
            counts = session.counts()
            record.mul_count = counts['mul_count']
            record.add_count = counts['add_count']
        else:
            samples = []
            for _ in range(config.repetitions):
                report = solver(a, b, x_true)
                samples.append(report.seconds)
            record.seconds_median = median_seconds(samples)
        record.max_rel_error = float(report.max_rel_error)
    except (MpLinalgError, MemoryError) as e:
        record.failure = _failure_code(e)


def cmd_verify(config: RunConfig, out=None):
    """Run the property suite; returns the list of :class:`~mplinalg.bench.checks.CheckResult`"""
    results = run_checks(config)
    for r in results:
        line = '{} {}: {}'.format('PASS' if r.passed else 'FAIL', r.name, r.detail)
        if out is not None:
            out.write(line + '\n')
        if r.passed:
            logger.info(line)
        else:
            logger.error(line)
    return results
