"""
    :class:`Engine`: execution state shared by every algorithm object of a
    session: the scalar field (possibly instrumented), the operation counter,
    and the worker budget used by :func:`run_parallel_sections`.
"""

import logging
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor

from .constants import DEFAULT_BLOCK_SIZE, DEFAULT_N_MIN, EXECUTORS
from .counting import OpCounter
from .exceptions import MpLinalgError, PlanError, WorkerPoolError
from .fields import CountingField, get_field

logger = logging.getLogger(__name__)

_POOLS = {
    'thread': ThreadPoolExecutor,
    'process': ProcessPoolExecutor,
}


class SectionRunner:
    """
    A bounded worker pool that runs batches of independent sections. Used
    as a context manager so that loops issuing many batches (row-wise LU)
    keep one pool alive.
    """

    def __init__(self, workers, executor='thread'):
        if executor not in _POOLS:
            raise PlanError('executor must be one of {}, got {!r}'.format(EXECUTORS, executor),
                            code='bad_executor')
        self.workers = workers
        self.executor = executor
        self._pool = None

    def __enter__(self):
        if self.workers > 1:
            self._pool = _POOLS[self.executor](max_workers=self.workers)
        return self

    def __exit__(self, exc_type, exc, tb):
        if self._pool is not None:
            self._pool.shutdown(wait=True, cancel_futures=True)
            self._pool = None
        return False

    def run(self, tasks):
        if self._pool is None or len(tasks) <= 1:
            return [task() for task in tasks]
        logger.debug('dispatching %d sections to %d %s workers', len(tasks), self.workers, self.executor)
        futures = [self._pool.submit(task) for task in tasks]
        try:
            return [f.result() for f in futures]
        except MpLinalgError:
            for f in futures:
                f.cancel()
            raise
        except Exception as e:
            for f in futures:
                f.cancel()
            raise WorkerPoolError('parallel section failed: {!r}'.format(e), code='worker_failure') from e


def run_parallel_sections(tasks, workers, executor='thread'):
    """
    Run independent zero-argument callables and return their results in task
    order. With one worker the tasks run inline, one after the other; the
    results are the same either way because no task shares mutable state.

    :param list tasks: callables; picklable (module level functions or
                partials of them) when executor is 'process'
    :param int workers: pool size upper bound
    :param str executor: 'thread' or 'process'
    :raises WorkerPoolError: if a task fails for a reason other than a
                library error; no partial result is returned
    """
    with SectionRunner(min(workers, max(1, len(tasks))), executor) as runner:
        return runner.run(tasks)


class Engine:

    def __init__(self, precision='dd', workers=1, executor='thread', count_ops=False,
                 block_size=DEFAULT_BLOCK_SIZE, n_min=DEFAULT_N_MIN):
        """
        :param str precision: one of 'd', 'dd', 'qd'
        :param int workers: default worker budget, 1 means serial
        :param int block_size: default tile size of Block
        :param int n_min: default recursion cutoff and LU panel unit
        :param str executor: 'thread' or 'process'
        :param bool count_ops: wrap every scalar in a CountingScalar
        """
        self.logger = logging.getLogger(self.__class__.__name__)
        if workers < 1:
            raise PlanError('workers must be a positive integer, got {}'.format(workers), code='bad_workers')
        if executor not in EXECUTORS:
            raise PlanError('executor must be one of {}, got {!r}'.format(EXECUTORS, executor),
                            code='bad_executor')
        if count_ops and executor == 'process':
            raise PlanError('operation counting needs the thread executor', code='counting_process')

        self.precision = precision
        self.base_field = get_field(precision)
        self.workers = workers
        self.executor = executor
        self.block_size = block_size
        self.n_min = n_min
        if count_ops:
            self.counter = OpCounter()
            self.field = CountingField(self.base_field, self.counter)
        else:
            self.counter = None
            self.field = self.base_field
        self.logger.debug('engine ready: precision=%s workers=%d executor=%s counting=%s',
                          precision, workers, executor, count_ops)

    @property
    def counting(self):
        return self.counter is not None

    def run_parallel_sections(self, tasks, workers=None):
        return run_parallel_sections(tasks, workers or self.workers, self.executor)

    def reset_counts(self):
        if self.counter is not None:
            self.counter.reset()

    def counts(self):
        """Current tallies, or None when not counting"""
        if self.counter is None:
            return None
        return self.counter.snapshot()
