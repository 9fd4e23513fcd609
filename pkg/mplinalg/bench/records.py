"""
    :class:`RunConfig`: validated configuration of one CLI invocation.
    :class:`BenchRecord`: one CSV row.
"""

import csv
import logging
import re
import sys
from dataclasses import dataclass, field
from typing import List, Optional

from mplinalg.internal.constants import (ALGORITHMS, CSV_HEADER, DEFAULT_BLOCK_SIZE, DEFAULT_N_MIN,
                                         DEFAULT_REPETITIONS, DEFAULT_SEED, EXECUTORS, MASK64, PRECISIONS)
from mplinalg.internal.exceptions import PlanError

logger = logging.getLogger(__name__)

_RANGE = re.compile(r'^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$')

COMMANDS = ['matmul', 'lu', 'verify']
MATMUL_MATRICES = ['bench', 'random']
LU_MATRICES = ['random', 'dominant', 'lotkin']


def parse_int_list(text):
    """
    '1,2,8' -> [1, 2, 8]; '1..4' -> [1, 2, 3, 4]; both forms mix: '1..3,8'.
    """
    values = []
    for part in text.split(','):
        part = part.strip()
        if not part:
            continue
        m = _RANGE.match(part)
        if m:
            lo, hi = int(m.group(1)), int(m.group(2))
            if hi < lo:
                raise PlanError('empty range {!r}'.format(part), code='bad_range')
            values.extend(range(lo, hi + 1))
            continue
        try:
            values.append(int(part))
        except ValueError:
            raise PlanError('{!r} is not an integer or a..b range'.format(part), code='bad_list') from None
    if not values:
        raise PlanError('empty list {!r}'.format(text), code='bad_list')
    return values


def parse_name_list(text, allowed, what):
    names = [p.strip().lower() for p in text.split(',') if p.strip()]
    if not names:
        raise PlanError('empty {} list'.format(what), code='bad_list')
    for name in names:
        if name not in allowed:
            raise PlanError('unknown {} {!r}, expected one of {}'.format(what, name, allowed), code='bad_list')
    return names


@dataclass(frozen=True)
class RunConfig:
    command: str
    precisions: List[str] = field(default_factory=lambda: ['dd'])
    sizes: List[int] = field(default_factory=lambda: [64])
    algorithms: List[str] = field(default_factory=lambda: ['block'])
    updates: List[str] = field(default_factory=lambda: ['block'])
    n_min: int = DEFAULT_N_MIN
    block_size: int = DEFAULT_BLOCK_SIZE
    alphas: List[int] = field(default_factory=lambda: [1])
    workers: List[int] = field(default_factory=lambda: [1])
    seed: int = DEFAULT_SEED
    repetitions: int = DEFAULT_REPETITIONS
    matrix: Optional[str] = None
    verify: bool = False
    count_ops: bool = False
    executor: str = 'thread'
    out: Optional[str] = None
    save_dir: Optional[str] = None
    baseline: bool = False
    product_file: Optional[str] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise PlanError('unknown command {!r}'.format(self.command), code='usage')
        for p in self.precisions:
            if p not in PRECISIONS:
                raise PlanError('unknown precision {!r}'.format(p), code='usage')
        for a in list(self.algorithms) + list(self.updates):
            if a not in ALGORITHMS:
                raise PlanError('unknown algorithm {!r}'.format(a), code='usage')
        if any(n < 1 for n in self.sizes):
            raise PlanError('matrix sizes must be >= 1', code='usage')
        if any(w < 1 for w in self.workers):
            raise PlanError('worker counts must be >= 1', code='usage')
        if any(a < 1 for a in self.alphas):
            raise PlanError('alpha values must be >= 1', code='usage')
        if self.n_min < 2:
            raise PlanError('--nmin must be >= 2', code='usage')
        if self.block_size < 1:
            raise PlanError('--bs must be >= 1', code='usage')
        if self.repetitions < 1:
            raise PlanError('--reps must be >= 1', code='usage')
        if not 0 <= self.seed <= MASK64:
            raise PlanError('--seed must be an unsigned 64-bit integer', code='usage')
        if self.executor not in EXECUTORS:
            raise PlanError('unknown executor {!r}'.format(self.executor), code='usage')
        if self.count_ops and self.executor == 'process':
            raise PlanError('--count-ops needs the thread executor', code='usage')

        if self.matrix is None:
            object.__setattr__(self, 'matrix', 'random' if self.command == 'lu' else 'bench')
        if self.command == 'matmul' and self.matrix not in MATMUL_MATRICES:
            raise PlanError('matmul runs on {} matrices, got {!r}'.format(MATMUL_MATRICES, self.matrix),
                            code='usage')
        if self.command == 'lu' and self.matrix not in LU_MATRICES:
            raise PlanError('lu runs on {} matrices, got {!r}'.format(LU_MATRICES, self.matrix), code='usage')


@dataclass
class BenchRecord:
    """
    One CSV row. Timing rows carry seconds_median and no counts; counting
    rows carry counts and no time. A failed row keeps its configuration and
    reports `failed:<code>` in the error column.
    """
    experiment: str
    precision: str
    algorithm: str
    n: int
    bs: Optional[int] = None
    nmin: Optional[int] = None
    alpha: Optional[int] = None
    workers: int = 1
    reps: int = 1
    seconds_median: Optional[float] = None
    mul_count: Optional[int] = None
    add_count: Optional[int] = None
    max_rel_error: Optional[float] = None
    failure: Optional[str] = None

    @property
    def failed(self):
        return self.failure is not None

    def to_row(self):
        def fmt(v, spec=None):
            if v is None:
                return ''
            return format(v, spec) if spec else str(v)

        error = 'failed:{}'.format(self.failure) if self.failed else fmt(self.max_rel_error, '.6e')
        return [
            self.experiment,
            self.precision,
            self.algorithm,
            fmt(self.n),
            fmt(self.bs),
            fmt(self.nmin),
            fmt(self.alpha),
            fmt(self.workers),
            fmt(self.reps),
            fmt(self.seconds_median, '.6f'),
            fmt(self.mul_count),
            fmt(self.add_count),
            error,
        ]


class CsvSink:
    """Writes the header once and then rows as they arrive, to a path or stdout"""

    def __init__(self, path=None):
        self.path = path
        self._file = None
        self._writer = None

    def __enter__(self):
        self._file = open(self.path, 'w', newline='') if self.path else sys.stdout
        self._writer = csv.writer(self._file, lineterminator='\n')
        self._writer.writerow(CSV_HEADER)
        return self

    def write(self, record: BenchRecord):
        self._writer.writerow(record.to_row())
        self._file.flush()

    def __exit__(self, exc_type, exc, tb):
        if self.path and self._file is not None:
            self._file.close()
        self._file = None
        return False
