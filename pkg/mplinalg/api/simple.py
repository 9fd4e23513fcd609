import logging
from functools import partial

from mplinalg.internal.engine import run_parallel_sections
from mplinalg.internal.matrix import DenseMatrix, check_conforming
from mplinalg.internal.utils import split_ranges

from .base import MatmulBase

logger = logging.getLogger(__name__)


def simple_rows(a, b, start, stop):
    """Rows [start, stop) of A B, each c_ij summed over k from left to right starting at zero"""
    zero = a.field.zero()
    columns = list(zip(*b.iter_rows()))
    out = []
    for i in range(start, stop):
        ra = a.row(i)
        row = []
        for col in columns:
            acc = zero
            for x, y in zip(ra, col):
                acc = acc + x * y
            row.append(acc)
        out.append(row)
    return out


def matmul_simple(a, b, plan=None) -> DenseMatrix:
    check_conforming(a, b, 'simple')
    workers = plan.workers if plan is not None else 1
    if workers <= 1:
        return DenseMatrix(simple_rows(a, b, 0, a.rows), a.field)
    if plan.executor == 'process':
        a, b = a.as_dense(), b.as_dense()
    tasks = [partial(simple_rows, a, b, start, stop) for start, stop in split_ranges(a.rows, workers)]
    bands = run_parallel_sections(tasks, workers, plan.executor)
    return DenseMatrix([r for band in bands for r in band], a.field)


class SimpleMatmul(MatmulBase):
    """The triple loop. Row bands go to separate workers when workers > 1."""

    def __init__(self, engine):
        MatmulBase.__init__(self, engine=engine, algorithm='simple')

    def _multiply(self, a, b, plan):
        return matmul_simple(a, b, plan)
