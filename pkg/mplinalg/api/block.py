import logging
from functools import partial

from mplinalg.internal.engine import run_parallel_sections
from mplinalg.internal.matrix import DenseMatrix, check_conforming
from mplinalg.internal.utils import BlockGrid, split_ranges

from .base import MatmulBase

logger = logging.getLogger(__name__)


def block_rows(a, b, start, stop, block_size):
    """
    Rows [start, stop) of A B accumulated tile by tile. For every c_ij the
    k-tiles are visited in increasing order and k increases inside a tile,
    so each scalar sees exactly the summation order of the simple algorithm.
    """
    zero = a.field.zero()
    n = b.cols
    out = [[zero] * n for _ in range(stop - start)]
    b_rows = list(b.iter_rows())
    a_rows = [a.row(i) for i in range(start, stop)]
    row_grid = BlockGrid(stop - start, block_size)
    inner_grid = BlockGrid(a.cols, block_size)
    col_grid = BlockGrid(n, block_size)
    for i0, i1 in row_grid:
        for k0, k1 in inner_grid:
            for j0, j1 in col_grid:
                for i in range(i0, i1):
                    ra = a_rows[i]
                    ci = out[i]
                    for k in range(k0, k1):
                        aik = ra[k]
                        bk = b_rows[k]
                        for j in range(j0, j1):
                            ci[j] = ci[j] + aik * bk[j]
    return out


def matmul_block(a, b, plan) -> DenseMatrix:
    check_conforming(a, b, 'block')
    bs = plan.block_size
    if plan.workers <= 1:
        return DenseMatrix(block_rows(a, b, 0, a.rows, bs), a.field)

    # whole row tiles per worker, so every worker owns a disjoint band of C
    tiles = BlockGrid(a.rows, bs)
    bands = []
    for t0, t1 in split_ranges(tiles.total_blocks, plan.workers):
        bands.append((tiles.block(t0)[0], tiles.block(t1 - 1)[1]))
    if plan.executor == 'process':
        a, b = a.as_dense(), b.as_dense()
    tasks = [partial(block_rows, a, b, start, stop, bs) for start, stop in bands]
    parts = run_parallel_sections(tasks, plan.workers, plan.executor)
    return DenseMatrix([r for part in parts for r in part], a.field)


class BlockMatmul(MatmulBase):
    """Tiled multiplication with square tiles of plan.block_size; ragged edge tiles allowed."""

    def __init__(self, engine):
        MatmulBase.__init__(self, engine=engine, algorithm='block')

    def _multiply(self, a, b, plan):
        return matmul_block(a, b, plan)
