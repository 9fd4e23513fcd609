import logging

from mplinalg.internal.matrix import DenseMatrix, mat_add, mat_sub

from .base import (MatmulBase, check_square, embed_square, join_quadrants, pad_to_even, quadrants,
                   run_combinations, run_products)
from .block import matmul_block

logger = logging.getLogger(__name__)


def matmul_strassen(a, b, plan, top=True) -> DenseMatrix:
    """
    Square A B by Strassen's seven products. Sizes at or below plan.n_min go
    to Block(n_min); odd sizes are zero padded by one at that level and the
    result cropped.
    """
    check_square(a, b, 'strassen')
    n = a.rows
    if n <= plan.n_min:
        return matmul_block(a, b, plan.leaf())

    a, padded = pad_to_even(a)
    b, _ = pad_to_even(b)
    a11, a12, a21, a22 = quadrants(a)
    b11, b12, b21, b22 = quadrants(b)
    logger.debug('strassen level n=%d padded=%s top=%s', n, padded, top)

    pairs = [
        (mat_add(a11, a22), mat_add(b11, b22)),
        (mat_add(a21, a22), b11),
        (a11, mat_sub(b12, b22)),
        (a22, mat_sub(b21, b11)),
        (mat_add(a11, a12), b22),
        (mat_sub(a21, a11), mat_add(b11, b12)),
        (mat_sub(a12, a22), mat_add(b21, b22)),
    ]
    p1, p2, p3, p4, p5, p6, p7 = run_products(matmul_strassen, pairs, plan, top)

    c11, c12, c21, c22 = run_combinations([
        [('+', p1), ('+', p4), ('-', p5), ('+', p7)],
        [('+', p3), ('+', p5)],
        [('+', p2), ('+', p4)],
        [('+', p1), ('-', p2), ('+', p3), ('+', p6)],
    ], plan, top)
    c = join_quadrants(c11, c12, c21, c22)
    return c.crop(n, n) if padded else c


class StrassenMatmul(MatmulBase):
    """
    Strassen(n_min). The top recursion level runs its seven products as
    parallel sections when the plan has more than one worker.
    """

    def __init__(self, engine):
        MatmulBase.__init__(self, engine=engine, algorithm='strassen')

    def _multiply(self, a, b, plan):
        return embed_square(matmul_strassen, matmul_block, a, b, plan)
