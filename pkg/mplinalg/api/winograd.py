import logging

from mplinalg.internal.matrix import DenseMatrix, mat_add, mat_sub

from .base import (MatmulBase, check_square, embed_square, join_quadrants, pad_to_even, quadrants,
                   run_combinations, run_products)
from .block import matmul_block

logger = logging.getLogger(__name__)


def matmul_winograd(a, b, plan, top=True) -> DenseMatrix:
    """
    Square A B by the Winograd form of Strassen's scheme: seven products and
    fifteen block additions per level instead of eighteen. Leaf and padding
    rules are those of :func:`~mplinalg.api.strassen.matmul_strassen`.
    """
    check_square(a, b, 'winograd')
    n = a.rows
    if n <= plan.n_min:
        return matmul_block(a, b, plan.leaf())

    a, padded = pad_to_even(a)
    b, _ = pad_to_even(b)
    a11, a12, a21, a22 = quadrants(a)
    b11, b12, b21, b22 = quadrants(b)
    logger.debug('winograd level n=%d padded=%s top=%s', n, padded, top)

    s1 = mat_add(a21, a22)
    s2 = mat_sub(s1, a11)
    s3 = mat_sub(a11, a21)
    s4 = mat_sub(a12, s2)
    t1 = mat_sub(b12, b11)
    t2 = mat_sub(b22, t1)
    t3 = mat_sub(b22, b12)
    t4 = mat_sub(t2, b21)

    pairs = [
        (a11, b11),
        (a12, b21),
        (s4, b22),
        (a22, t4),
        (s1, t1),
        (s2, t2),
        (s3, t3),
    ]
    m1, m2, m3, m4, m5, m6, m7 = run_products(matmul_winograd, pairs, plan, top)

    u2 = mat_add(m1, m6)
    u3 = mat_add(u2, m7)
    c11, c12, c21, c22 = run_combinations([
        [('+', m1), ('+', m2)],
        [('+', u2), ('+', m5), ('+', m3)],
        [('+', u3), ('-', m4)],
        [('+', u3), ('+', m5)],
    ], plan, top)
    c = join_quadrants(c11, c12, c21, c22)
    return c.crop(n, n) if padded else c


class WinogradMatmul(MatmulBase):
    """Winograd(n_min), parallelized like Strassen(n_min)."""

    def __init__(self, engine):
        MatmulBase.__init__(self, engine=engine, algorithm='winograd')

    def _multiply(self, a, b, plan):
        return embed_square(matmul_winograd, matmul_block, a, b, plan)
