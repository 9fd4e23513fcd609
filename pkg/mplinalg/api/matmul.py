from mplinalg.internal.matrix import DenseMatrix, check_conforming

from .base import MatmulPlan, embed_square
from .block import matmul_block
from .simple import matmul_simple
from .strassen import matmul_strassen
from .winograd import matmul_winograd

_RECURSIVE = {
    'strassen': matmul_strassen,
    'winograd': matmul_winograd,
}


def matmul(a, b, plan: MatmulPlan) -> DenseMatrix:
    """A B with the algorithm named by the plan, for any conforming shapes"""
    check_conforming(a, b, plan.algorithm)
    if plan.algorithm == 'simple':
        return matmul_simple(a, b, plan)
    if plan.algorithm == 'block':
        return matmul_block(a, b, plan)
    return embed_square(_RECURSIVE[plan.algorithm], matmul_block, a, b, plan)
