from .api.base import MatmulPlan
from .api.lu import LuFactors, LuPlan, SolveReport
from .internal.dd import DoubleDouble
from .internal.exceptions import *
from .internal.matrix import BlockView, DenseMatrix
from .internal.qd import QuadDouble
from .session import LinalgSession


__all__ = [
    'LinalgSession',
    'MatmulPlan',
    'LuPlan',
    'LuFactors',
    'SolveReport',
    'DenseMatrix',
    'BlockView',
    'DoubleDouble',
    'QuadDouble',
    'MpLinalgError',
    'ScalarDomainError',
    'DimensionError',
    'SingularMatrixError',
    'PlanError',
    'WorkerPoolError',
    'RoundingModeError',
    'VerificationError',
]

name = "mplinalg"
