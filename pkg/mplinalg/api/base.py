import logging
from dataclasses import dataclass, replace
from functools import partial

from mplinalg.internal.constants import ALGORITHMS, DEFAULT_BLOCK_SIZE, DEFAULT_N_MIN, EXECUTORS
from mplinalg.internal.engine import Engine, run_parallel_sections
from mplinalg.internal.exceptions import DimensionError, PlanError
from mplinalg.internal.matrix import DenseMatrix, check_conforming, mat_add, mat_sub

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatmulPlan:
    """
    Algorithm choice plus its tuning parameters.

    n_min is the size at or below which the recursive algorithms stop
    calling themselves and hand the product to Block with block size n_min.
    """
    algorithm: str = 'block'
    block_size: int = DEFAULT_BLOCK_SIZE
    n_min: int = DEFAULT_N_MIN
    workers: int = 1
    executor: str = 'thread'

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise PlanError('unknown algorithm {!r}, expected one of {}'.format(self.algorithm, ALGORITHMS),
                            code='unknown_algorithm')
        if self.block_size < 1:
            raise PlanError('block size must be >= 1, got {}'.format(self.block_size), code='bad_block_size')
        if self.n_min < 2:
            raise PlanError('n_min must be >= 2, got {}'.format(self.n_min), code='bad_n_min')
        if self.workers < 1:
            raise PlanError('workers must be >= 1, got {}'.format(self.workers), code='bad_workers')
        if self.executor not in EXECUTORS:
            raise PlanError('unknown executor {!r}'.format(self.executor), code='bad_executor')

    def leaf(self, workers=None) -> 'MatmulPlan':
        """The Block plan used below the recursion cutoff"""
        return replace(self, algorithm='block', block_size=self.n_min,
                       workers=self.workers if workers is None else workers)

    def serial(self) -> 'MatmulPlan':
        return replace(self, workers=1)


def check_square(a, b, op_name):
    if not (a.rows == a.cols == b.rows == b.cols):
        raise DimensionError('{}: needs square operands of one size, got {}x{} and {}x{}'.format(
            op_name, a.rows, a.cols, b.rows, b.cols), code='not_square')


def linear_combination(terms) -> DenseMatrix:
    """
    Left-to-right signed sum of matrices: terms is a list of (sign, matrix)
    with sign '+' or '-'; the first term is taken as is.
    """
    _, acc = terms[0]
    for sign, m in terms[1:]:
        acc = mat_add(acc, m) if sign == '+' else mat_sub(acc, m)
    return acc


def join_quadrants(c11, c12, c21, c22) -> DenseMatrix:
    top = [r1 + r2 for r1, r2 in zip(c11.data, c12.data)]
    bottom = [r1 + r2 for r1, r2 in zip(c21.data, c22.data)]
    return DenseMatrix(top + bottom, c11.field)


def pad_to_even(m):
    """(operand, padded) where operand has an even size; odd sizes get one zero row and column"""
    if m.rows % 2 == 0:
        return m, False
    return m.as_dense().pad(m.rows + 1, m.cols + 1), True


def quadrants(m):
    h = m.rows // 2
    return m.view(0, 0, h, h), m.view(0, h, h, h), m.view(h, 0, h, h), m.view(h, h, h, h)


def run_products(recurse, pairs, plan, top):
    """
    The seven half-size products of one recursion level. At the top level
    with a worker budget they run as parallel sections, each one recursing
    serially and handing its share of the budget to its Block leaves;
    everywhere else they run one after the other.
    """
    if not top or plan.workers <= 1:
        return [recurse(x, y, plan, False) for x, y in pairs]

    inner = 1 if plan.executor == 'process' else max(1, plan.workers // len(pairs))
    sub_plan = replace(plan, workers=inner)
    if plan.executor == 'process':
        pairs = [(x.as_dense(), y.as_dense()) for x, y in pairs]
    tasks = [partial(recurse, x, y, sub_plan, False) for x, y in pairs]
    return run_parallel_sections(tasks, plan.workers, plan.executor)


def run_combinations(jobs, plan, top):
    """Quadrant combinations after the join, data parallel over the four quadrants"""
    if not top or plan.workers <= 1:
        return [linear_combination(terms) for terms in jobs]
    tasks = [partial(linear_combination, terms) for terms in jobs]
    return run_parallel_sections(tasks, plan.workers, plan.executor)


def embed_square(recurse, leaf, a, b, plan):
    """
    Non-square products for the recursive algorithms: embed into the
    bounding square when every dimension exceeds 2 n_min, otherwise use the
    Block leaf directly on the rectangular operands.
    """
    m, l, n = a.rows, a.cols, b.cols
    if m == l == n:
        return recurse(a, b, plan, True)
    if min(m, l, n) <= 2 * plan.n_min:
        return leaf(a, b, plan.leaf())
    s = max(m, l, n)
    logger.debug('embedding %dx%d by %dx%d into %d square', m, l, l, n, s)
    c = recurse(a.as_dense().pad(s, s), b.as_dense().pad(s, s), plan, True)
    return c.crop(m, n)


class MatmulBase:
    """
    One multiplication algorithm bound to an engine. Subclasses provide
    `_multiply(a, b, plan)`; `multiply` validates shapes, fills in the
    engine's defaults and logs.
    """

    def __init__(self, engine: Engine, algorithm):
        self.engine = engine
        self.algorithm = algorithm

    def plan(self, **overrides) -> MatmulPlan:
        params = dict(algorithm=self.algorithm, block_size=self.engine.block_size, n_min=self.engine.n_min,
                      workers=self.engine.workers, executor=self.engine.executor)
        params.update(overrides)
        return MatmulPlan(**params)

    def multiply(self, a, b, plan: MatmulPlan = None) -> DenseMatrix:
        """
        C = A B
        :param a: m x l DenseMatrix or BlockView
        :param b: l x n DenseMatrix or BlockView
        :param MatmulPlan plan: tuning; defaults to the engine's worker budget
        :return: new m x n DenseMatrix
        """
        check_conforming(a, b, self.algorithm)
        if plan is None:
            plan = self.plan()
        elif plan.algorithm != self.algorithm:
            plan = replace(plan, algorithm=self.algorithm)
        logger.debug('%s: %dx%d by %dx%d, bs=%d n_min=%d workers=%d', self.algorithm,
                     a.rows, a.cols, b.rows, b.cols, plan.block_size, plan.n_min, plan.workers)
        return self._multiply(a, b, plan)

    def _multiply(self, a, b, plan):
        raise NotImplementedError('_multiply method not implemented')

    def __call__(self, a, b, plan: MatmulPlan = None) -> DenseMatrix:
        return self.multiply(a, b, plan)
