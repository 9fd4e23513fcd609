"""
Pivot-free LU decomposition of dense matrices.

The blocked variant factors a K x K panel, solves the two triangular
systems bordering it, and updates the trailing matrix with one matrix
multiplication whose algorithm comes from the plan.
"""

import logging
import time
from dataclasses import dataclass, field as dataclass_field, replace
from functools import partial

from mplinalg.internal.constants import DEFAULT_N_MIN
from mplinalg.internal.engine import SectionRunner, run_parallel_sections
from mplinalg.internal.exceptions import DimensionError, PlanError, SingularMatrixError
from mplinalg.internal.matrix import (DenseMatrix, column_matrix, mat_sub, mat_vec, max_componentwise_rel_error,
                                      norm_1, norm_inf, vector_norm_inf)
from mplinalg.internal.oracles import exact_condition_number_1, to_exact_rows
from mplinalg.internal.utils import split_ranges

from .base import MatmulPlan
from .matmul import matmul
from .simple import matmul_simple

logger = logging.getLogger(__name__)

EXACT_CONDITION_LIMIT = 16


@dataclass(frozen=True)
class LuPlan:
    """
    Panel width K = alpha * n_min. The trailing update multiplies with
    `update`, which gets the full worker budget of the plan.
    """
    n_min: int = DEFAULT_N_MIN
    alpha: int = 1
    update: MatmulPlan = dataclass_field(default=None)
    workers: int = 1
    executor: str = 'thread'

    def __post_init__(self):
        if self.alpha < 1:
            raise PlanError('alpha must be >= 1, got {}'.format(self.alpha), code='bad_alpha')
        if self.n_min < 2:
            raise PlanError('n_min must be >= 2, got {}'.format(self.n_min), code='bad_n_min')
        if self.workers < 1:
            raise PlanError('workers must be >= 1, got {}'.format(self.workers), code='bad_workers')
        update = self.update or MatmulPlan(algorithm='block', block_size=self.n_min, n_min=self.n_min)
        object.__setattr__(self, 'update', replace(update, workers=self.workers, executor=self.executor))

    @property
    def block_size(self):
        return self.alpha * self.n_min


@dataclass
class LuFactors:
    """Unit lower L strictly below the diagonal and U on and above it, in one matrix"""
    packed: DenseMatrix

    @property
    def n(self):
        return self.packed.rows

    def lower(self) -> DenseMatrix:
        field = self.packed.field
        zero, one = field.zero(), field.one()
        return DenseMatrix([[v if j < i else (one if j == i else zero) for j, v in enumerate(r)]
                            for i, r in enumerate(self.packed.data)], field)

    def upper(self) -> DenseMatrix:
        zero = self.packed.field.zero()
        return DenseMatrix([[v if j >= i else zero for j, v in enumerate(r)]
                            for i, r in enumerate(self.packed.data)], self.packed.field)

    def reconstruct(self) -> DenseMatrix:
        return matmul_simple(self.lower(), self.upper())

    def reconstruction_error(self, a):
        """||L U - A||_inf / ||A||_inf"""
        return norm_inf(mat_sub(self.reconstruct(), a)) / norm_inf(a)


@dataclass
class SolveReport:
    x_hat: list
    max_rel_error: object
    residual_norm: object
    seconds: float


def _check_square(a, op_name):
    if a.rows != a.cols:
        raise DimensionError('{}: needs a square matrix, got {}x{}'.format(op_name, a.rows, a.cols),
                             code='not_square')


def _eliminate(data, start, stop):
    """Doolittle elimination of data[start:stop][start:stop] in place, k-i-j order"""
    for k in range(start, stop):
        rk = data[k]
        pivot = rk[k]
        if not pivot:
            raise SingularMatrixError('zero pivot at index {}'.format(k), index=k)
        for i in range(k + 1, stop):
            ri = data[i]
            lik = ri[k] / pivot
            ri[k] = lik
            for j in range(k + 1, stop):
                ri[j] = ri[j] - lik * rk[j]


def eliminate_rows(pivot_row, rows, k):
    """One elimination step applied to a band of rows below pivot row k; returns the new rows"""
    pivot = pivot_row[k]
    out = []
    for r in rows:
        r = list(r)
        lik = r[k] / pivot
        r[k] = lik
        for j in range(k + 1, len(r)):
            r[j] = r[j] - lik * pivot_row[j]
        out.append(r)
    return out


def solve_unit_lower(l_rows, b_rows):
    """X = L^-1 B for unit lower L given by the strict lower part of l_rows"""
    x = [list(r) for r in b_rows]
    for i, xi in enumerate(x):
        li = l_rows[i]
        for t in range(i):
            lit = li[t]
            xt = x[t]
            for c in range(len(xi)):
                xi[c] = xi[c] - lit * xt[c]
    return x


def solve_upper_right(u_rows, b_rows):
    """X = B U^-1 for upper U given by the upper part of u_rows, row by row"""
    x = [list(r) for r in b_rows]
    kb = len(u_rows)
    for r in x:
        for j in range(kb):
            s = r[j]
            for t in range(j):
                s = s - r[t] * u_rows[t][j]
            r[j] = s / u_rows[j][j]
    return x


def lu_unblocked(a) -> LuFactors:
    _check_square(a, 'lu_unblocked')
    work = a.as_dense().copy()
    _eliminate(work.data, 0, work.rows)
    return LuFactors(work)


def lu_rowwise(a, workers=1, executor='thread') -> LuFactors:
    """
    Unblocked elimination whose row updates at every step are split across
    workers. Results are identical to :func:`lu_unblocked`.
    """
    _check_square(a, 'lu_rowwise')
    work = a.as_dense().copy()
    data = work.data
    n = work.rows
    with SectionRunner(workers, executor) as runner:
        for k in range(n):
            rk = data[k]
            if not rk[k]:
                raise SingularMatrixError('zero pivot at index {}'.format(k), index=k)
            if k + 1 == n:
                break
            bands = [(k + 1 + s, k + 1 + e) for s, e in split_ranges(n - k - 1, workers)]
            tasks = [partial(eliminate_rows, rk, data[s:e], k) for s, e in bands]
            for (s, e), rows in zip(bands, runner.run(tasks)):
                data[s:e] = rows
    return LuFactors(work)


def lu_blocked(a, plan: LuPlan) -> LuFactors:
    _check_square(a, 'lu_blocked')
    work = a.as_dense().copy()
    data = work.data
    n = work.rows
    field = work.field
    k_size = plan.block_size
    workers = plan.workers
    for p in range(0, n, k_size):
        q = min(p + k_size, n)
        logger.debug('lu panel [%d, %d) of %d', p, q, n)
        _eliminate(data, p, q)
        if q == n:
            break
        panel = [r[p:q] for r in data[p:q]]

        # U12 = L11^-1 A12, split over columns
        col_bands = [(q + s, q + e) for s, e in split_ranges(n - q, workers)]
        tasks = [partial(solve_unit_lower, panel, [r[s:e] for r in data[p:q]]) for s, e in col_bands]
        for (s, e), block in zip(col_bands, run_parallel_sections(tasks, workers, plan.executor)):
            for r, new in zip(data[p:q], block):
                r[s:e] = new

        # L21 = A21 U11^-1, split over rows
        row_bands = [(q + s, q + e) for s, e in split_ranges(n - q, workers)]
        tasks = [partial(solve_upper_right, panel, [r[p:q] for r in data[s:e]]) for s, e in row_bands]
        for (s, e), block in zip(row_bands, run_parallel_sections(tasks, workers, plan.executor)):
            for r, new in zip(data[s:e], block):
                r[p:q] = new

        # A22 -= L21 U12
        l21 = work.view(q, p, n - q, q - p)
        u12 = work.view(p, q, q - p, n - q)
        product = matmul(l21, u12, plan.update)
        for r, pr in zip(data[q:], product.data):
            r[q:] = [x - y for x, y in zip(r[q:], pr)]
    return LuFactors(DenseMatrix(data, field))


def forward_substitution(factors: LuFactors, b):
    """y = L^-1 b with the unit lower factor"""
    data = factors.packed.data
    y = list(b)
    for i in range(len(y)):
        s = y[i]
        ri = data[i]
        for t in range(i):
            s = s - ri[t] * y[t]
        y[i] = s
    return y


def back_substitution(factors: LuFactors, y):
    """x = U^-1 y with the upper factor"""
    data = factors.packed.data
    n = len(y)
    x = list(y)
    for i in range(n - 1, -1, -1):
        s = x[i]
        ri = data[i]
        for t in range(i + 1, n):
            s = s - ri[t] * x[t]
        x[i] = s / ri[i]
    return x


def build_rhs(a, x_true):
    """b = A x_true with the simple algorithm in the working precision"""
    return [r[0] for r in matmul_simple(a, column_matrix(x_true, a.field)).data]


def _check_system(a, b, op_name):
    _check_square(a, op_name)
    if len(b) != a.rows:
        raise DimensionError('right hand side has length {}, expected {}'.format(len(b), a.rows),
                             code='shape_mismatch')


def solve(a, b, plan: LuPlan, x_true=None) -> SolveReport:
    """
    Factor with :func:`lu_blocked`, then forward and back substitution.
    `seconds` covers the factorization and both substitutions.
    """
    _check_system(a, b, 'solve')
    return _solve_with(a, b, partial(lu_blocked, plan=plan), x_true)


def solve_rowwise(a, b, workers=1, executor='thread', x_true=None) -> SolveReport:
    """:func:`solve` with the row-wise parallel baseline factorization"""
    _check_system(a, b, 'solve_rowwise')
    return _solve_with(a, b, partial(lu_rowwise, workers=workers, executor=executor), x_true)


def _solve_with(a, b, factor, x_true) -> SolveReport:
    started = time.perf_counter()
    factors = factor(a)
    x_hat = back_substitution(factors, forward_substitution(factors, b))
    seconds = time.perf_counter() - started

    field = a.field
    residual = [ri - bi for ri, bi in zip(mat_vec(a, x_hat), b)]
    denominator = norm_inf(a) * vector_norm_inf(x_hat, field)
    residual_norm = vector_norm_inf(residual, field) / denominator if denominator else field.zero()
    max_rel_error = None
    if x_true is not None:
        max_rel_error = max_componentwise_rel_error(column_matrix(x_hat, field), column_matrix(x_true, field))
    return SolveReport(x_hat=x_hat, max_rel_error=max_rel_error, residual_norm=residual_norm, seconds=seconds)


def condition_number_1(a, exact=None):
    """
    ||A||_1 ||A^-1||_1. Small matrices (n <= 16) are inverted exactly in
    rational arithmetic unless exact=False; otherwise A^-1 is formed column
    by column from unit vector solves with the pivot-free factors.
    """
    _check_square(a, 'condition_number_1')
    field = a.field
    if exact is None:
        exact = a.rows <= EXACT_CONDITION_LIMIT
    if exact:
        return field.from_fraction(exact_condition_number_1(to_exact_rows(a)))

    factors = lu_unblocked(a)
    n = a.rows
    zero, one = field.zero(), field.one()
    inverse_norm = zero
    for j in range(n):
        e = [one if i == j else zero for i in range(n)]
        column = back_substitution(factors, forward_substitution(factors, e))
        s = zero
        for v in column:
            s = s + abs(v)
        if s > inverse_norm:
            inverse_norm = s
    return norm_1(a) * inverse_norm


class LuSolver:
    """LU decompositions and linear solves in the session's precision"""

    def __init__(self, engine):
        self.engine = engine

    def plan(self, **overrides) -> LuPlan:
        params = dict(n_min=self.engine.n_min, workers=self.engine.workers, executor=self.engine.executor)
        params.update(overrides)
        return LuPlan(**params)

    def lu_unblocked(self, a) -> LuFactors:
        return lu_unblocked(a)

    def lu_blocked(self, a, plan: LuPlan = None) -> LuFactors:
        plan = plan or self.plan()
        logger.debug('lu_blocked n=%d K=%d update=%s workers=%d', a.rows, plan.block_size,
                     plan.update.algorithm, plan.workers)
        return lu_blocked(a, plan)

    def lu_rowwise(self, a, workers=None) -> LuFactors:
        return lu_rowwise(a, workers or self.engine.workers, self.engine.executor)

    def solve(self, a, b, plan: LuPlan = None, x_true=None) -> SolveReport:
        return solve(a, b, plan or self.plan(), x_true=x_true)

    def solve_rowwise(self, a, b, workers=None, x_true=None) -> SolveReport:
        return solve_rowwise(a, b, workers or self.engine.workers, self.engine.executor, x_true=x_true)

    def build_rhs(self, a, x_true):
        return build_rhs(a, x_true)

    def condition_number_1(self, a, exact=None):
        return condition_number_1(a, exact=exact)

    def true_solution(self, n):
        """[0, 1, ..., n-1]"""
        field = self.engine.field
        return [field.from_int(i) for i in range(n)]
