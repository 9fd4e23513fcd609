"""
Property suite behind ``mplinalg-bench verify``. Every check raises
:class:`VerificationError` with the failing property in its message, or
returns a one-line summary of what it measured.
"""

import logging
import time
from dataclasses import dataclass
from typing import Optional

from mplinalg.api.base import MatmulPlan
from mplinalg.api.lu import LuPlan
from mplinalg.internal.constants import ALGORITHMS, RECURSIVE_ALGORITHMS
from mplinalg.internal.exceptions import MpLinalgError, VerificationError
from mplinalg.internal.matrix import (DenseMatrix, load_matrix, mat_sub, max_componentwise_rel_error,
                                      max_scaled_error, norm_inf)
from mplinalg.internal.oracles import exact_condition_number_1, exact_lotkin, mp_sqrt, relative_distance
from mplinalg.session import LinalgSession

logger = logging.getLogger(__name__)

LOTKIN_SIZES = [4, 6, 8, 10, 12]

@dataclass
class VerifyContext:
    n: int
    n_min: int
    seed: int
    workers: int
    executor: str = 'thread'
    product_file: Optional[str] = None

    @classmethod
    def from_config(cls, config):
        top = max(config.workers)
        return cls(n=config.sizes[0], n_min=config.n_min, seed=config.seed, workers=top if top > 1 else 4,
                   executor=config.executor, product_file=config.product_file)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


def _session(ctx, precision='dd', workers=1, count_ops=False):
    return LinalgSession(precision=precision, workers=workers, block_size=ctx.n_min, n_min=ctx.n_min,
                         count_ops=count_ops, executor='thread' if count_ops else ctx.executor)


def _require(condition, message):
    if not condition:
        raise VerificationError(message, code='property_failed')


def check_scalar_sqrt(ctx):
    """sqrt(2) in DD and QD against a 400 bit reference"""
    details = []
    for precision, bound in (('dd', 8), ('qd', 16)):
        field = _session(ctx, precision).field
        got = field.to_fraction(field.sqrt(field.from_int(2)))
        err = relative_distance(got, mp_sqrt(2))
        _require(err <= bound * field.eps,
                 '{} sqrt(2) relative error {:.3e} above {} eps'.format(precision, err, bound))
        details.append('{} {:.2e}'.format(precision, err))
    return 'sqrt(2) relative error ' + ', '.join(details)


def check_integer_products(ctx):
    """Small integer operands multiply exactly in every algorithm and precision"""
    for precision in ('dd', 'qd'):
        session = _session(ctx, precision)
        a = DenseMatrix.from_rows([[1, 2], [3, 4]], session.field)
        b = DenseMatrix.from_rows([[5, 6], [7, 8]], session.field)
        expected = DenseMatrix.from_rows([[19, 22], [43, 50]], session.field)
        big_a = DenseMatrix.from_rows([[(3 * i + j) % 7 - 3 for j in range(9)] for i in range(9)], session.field)
        big_b = DenseMatrix.from_rows([[(i * j) % 5 - 2 for j in range(9)] for i in range(9)], session.field)
        big_expected = session.matmul(big_a, big_b, algorithm='simple')
        for algorithm in ALGORITHMS:
            got = session.matmul(a, b, algorithm=algorithm, n_min=2)
            _require(got == expected, '{} {} 2x2 integer product is not exact'.format(precision, algorithm))
            got = session.matmul(big_a, big_b, algorithm=algorithm, n_min=2, block_size=2)
            _require(got == big_expected, '{} {} 9x9 integer product is not exact'.format(precision, algorithm))
    return 'all algorithms exact on integer operands'


def check_oracle_equivalence(ctx):
    """
    Every algorithm against Simple on random operands within 4 n eps: Block
    componentwise, the recursive ones normwise
    """
    worst = 0.0
    for precision, n in (('dd', ctx.n), ('qd', max(1, ctx.n // 2))):
        session = _session(ctx, precision)
        eps = session.field.eps
        for size in sorted({1, 7, ctx.n_min + 1, n}):
            a = session.generators.random(size, ctx.seed)
            b = session.generators.random(size, ctx.seed + 1)
            reference = session.matmul(a, b, algorithm='simple')
            for algorithm in ALGORITHMS:
                got = session.matmul(a, b, algorithm=algorithm)
                bound = 4 * size * eps
                if algorithm in RECURSIVE_ALGORITHMS:
                    err = float(max_scaled_error(got, reference))
                else:
                    err = float(max_componentwise_rel_error(got, reference))
                _require(err <= bound, '{} {} n={} differs from simple by {:.3e}'.format(
                    precision, algorithm, size, err))
                worst = max(worst, err / eps)
    return 'largest deviation from simple {:.1f} eps'.format(worst)


def check_bench_closed_form(ctx):
    """Bench pair products against sqrt(15) S(i, n), componentwise"""
    session = _session(ctx, 'dd')
    eps = session.field.eps
    n = ctx.n
    a, b = session.generators.bench_pair(n)
    reference = session.generators.exact_bench_matrix(n)
    details = []
    for algorithm in ALGORITHMS:
        err = float(max_componentwise_rel_error(session.matmul(a, b, algorithm=algorithm), reference))
        _require(err <= 4 * n * eps, '{} bench product n={} error {:.3e}'.format(algorithm, n, err))
        details.append('{} {:.2e}'.format(algorithm, err))
    return ', '.join(details)


def _law_size(ctx):
    depth = 1
    while ctx.n_min * 2 ** (depth + 1) <= ctx.n:
        depth += 1
    return ctx.n_min * 2 ** depth, depth


def check_count_law(ctx):
    """7^d n_min^3 multiplications for the recursive algorithms, n^3 for Block; Winograd adds fewer"""
    n, depth = _law_size(ctx)
    session = _session(ctx, 'dd', count_ops=True)
    a, b = session.generators.bench_pair(n)
    counts = {}
    for algorithm in ('block', 'strassen', 'winograd'):
        session.reset_counts()
        session.matmul(a, b, algorithm=algorithm)
        counts[algorithm] = session.counts()
    expected = 7 ** depth * ctx.n_min ** 3
    _require(counts['block']['mul_count'] == n ** 3,
             'block n={} did {} multiplications, expected {}'.format(n, counts['block']['mul_count'], n ** 3))
    for algorithm in RECURSIVE_ALGORITHMS:
        got = counts[algorithm]['mul_count']
        _require(got == expected, '{} n={} did {} multiplications, expected {}'.format(algorithm, n, got, expected))
    _require(counts['winograd']['add_count'] < counts['strassen']['add_count'],
             'winograd n={} did {} additions, strassen {}'.format(
                 n, counts['winograd']['add_count'], counts['strassen']['add_count']))
    return 'n={}: {} multiplications (block {}), adds winograd {} < strassen {}'.format(
        n, expected, n ** 3, counts['winograd']['add_count'], counts['strassen']['add_count'])


def check_determinism(ctx):
    """Bitwise equal output for one worker and for the full worker budget"""
    serial = _session(ctx, 'dd')
    parallel = _session(ctx, 'dd', workers=ctx.workers)
    a = serial.generators.random(ctx.n, ctx.seed)
    b = serial.generators.random(ctx.n, ctx.seed + 1)
    for algorithm in ALGORITHMS:
        _require(serial.matmul(a, b, algorithm=algorithm) == parallel.matmul(a, b, algorithm=algorithm),
                 '{} n={} differs between 1 and {} workers'.format(algorithm, ctx.n, ctx.workers))

    update = MatmulPlan(algorithm='strassen', block_size=ctx.n_min, n_min=ctx.n_min)
    one = serial.lu.lu_blocked(a, LuPlan(n_min=ctx.n_min, update=update, workers=1))
    many = parallel.lu.lu_blocked(a, LuPlan(n_min=ctx.n_min, update=update, workers=ctx.workers,
                                            executor=ctx.executor))
    _require(one.packed == many.packed, 'blocked lu n={} differs between 1 and {} workers'.format(
        ctx.n, ctx.workers))
    _require(parallel.lu.lu_rowwise(a).packed == serial.lu.lu_unblocked(a).packed,
             'row-wise lu n={} differs from unblocked lu'.format(ctx.n))
    return 'matmul and lu identical for 1 and {} workers at n={}'.format(ctx.workers, ctx.n)


def check_padding(ctx):
    """An odd size equals the zero padded even size, cropped"""
    session = _session(ctx, 'dd')
    m = ctx.n_min + 1 if ctx.n_min % 2 == 0 else ctx.n_min + 2
    a = session.generators.random(m, ctx.seed)
    b = session.generators.random(m, ctx.seed + 1)
    for algorithm in RECURSIVE_ALGORITHMS:
        odd = session.matmul(a, b, algorithm=algorithm)
        even = session.matmul(a.pad(m + 1, m + 1), b.pad(m + 1, m + 1), algorithm=algorithm)
        _require(odd == even.crop(m, m), '{} n={} differs from its padded form'.format(algorithm, m))
    return 'strassen and winograd at n={} match the padded product'.format(m)


def check_lu_fidelity(ctx):
    """
    Blocked factors of a diagonally dominant matrix against unblocked ones for
    every panel width, plus update independence of random solves
    """
    session = _session(ctx, 'dd')
    eps = session.field.eps
    n = ctx.n
    dominant = session.generators.dominant(n, ctx.seed)
    reference = session.lu.lu_unblocked(dominant)
    ref_l, ref_u = reference.lower(), reference.upper()
    a = session.generators.random(n, ctx.seed)
    x_true = session.lu.true_solution(n)
    b = session.lu.build_rhs(a, x_true)
    worst = 0.0
    alphas = sorted(set(range(1, max(1, n // ctx.n_min) + 1)) | {max(1, -(-n // ctx.n_min))})
    for alpha in alphas:
        errors = {}
        for update in ('block', 'strassen', 'winograd'):
            plan = LuPlan(n_min=ctx.n_min, alpha=alpha,
                          update=MatmulPlan(algorithm=update, block_size=ctx.n_min, n_min=ctx.n_min))
            factors = session.lu.lu_blocked(dominant, plan)
            for got, ref, name in ((factors.lower(), ref_l, 'L'), (factors.upper(), ref_u, 'U')):
                err = float(norm_inf(mat_sub(got, ref)) / norm_inf(ref))
                _require(err <= 10 * n * eps, 'alpha={} update={} factor {} differs by {:.3e}'.format(
                    alpha, update, name, err))
                worst = max(worst, err / eps)
            rec = float(factors.reconstruction_error(dominant))
            _require(rec <= 100 * n * eps, 'alpha={} update={} reconstruction error {:.3e}'.format(
                alpha, update, rec))
            errors[update] = float(session.lu.solve(a, b, plan, x_true=x_true).max_rel_error)
        low, high = min(errors.values()), max(errors.values())
        _require(high <= 10 * low or high <= 10 * n * eps,
                 'alpha={} solution errors differ by more than 10x: {}'.format(alpha, errors))
    return 'factors within {:.1f} eps of unblocked lu for alpha in {}'.format(worst, alphas)


def check_lotkin(ctx):
    """QD Lotkin solves lose accuracy as the condition number grows"""
    session = _session(ctx, 'qd')
    previous_error = None
    previous_cond = None
    for n in LOTKIN_SIZES:
        a = session.generators.lotkin(n)
        x_true = session.lu.true_solution(n)
        b = session.lu.build_rhs(a, x_true)
        report = session.lu.solve(a, b, LuPlan(n_min=2, alpha=2), x_true=x_true)
        err = float(report.max_rel_error)
        cond = exact_condition_number_1(exact_lotkin(n))
        estimate = session.field.to_fraction(session.lu.condition_number_1(a, exact=False))
        _require(abs(estimate - cond) <= cond / 1000,
                 'lotkin({}) cond_1 {:.4e} against exact {:.4e}'.format(n, float(estimate), float(cond)))
        if previous_error is not None:
            _require(err >= previous_error, 'lotkin({}) error {:.3e} below lotkin({}) error {:.3e}'.format(
                n, err, LOTKIN_SIZES[LOTKIN_SIZES.index(n) - 1], previous_error))
            _require(cond > previous_cond, 'lotkin({}) cond_1 did not grow'.format(n))
        previous_error, previous_cond = err, cond
    return 'max relative error nondecreasing up to {:.3e} at n={}'.format(previous_error, LOTKIN_SIZES[-1])


def check_product_file(ctx):
    """A stored bench product against the closed form"""
    c = load_matrix(ctx.product_file)
    _require(c.rows == c.cols, '{} is not square'.format(ctx.product_file))
    session = LinalgSession(precision=c.field.name)
    reference = session.generators.exact_bench_matrix(c.rows)
    err = float(max_componentwise_rel_error(c, reference))
    _require(err <= 4 * c.rows * c.field.eps, '{} error {:.3e} against the closed form'.format(
        ctx.product_file, err))
    return '{} n={} error {:.2e}'.format(ctx.product_file, c.rows, err)


CHECKS = [
    ('scalar_sqrt', check_scalar_sqrt),
    ('integer_products', check_integer_products),
    ('oracle_equivalence', check_oracle_equivalence),
    ('bench_closed_form', check_bench_closed_form),
    ('count_law', check_count_law),
    ('determinism', check_determinism),
    ('padding', check_padding),
    ('lu_fidelity', check_lu_fidelity),
    ('lotkin_growth', check_lotkin),
]


def run_checks(config, checks=None):
    ctx = VerifyContext.from_config(config)
    checks = list(checks or CHECKS)
    if ctx.product_file:
        checks.append(('product_file', check_product_file))
    results = []
    for name, check in checks:
        logger.info('verify: running %s', name)
        started = time.perf_counter()
        try:
            detail = check(ctx)
            passed = True
        except VerificationError as e:
            detail, passed = e.message, False
        except MpLinalgError as e:
            detail, passed = str(e), False
        results.append(CheckResult(name=name, passed=passed, detail=detail,
                                   seconds=time.perf_counter() - started))
    return results
