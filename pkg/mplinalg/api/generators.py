import logging
from fractions import Fraction

from mplinalg.internal.exceptions import DimensionError, PlanError
from mplinalg.internal.fields import Field
from mplinalg.internal.matrix import DenseMatrix
from mplinalg.internal.oracles import bench_product_sum
from mplinalg.internal.utils import SplitMix64

logger = logging.getLogger(__name__)


def _check_size(n):
    if n < 1:
        raise DimensionError('matrix size must be >= 1, got {}'.format(n), code='bad_size')


def generate_bench_pair(n, field: Field):
    """
    A = [sqrt(5)(i + j - 1)], B = [sqrt(3)(n - i)] with 1-based i, j. The
    square roots come from the field's own sqrt of exact integers.
    """
    _check_size(n)
    sqrt5 = field.sqrt(field.from_int(5))
    sqrt3 = field.sqrt(field.from_int(3))
    a = DenseMatrix([[sqrt5 * field.from_int(i + j - 1) for j in range(1, n + 1)] for i in range(1, n + 1)],
                    field)
    b_rows = []
    for i in range(1, n + 1):
        v = sqrt3 * field.from_int(n - i)
        b_rows.append([v] * n)
    return a, DenseMatrix(b_rows, field)


def generate_random(n, seed, field: Field) -> DenseMatrix:
    """Entries uniform in [-1, 1) from SplitMix64(seed), drawn in row-major order"""
    _check_size(n)
    rng = SplitMix64(seed)
    return DenseMatrix([[field.from_float(rng.uniform_pm1()) for _ in range(n)] for _ in range(n)], field)


def generate_dominant(n, seed, field: Field) -> DenseMatrix:
    """generate_random(n, seed) + n I, strictly diagonally dominant by rows"""
    m = generate_random(n, seed, field)
    shift = field.from_int(n)
    for i in range(n):
        m[i, i] = m[i, i] + shift
    return m


def generate_lotkin(n, field: Field) -> DenseMatrix:
    """First row ones, then 1 / (i + j - 1) rounded to the field"""
    _check_size(n)
    one = field.one()
    rows = [[one] * n]
    for i in range(2, n + 1):
        rows.append([field.from_fraction(Fraction(1, i + j - 1)) for j in range(1, n + 1)])
    return DenseMatrix(rows, field)


def exact_bench_product(n, i, j, field: Field):
    """
    c_ij of the bench pair product: sqrt(15) S(i, n) with S an exact integer.
    Independent of j.
    """
    if not (1 <= i <= n and 1 <= j <= n):
        raise DimensionError('index ({}, {}) outside 1..{}'.format(i, j, n), code='bad_index')
    return field.sqrt(field.from_int(15)) * field.from_int(bench_product_sum(n, i))


def exact_bench_matrix(n, field: Field) -> DenseMatrix:
    _check_size(n)
    rows = []
    for i in range(1, n + 1):
        v = exact_bench_product(n, i, 1, field)
        rows.append([v] * n)
    return DenseMatrix(rows, field)


class Generators:
    """Test matrices in the session's precision"""

    def __init__(self, engine):
        self.engine = engine

    def bench_pair(self, n):
        return generate_bench_pair(n, self.engine.field)

    def random(self, n, seed):
        return generate_random(n, seed, self.engine.field)

    def dominant(self, n, seed):
        return generate_dominant(n, seed, self.engine.field)

    def lotkin(self, n):
        return generate_lotkin(n, self.engine.field)

    def exact_bench_product(self, n, i, j):
        return exact_bench_product(n, i, j, self.engine.field)

    def exact_bench_matrix(self, n):
        return exact_bench_matrix(n, self.engine.field)

    def matrix(self, kind, n, seed=None):
        """Square matrix by kind: 'random', 'dominant' or 'lotkin' ('bench' gives the A of the bench pair)"""
        if kind == 'random':
            return self.random(n, seed)
        if kind == 'dominant':
            return self.dominant(n, seed)
        if kind == 'lotkin':
            return self.lotkin(n)
        if kind == 'bench':
            return self.bench_pair(n)[0]
        raise PlanError('unknown matrix kind {!r}'.format(kind), code='unknown_kind')
