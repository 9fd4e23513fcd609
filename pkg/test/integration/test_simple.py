import logging

import pytest
from mplinalg import DenseMatrix, DimensionError, LinalgSession
from mplinalg.internal.matrix import max_componentwise_rel_error

logger = logging.getLogger(__name__)


@pytest.mark.parametrize('precision', ['d', 'dd', 'qd'])
def test_integer_product(precision):
    ls = LinalgSession(precision=precision)
    a = DenseMatrix.from_rows([[1, 2], [3, 4]], ls.field)
    b = DenseMatrix.from_rows([[5, 6], [7, 8]], ls.field)
    assert ls.simple(a, b) == DenseMatrix.from_rows([[19, 22], [43, 50]], ls.field)


def test_bench_pair_qd(ls_qd):
    n = 16
    a, b = ls_qd.generators.bench_pair(n)
    c = ls_qd.matmul(a, b, algorithm='simple')
    err = max_componentwise_rel_error(c, ls_qd.generators.exact_bench_matrix(n))
    assert float(err) <= 64 * ls_qd.field.eps


def test_rectangular(ls):
    a = ls.generators.random(5, 1).crop(3, 5)
    b = ls.generators.random(5, 2).crop(5, 2)
    c = ls.simple(a, b)
    assert c.shape == (3, 2)
    acc = ls.field.zero()
    for k in range(5):
        acc = acc + a[2, k] * b[k, 1]
    assert c[2, 1] == acc


def test_not_conforming(ls):
    a = ls.generators.random(3, 1)
    with pytest.raises(DimensionError) as e:
        ls.simple(a, a.crop(2, 3))
    assert e.value.code == 'shape_mismatch'


def test_parallel_is_bitwise_serial(ls, ls_parallel):
    a = ls.generators.random(23, 5)
    b = ls.generators.random(23, 6)
    assert ls_parallel.simple(a, b) == ls.simple(a, b)


def test_multiplication_count(counting):
    ls = counting()
    a, b = ls.generators.random(64, 1), ls.generators.random(64, 2)
    ls.reset_counts()
    ls.matmul(a, b, algorithm='simple')
    counts = ls.counts()
    assert counts['mul_count'] == 262144
    assert counts['add_count'] == 262144
    assert counts['div_count'] == 0
