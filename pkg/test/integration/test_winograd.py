import logging

import pytest
from mplinalg import DenseMatrix, LinalgSession
from mplinalg.internal.matrix import max_componentwise_rel_error, max_scaled_error

logger = logging.getLogger(__name__)


def test_integer_product_at_leaf(ls):
    a = DenseMatrix.from_rows([[1, 2], [3, 4]], ls.field)
    b = DenseMatrix.from_rows([[5, 6], [7, 8]], ls.field)
    assert ls.winograd(a, b) == DenseMatrix.from_rows([[19, 22], [43, 50]], ls.field)


@pytest.mark.parametrize('n', [4, 6, 9, 16])
def test_integer_products_are_exact(n):
    ls = LinalgSession(precision='qd', n_min=2, block_size=2)
    a = DenseMatrix.from_rows([[(3 * i + j) % 9 - 4 for j in range(n)] for i in range(n)], ls.field)
    b = DenseMatrix.from_rows([[(i * j) % 4 - 1 for j in range(n)] for i in range(n)], ls.field)
    assert ls.winograd(a, b) == ls.simple(a, b)


@pytest.mark.parametrize('n', [1, 8, 15, 40, 64])
def test_random_against_simple(ls, n):
    a = ls.generators.random(n, 31)
    b = ls.generators.random(n, 32)
    err = max_scaled_error(ls.winograd(a, b), ls.simple(a, b))
    assert float(err) <= 4 * n * ls.field.eps


def test_random_against_simple_qd(ls_qd):
    n = 20
    a = ls_qd.generators.random(n, 31)
    b = ls_qd.generators.random(n, 32)
    err = max_scaled_error(ls_qd.winograd(a, b), ls_qd.simple(a, b))
    assert float(err) <= 4 * n * ls_qd.field.eps


def test_bench_pair_dd(ls):
    n = 40
    a, b = ls.generators.bench_pair(n)
    err = max_componentwise_rel_error(ls.winograd(a, b), ls.generators.exact_bench_matrix(n))
    assert float(err) <= 4 * n * ls.field.eps


@pytest.mark.parametrize('workers', [2, 4, 8])
def test_parallel_is_bitwise_serial(ls, workers):
    a = ls.generators.random(35, 7)
    b = ls.generators.random(35, 8)
    assert ls.winograd(a, b, ls.winograd.plan(workers=workers)) == ls.winograd(a, b)


def test_one_level_counts(counting):
    ls = counting()
    a, b = ls.generators.random(64, 1), ls.generators.random(64, 2)
    ls.reset_counts()
    ls.winograd(a, b)
    counts = ls.counts()
    assert counts['mul_count'] == 229376
    assert counts['add_count'] == 7 * 32 ** 3 + 15 * 32 ** 2


def test_fewer_additions_than_strassen(counting):
    ls = counting(precision='d')
    a, b = ls.generators.random(128, 1), ls.generators.random(128, 2)
    ls.winograd(a, b)
    winograd = ls.counts()
    ls.reset_counts()
    ls.strassen(a, b)
    strassen = ls.counts()
    assert winograd['mul_count'] == strassen['mul_count'] == 1605632
    assert winograd['add_count'] < strassen['add_count']


@pytest.mark.slow
def test_three_level_counts(counting):
    ls = counting(precision='d')
    a, b = ls.generators.random(256, 1), ls.generators.random(256, 2)
    ls.winograd(a, b)
    assert ls.counts()['mul_count'] == 11239424
