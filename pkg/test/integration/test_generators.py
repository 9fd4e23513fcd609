import logging
from fractions import Fraction

import pytest
from mplinalg import DimensionError, LinalgSession, PlanError
from mplinalg.internal.oracles import exact_condition_number_1, exact_lotkin

logger = logging.getLogger(__name__)


def test_bench_pair_entries(ls):
    a, b = ls.generators.bench_pair(3)
    sqrt5 = ls.field.sqrt(ls.field.from_int(5))
    sqrt3 = ls.field.sqrt(ls.field.from_int(3))
    assert a[0, 0] == sqrt5
    assert a[2, 1] == sqrt5 * ls.field.from_int(4)
    assert b[0, 2] == sqrt3 * ls.field.from_int(2)
    assert b.row(2) == [0, 0, 0]


def test_exact_bench_product(ls):
    sqrt15 = ls.field.sqrt(ls.field.from_int(15))
    assert ls.generators.exact_bench_product(2, 1, 1) == sqrt15
    assert ls.generators.exact_bench_product(3, 2, 3) == sqrt15 * ls.field.from_int(7)
    with pytest.raises(DimensionError):
        ls.generators.exact_bench_product(3, 4, 1)


def test_random_range_and_seed(ls):
    a = ls.generators.random(64, 42)
    values = [float(v) for r in a.iter_rows() for v in r]
    assert all(-1.0 <= v <= 1.0 for v in values)
    assert ls.generators.random(64, 42) == a
    assert ls.generators.random(64, 43) != a


def test_random_is_precision_independent(ls, ls_qd):
    a = ls.generators.random(5, 9)
    q = ls_qd.generators.random(5, 9)
    assert [ls.field.to_fraction(v) for v in a.row(3)] == [ls_qd.field.to_fraction(v) for v in q.row(3)]


def test_dominant(ls):
    a = ls.generators.dominant(6, 1)
    r = ls.generators.random(6, 1)
    assert a[2, 2] == r[2, 2] + 6
    assert a[2, 3] == r[2, 3]


def test_lotkin(ls_qd):
    a = ls_qd.generators.lotkin(4)
    assert a.row(0) == [1, 1, 1, 1]
    assert ls_qd.field.to_fraction(a[1, 0]) == Fraction(1, 2)
    third = ls_qd.field.to_fraction(a[1, 1])
    assert abs(third - Fraction(1, 3)) <= Fraction(1, 3) * Fraction(ls_qd.field.eps)


@pytest.mark.parametrize('exact', [True, False])
def test_lotkin_condition(ls_qd, exact):
    cond = ls_qd.lu.condition_number_1(ls_qd.generators.lotkin(8), exact=exact)
    reference = exact_condition_number_1(exact_lotkin(8))
    assert abs(ls_qd.field.to_fraction(cond) - reference) <= reference / 1000


def test_bad_requests(ls):
    with pytest.raises(DimensionError) as e:
        ls.generators.random(0, 1)
    assert e.value.code == 'bad_size'
    with pytest.raises(PlanError) as e:
        ls.generators.matrix('hilbert', 4)
    assert e.value.code == 'unknown_kind'


@pytest.mark.parametrize('kind', ['random', 'dominant', 'lotkin', 'bench'])
def test_matrix_by_kind(kind):
    ls = LinalgSession(precision='dd')
    assert ls.generators.matrix(kind, 5, seed=3).shape == (5, 5)
