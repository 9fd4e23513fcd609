import logging
from fractions import Fraction

import mpmath
import pytest
from mplinalg.internal.exceptions import DimensionError, SingularMatrixError
from mplinalg.internal.oracles import (bench_product_sum, exact_condition_number_1, exact_inverse, exact_lotkin,
                                       mp_sqrt, relative_distance)

logger = logging.getLogger(__name__)


@pytest.mark.parametrize('n, i, expected', [(2, 1, 1), (3, 2, 7), (1, 1, 0)])
def test_bench_product_sum(n, i, expected):
    assert bench_product_sum(n, i) == expected


def test_lotkin_shape():
    rows = exact_lotkin(3)
    assert rows[0] == [1, 1, 1]
    assert rows[1] == [Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)]
    assert rows[2][2] == Fraction(1, 5)


def test_exact_inverse_needs_row_exchange():
    rows = [[0, 1], [2, 3]]
    inv = exact_inverse(rows)
    assert inv == [[Fraction(-3, 2), Fraction(1, 2)], [1, 0]]


def test_exact_inverse_errors():
    with pytest.raises(SingularMatrixError):
        exact_inverse([[1, 2], [2, 4]])
    with pytest.raises(DimensionError):
        exact_inverse([[1, 2, 3], [4, 5, 6]])


def test_condition_of_diagonal():
    assert exact_condition_number_1([[1, 0], [0, 10]]) == 10


def test_lotkin_condition_grows():
    conds = [exact_condition_number_1(exact_lotkin(n)) for n in (4, 6, 8)]
    assert conds[0] < conds[1] < conds[2]


def test_mp_sqrt():
    with mpmath.workprec(400):
        assert abs(mp_sqrt(2) ** 2 - 2) < mpmath.mpf(2) ** -390


def test_relative_distance():
    assert relative_distance(Fraction(101, 100), Fraction(1)) == pytest.approx(0.01)
    assert relative_distance(Fraction(0), Fraction(0)) == 0.0
