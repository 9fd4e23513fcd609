import logging
import math
from fractions import Fraction

import pytest
from mplinalg.internal.eft import (_two_prod_dekker, check_rounding_mode, quick_two_sum, split, three_sum,
                                   two_diff, two_prod, two_sum)

logger = logging.getLogger(__name__)


def _random_double(rng):
    return math.ldexp(rng.uniform(-1.0, 1.0), rng.randint(-60, 60))


def test_two_sum_examples():
    assert two_sum(0.0, 0.0) == (0.0, 0.0)
    assert two_sum(1.0, 2.0 ** -60) == (1.0, 2.0 ** -60)
    assert two_sum(2.0 ** 53, 1.0) == (2.0 ** 53, 1.0)


def test_two_prod_examples():
    assert two_prod(1.5, 2.0) == (3.0, 0.0)
    assert two_prod(2.0 ** 27 + 1, 2.0 ** 27 + 1) == (2.0 ** 54 + 2.0 ** 28, 1.0)
    assert two_prod(0.0, 12345.678) == (0.0, 0.0)


def test_two_sum_exact(rng):
    for _ in range(2000):
        a, b = _random_double(rng), _random_double(rng)
        s, e = two_sum(a, b)
        assert s == a + b
        assert Fraction(s) + Fraction(e) == Fraction(a) + Fraction(b)


def test_two_diff_exact(rng):
    for _ in range(1000):
        a, b = _random_double(rng), _random_double(rng)
        s, e = two_diff(a, b)
        assert Fraction(s) + Fraction(e) == Fraction(a) - Fraction(b)


def test_quick_two_sum_ordered(rng):
    for _ in range(1000):
        a, b = _random_double(rng), _random_double(rng)
        if abs(a) < abs(b):
            a, b = b, a
        s, e = quick_two_sum(a, b)
        assert Fraction(s) + Fraction(e) == Fraction(a) + Fraction(b)


def test_two_prod_exact(rng):
    for _ in range(2000):
        a, b = _random_double(rng), _random_double(rng)
        p, e = two_prod(a, b)
        assert p == a * b
        assert Fraction(p) + Fraction(e) == Fraction(a) * Fraction(b)


def test_dekker_matches_fma(rng):
    for _ in range(1000):
        a, b = _random_double(rng), _random_double(rng)
        assert _two_prod_dekker(a, b) == two_prod(a, b)


def test_split_halves(rng):
    for _ in range(500):
        a = _random_double(rng)
        hi, lo = split(a)
        assert hi + lo == a
        # 26 bit halves multiply exactly
        assert Fraction(hi * hi) == Fraction(hi) * Fraction(hi)


def test_three_sum_exact():
    a, b, c = three_sum(1.0, 2.0 ** -60, -1.0)
    assert Fraction(a) + Fraction(b) + Fraction(c) == Fraction(2) ** -60


def test_overflow_propagates():
    s, _ = two_sum(1.7e308, 1.7e308)
    assert math.isinf(s)


def test_rounding_mode_ok():
    check_rounding_mode()


@pytest.mark.parametrize('a,b', [(1.0, 2.0 ** -53), (2.0 ** 52, 0.5), (-3.0, 2.0 ** -51)])
def test_two_sum_ties(a, b):
    s, e = two_sum(a, b)
    assert Fraction(s) + Fraction(e) == Fraction(a) + Fraction(b)
