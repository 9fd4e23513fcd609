"""
Exact reference computations used to verify the floating point results:
rational arithmetic with :class:`fractions.Fraction` and, for irrational
constants, mpmath at a raised working precision.
"""

import logging
from fractions import Fraction

import mpmath

from .exceptions import DimensionError, SingularMatrixError

logger = logging.getLogger(__name__)


def bench_product_sum(n, i):
    """S(i, n) = sum_{k=1..n} (i + k - 1)(n - k), exact integer, 1-based i"""
    return sum((i + k - 1) * (n - k) for k in range(1, n + 1))


def exact_lotkin(n):
    """First row ones, then a_ij = 1 / (i + j - 1) with 1-based indices"""
    rows = [[Fraction(1)] * n]
    for i in range(2, n + 1):
        rows.append([Fraction(1, i + j - 1) for j in range(1, n + 1)])
    return rows


def to_exact_rows(a):
    """Lift a matrix of expansion scalars to exact rationals"""
    to_fraction = a.field.to_fraction
    return [[to_fraction(v) for v in r] for r in a.iter_rows()]


def exact_inverse(rows):
    """Gauss-Jordan elimination with row exchanges in exact arithmetic"""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError('exact_inverse needs a square matrix', code='not_square')
    work = [list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for k in range(n):
        p = next((i for i in range(k, n) if work[i][k] != 0), None)
        if p is None:
            raise SingularMatrixError('matrix is exactly singular at column {}'.format(k), index=k)
        work[k], work[p] = work[p], work[k]
        pivot = work[k][k]
        work[k] = [v / pivot for v in work[k]]
        for i in range(n):
            if i != k and work[i][k] != 0:
                factor = work[i][k]
                work[i] = [vi - factor * vk for vi, vk in zip(work[i], work[k])]
    return [r[n:] for r in work]


def exact_norm_1(rows):
    n = len(rows[0])
    return max(sum(abs(r[j]) for r in rows) for j in range(n))


def exact_condition_number_1(rows) -> Fraction:
    """||A||_1 ||A^-1||_1 as an exact rational"""
    cond = exact_norm_1(rows) * exact_norm_1(exact_inverse(rows))
    logger.debug('exact cond_1 of %dx%d matrix ~ %.6e', len(rows), len(rows), float(cond))
    return cond


def mp_sqrt(value, bits=400):
    """sqrt(value) as an mpmath number carrying `bits` bits"""
    with mpmath.workprec(bits):
        return mpmath.sqrt(mpmath.mpf(value))


def relative_distance(x: Fraction, reference) -> float:
    """|x - reference| / |reference| in high precision, returned as a float"""
    with mpmath.workprec(800):
        xr = mpmath.mpf(x.numerator) / x.denominator
        ref = reference if isinstance(reference, mpmath.mpf) else \
            mpmath.mpf(reference.numerator) / reference.denominator
        if ref == 0:
            return float(abs(xr))
        return float(abs(xr - ref) / abs(ref))
