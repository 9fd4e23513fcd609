"""
Error-free transformations on machine doubles.

Every function returns the rounded result together with its exact
rounding error, so that ``a op b == result + error`` holds exactly in
round-to-nearest arithmetic. Overflow to infinity propagates untrapped.
"""

import logging
import math

from .exceptions import RoundingModeError

logger = logging.getLogger(__name__)

_SPLITTER = 134217729.0  # 2^27 + 1
_fma = getattr(math, 'fma', None)


def two_sum(a: float, b: float):
    """(s, e) with s = fl(a + b) and a + b = s + e exactly"""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def quick_two_sum(a: float, b: float):
    """two_sum for |a| >= |b|"""
    s = a + b
    e = b - (s - a)
    return s, e


def two_diff(a: float, b: float):
    s = a - b
    bb = s - a
    e = (a - (s - bb)) - (b + bb)
    return s, e


def split(a: float):
    """
    Dekker split of a into (hi, lo), each with at most 26 significant bits,
    so that products of halves are exact.
    """
    c = _SPLITTER * a
    abig = c - a
    hi = c - abig
    lo = a - hi
    return hi, lo


def _two_prod_dekker(a: float, b: float):
    p = a * b
    ahi, alo = split(a)
    bhi, blo = split(b)
    e = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, e


def _two_prod_fma(a: float, b: float):
    p = a * b
    return p, _fma(a, b, -p)


two_prod = _two_prod_fma if _fma is not None else _two_prod_dekker
two_prod.__doc__ = """(p, e) with p = fl(a * b) and a * b = p + e exactly"""


def three_sum(a: float, b: float, c: float):
    t1, t2 = two_sum(a, b)
    a, t3 = two_sum(c, t1)
    b, c = two_sum(t2, t3)
    return a, b, c


def three_sum2(a: float, b: float, c: float):
    t1, t2 = two_sum(a, b)
    a, t3 = two_sum(c, t1)
    return a, t2 + t3


def check_rounding_mode():
    """
    Raise :class:`RoundingModeError` unless doubles round to nearest with
    ties to even. Both probes below are exact ties.
    """
    if 1.0 + 2.0 ** -53 != 1.0 or (1.0 + 2.0 ** -52) + 2.0 ** -53 != 1.0 + 2.0 ** -51:
        raise RoundingModeError('floating point unit is not rounding to nearest even',
                                code='rounding_mode')
    if -1.0 - 2.0 ** -53 != -1.0:
        raise RoundingModeError('floating point unit is not rounding symmetrically',
                                code='rounding_mode')
    logger.debug('rounding mode ok, two_prod uses %s', 'fma' if _fma is not None else 'dekker split')


check_rounding_mode()
