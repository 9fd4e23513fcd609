"""
Decimal string conversion shared by the expansion types.

Accepted input: optional sign, digits, optional fraction, optional
exponent ``e±k``. Output carries a fixed number of significant digits,
enough for the string to parse back to the same expansion.
"""

import math
import re
from fractions import Fraction

import mpmath

from .exceptions import ScalarDomainError

_DECIMAL_RE = re.compile(r'^\s*[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\s*$')


def parse_decimal(text: str) -> Fraction:
    """Exact rational value of a decimal string"""
    if not isinstance(text, str) or not _DECIMAL_RE.match(text):
        raise ScalarDomainError('not a decimal number: {!r}'.format(text), code='bad_decimal')
    return Fraction(text.strip())


def to_double(value) -> float:
    """Correctly rounded double of an exact rational or integer"""
    try:
        return float(value)
    except OverflowError:
        raise ScalarDomainError('{} is outside the double range'.format(_short(value)), code='overflow') from None


def _short(value):
    text = str(value)
    return text if len(text) <= 40 else text[:37] + '...'


def fraction_to_components(value: Fraction, count: int):
    """
    Greedy decomposition of an exact rational into `count` doubles, each the
    correctly rounded value of what the previous ones left over.
    """
    components = []
    remainder = Fraction(value)
    for _ in range(count):
        c = to_double(remainder)
        components.append(c)
        if c == 0.0:
            components.extend([0.0] * (count - len(components)))
            break
        remainder -= Fraction(c)
    return components


def components_to_fraction(components) -> Fraction:
    total = Fraction(0)
    for c in components:
        total += Fraction(c)
    return total


def format_components(components, digits: int) -> str:
    nonzero = [c for c in components if c != 0.0]
    if not nonzero:
        return '0.0'
    exponents = [math.frexp(c)[1] for c in nonzero]
    # wide enough for the exact sum of all components
    prec = max(exponents) - min(exponents) + 64 + int(digits * 3.33)
    with mpmath.workprec(prec):
        value = mpmath.mpf(0)
        for c in nonzero:
            value += mpmath.mpf(c)
        return mpmath.nstr(value, digits, strip_zeros=False)
