"""
    :class:`DoubleDouble`: a value stored as the unevaluated sum hi + lo of
    two machine doubles with |lo| <= ulp(hi) / 2, about 106 significant bits.
"""

import math
from fractions import Fraction

from .constants import EPS_DD, ROUND_TRIP_DIGITS
from .decimal_io import components_to_fraction, format_components, fraction_to_components, parse_decimal
from .eft import quick_two_sum, two_diff, two_prod, two_sum
from .exceptions import ScalarDomainError


class DoubleDouble:
    __slots__ = ('hi', 'lo')

    eps = EPS_DD

    def __init__(self, hi=0.0, lo=0.0):
        self.hi = float(hi)
        self.lo = float(lo)

    @classmethod
    def from_fraction(cls, value: Fraction) -> 'DoubleDouble':
        return cls(*fraction_to_components(value, 2))

    @classmethod
    def from_int(cls, value: int) -> 'DoubleDouble':
        if -(1 << 53) <= value <= (1 << 53):
            return cls(float(value), 0.0)
        return cls.from_fraction(Fraction(value))

    @classmethod
    def from_string(cls, text: str) -> 'DoubleDouble':
        return cls.from_fraction(parse_decimal(text))

    @staticmethod
    def _coerce(other):
        if isinstance(other, DoubleDouble):
            return other
        if isinstance(other, float):
            return DoubleDouble(other, 0.0)
        if isinstance(other, int):
            return DoubleDouble.from_int(other)
        return NotImplemented

    def components(self):
        return (self.hi, self.lo)

    def to_fraction(self) -> Fraction:
        return components_to_fraction((self.hi, self.lo))

    def to_string(self, digits=ROUND_TRIP_DIGITS['dd']) -> str:
        return format_components((self.hi, self.lo), digits)

    def is_normalized(self) -> bool:
        if self.hi == 0.0:
            return self.lo == 0.0
        return self.hi + self.lo == self.hi

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        s = self.hi + other.hi
        bb = s - self.hi
        e = (self.hi - (s - bb)) + (other.hi - bb)
        t = self.lo + other.lo
        bb = t - self.lo
        f = (self.lo - (t - bb)) + (other.lo - bb)
        e += t
        s, e = quick_two_sum(s, e)
        e += f
        s, e = quick_two_sum(s, e)
        return DoubleDouble(s, e)

    __radd__ = __add__

    def __neg__(self):
        return DoubleDouble(-self.hi, -self.lo)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        s, e = two_diff(self.hi, other.hi)
        t, f = two_diff(self.lo, other.lo)
        e += t
        s, e = quick_two_sum(s, e)
        e += f
        s, e = quick_two_sum(s, e)
        return DoubleDouble(s, e)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p, e = two_prod(self.hi, other.hi)
        e += self.hi * other.lo + self.lo * other.hi
        p, e = quick_two_sum(p, e)
        return DoubleDouble(p, e)

    __rmul__ = __mul__

    def _mul_double(self, b: float) -> 'DoubleDouble':
        p, e = two_prod(self.hi, b)
        e += self.lo * b
        p, e = quick_two_sum(p, e)
        return DoubleDouble(p, e)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.hi == 0.0:
            raise ScalarDomainError('double-double division by zero', code='division_by_zero')
        q1 = self.hi / other.hi
        r = self - other._mul_double(q1)
        q2 = r.hi / other.hi
        r = r - other._mul_double(q2)
        q3 = r.hi / other.hi
        q1, q2 = quick_two_sum(q1, q2)
        return DoubleDouble(q1, q2) + q3

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def sqrt(self) -> 'DoubleDouble':
        if self.hi == 0.0:
            return DoubleDouble()
        if self.hi < 0.0:
            raise ScalarDomainError('double-double sqrt of a negative number', code='negative_sqrt')
        x = 1.0 / math.sqrt(self.hi)
        ax = self.hi * x
        p, e = two_prod(ax, ax)
        r = self - DoubleDouble(p, e)
        s, e = two_sum(ax, r.hi * (x * 0.5))
        return DoubleDouble(s, e)

    def __abs__(self):
        return -self if self.hi < 0.0 else self

    # comparison

    def _key(self):
        return (self.hi, self.lo)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.hi == other.hi and self.lo == other.lo

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._key() < other._key()

    def __le__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._key() <= other._key()

    def __gt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._key() > other._key()

    def __ge__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._key() >= other._key()

    def __hash__(self):
        return hash((self.hi, self.lo))

    def __bool__(self):
        return self.hi != 0.0

    def __float__(self):
        return self.hi + self.lo

    def __getstate__(self):
        return (self.hi, self.lo)

    def __setstate__(self, state):
        self.hi, self.lo = state

    def __repr__(self):
        return 'DoubleDouble({!r}, {!r})'.format(self.hi, self.lo)

    def __str__(self):
        return self.to_string()
