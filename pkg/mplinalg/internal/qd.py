"""
    :class:`QuadDouble`: a value stored as the unevaluated sum c0 + c1 + c2 + c3
    of four machine doubles of decreasing magnitude, about 212 significant bits.
"""

import math
from fractions import Fraction

from .constants import EPS_QD, ROUND_TRIP_DIGITS
from .decimal_io import components_to_fraction, format_components, fraction_to_components, parse_decimal
from .eft import quick_two_sum, three_sum, three_sum2, two_prod, two_sum
from .exceptions import ScalarDomainError


def renormalize(*components):
    """
    Collapse a decreasing-magnitude expansion of any length into four
    non-overlapping doubles.

    The upward sweep uses two_sum, so the input does not have to be
    ordered; the downward sweep emits a component whenever the running
    error is nonzero and folds everything past the fourth into the last.
    """
    c = list(components)
    if not all(math.isfinite(x) for x in c):
        return QuadDouble(sum(c), 0.0, 0.0, 0.0)
    s = c[-1]
    for i in range(len(c) - 2, -1, -1):
        s, c[i + 1] = two_sum(c[i], s)
    c[0] = s

    out = []
    s = c[0]
    for t in c[1:]:
        if len(out) == 3:
            s += t
            continue
        s, e = quick_two_sum(s, t)
        if e != 0.0:
            out.append(s)
            s = e
    out.append(s)
    out.extend([0.0] * (4 - len(out)))
    return QuadDouble(*out)


def _quick_three_accum(a, b, c):
    s, b = two_sum(b, c)
    s, a = two_sum(a, s)
    if a != 0.0 and b != 0.0:
        return s, a, b
    if b == 0.0:
        return 0.0, s, a
    return 0.0, s, b


class QuadDouble:
    __slots__ = ('c',)

    eps = EPS_QD

    def __init__(self, c0=0.0, c1=0.0, c2=0.0, c3=0.0):
        self.c = (float(c0), float(c1), float(c2), float(c3))

    @classmethod
    def from_fraction(cls, value: Fraction) -> 'QuadDouble':
        return cls(*fraction_to_components(value, 4))

    @classmethod
    def from_int(cls, value: int) -> 'QuadDouble':
        if -(1 << 53) <= value <= (1 << 53):
            return cls(float(value))
        return cls.from_fraction(Fraction(value))

    @classmethod
    def from_string(cls, text: str) -> 'QuadDouble':
        return cls.from_fraction(parse_decimal(text))

    @staticmethod
    def _coerce(other):
        if isinstance(other, QuadDouble):
            return other
        if isinstance(other, float):
            return QuadDouble(other)
        if isinstance(other, int):
            return QuadDouble.from_int(other)
        return NotImplemented

    def components(self):
        return self.c

    def to_fraction(self) -> Fraction:
        return components_to_fraction(self.c)

    def to_string(self, digits=ROUND_TRIP_DIGITS['qd']) -> str:
        return format_components(self.c, digits)

    def is_normalized(self) -> bool:
        c = self.c
        for i in range(3):
            if c[i] == 0.0:
                if any(x != 0.0 for x in c[i + 1:]):
                    return False
            elif c[i] + c[i + 1] != c[i]:
                return False
        return True

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._add(other)

    __radd__ = __add__

    def _add(self, other: 'QuadDouble') -> 'QuadDouble':
        # merge both expansions by decreasing magnitude and accumulate
        a = self.c
        b = other.c
        i = j = 0
        if abs(a[i]) > abs(b[j]):
            u = a[i]
            i += 1
        else:
            u = b[j]
            j += 1
        if abs(a[i]) > abs(b[j]):
            v = a[i]
            i += 1
        else:
            v = b[j]
            j += 1
        u, v = quick_two_sum(u, v)

        x = [0.0, 0.0, 0.0, 0.0]
        k = 0
        while k < 4:
            if i >= 4 and j >= 4:
                x[k] = u
                if k < 3:
                    k += 1
                    x[k] = v
                break
            if i >= 4:
                t = b[j]
                j += 1
            elif j >= 4:
                t = a[i]
                i += 1
            elif abs(a[i]) > abs(b[j]):
                t = a[i]
                i += 1
            else:
                t = b[j]
                j += 1
            s, u, v = _quick_three_accum(u, v, t)
            if s != 0.0:
                x[k] = s
                k += 1

        for m in range(i, 4):
            x[3] += a[m]
        for m in range(j, 4):
            x[3] += b[m]
        return renormalize(*x)

    def __neg__(self):
        c = self.c
        return QuadDouble(-c[0], -c[1], -c[2], -c[3])

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._add(-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other._add(-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a = self.c
        b = other.c
        p0, q0 = two_prod(a[0], b[0])
        p1, q1 = two_prod(a[0], b[1])
        p2, q2 = two_prod(a[1], b[0])
        p3, q3 = two_prod(a[0], b[2])
        p4, q4 = two_prod(a[1], b[1])
        p5, q5 = two_prod(a[2], b[0])

        p1, p2, q0 = three_sum(p1, p2, q0)

        p2, q1, q2 = three_sum(p2, q1, q2)
        p3, p4, p5 = three_sum(p3, p4, p5)
        s0, t0 = two_sum(p2, p3)
        s1, t1 = two_sum(q1, p4)
        s2 = q2 + p5
        s1, t0 = two_sum(s1, t0)
        s2 += t0 + t1

        # third order terms
        s1 += a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0] + q0 + q3 + q4 + q5
        return renormalize(p0, p1, s0, s1, s2)

    __rmul__ = __mul__

    def _mul_double(self, b: float) -> 'QuadDouble':
        a = self.c
        p0, q0 = two_prod(a[0], b)
        p1, q1 = two_prod(a[1], b)
        p2, q2 = two_prod(a[2], b)
        p3 = a[3] * b
        s1, s2 = two_sum(q0, p1)
        s2, q1, p2 = three_sum(s2, q1, p2)
        q1, q2 = three_sum2(q1, q2, p3)
        return renormalize(p0, s1, s2, q1, q2 + p2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        b0 = other.c[0]
        if b0 == 0.0:
            raise ScalarDomainError('quad-double division by zero', code='division_by_zero')
        q0 = self.c[0] / b0
        r = self - other._mul_double(q0)
        q1 = r.c[0] / b0
        r = r - other._mul_double(q1)
        q2 = r.c[0] / b0
        r = r - other._mul_double(q2)
        q3 = r.c[0] / b0
        r = r - other._mul_double(q3)
        q4 = r.c[0] / b0
        return renormalize(q0, q1, q2, q3, q4)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def sqrt(self) -> 'QuadDouble':
        c0 = self.c[0]
        if c0 == 0.0:
            return QuadDouble()
        if c0 < 0.0:
            raise ScalarDomainError('quad-double sqrt of a negative number', code='negative_sqrt')
        # Newton iteration on 1/sqrt(a), each step doubles the correct bits
        r = QuadDouble(1.0 / math.sqrt(c0))
        h = self._mul_double(0.5)
        for _ in range(3):
            r = r + (0.5 - h * (r * r)) * r
        return self * r

    def __abs__(self):
        return -self if self.c[0] < 0.0 else self

    # comparison

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.c == other.c

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.c < other.c

    def __le__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.c <= other.c

    def __gt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.c > other.c

    def __ge__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.c >= other.c

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return self.c[0] != 0.0

    def __float__(self):
        return self.c[0] + self.c[1]

    def __getstate__(self):
        return self.c

    def __setstate__(self, state):
        self.c = tuple(state)

    def __repr__(self):
        return 'QuadDouble({!r}, {!r}, {!r}, {!r})'.format(*self.c)

    def __str__(self):
        return self.to_string()
