"""
Declares the scalar contract every algorithm is generic over, and the
registry of precisions available by name through :func:`get_field`.

A field is the "context" half of the contract: constants, conversions,
sqrt and epsilon. The scalars themselves carry the ring operations as
Python operators (+, -, *, /, unary -, abs, comparisons).
"""

import logging
import math
from abc import ABC, abstractmethod
from fractions import Fraction

from .constants import EPS_D, EPS_DD, EPS_QD, ROUND_TRIP_DIGITS
from .counting import CountingScalar, OpCounter
from .dd import DoubleDouble
from .decimal_io import parse_decimal, to_double
from .exceptions import PlanError, ScalarDomainError
from .qd import QuadDouble

logger = logging.getLogger(__name__)


class Field(ABC):
    """The ScalarContract: everything an algorithm needs besides operators"""

    name = None
    eps = None
    digits = None

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    @abstractmethod
    def from_fraction(self, value: Fraction):
        pass

    @abstractmethod
    def to_fraction(self, x) -> Fraction:
        pass

    @abstractmethod
    def sqrt(self, x):
        pass

    @abstractmethod
    def is_valid(self, x) -> bool:
        """True when x satisfies the representation invariants of the type"""

    def from_int(self, value: int):
        return self.from_fraction(Fraction(value))

    def from_float(self, value: float):
        return self.from_fraction(Fraction(value))

    def from_string(self, text: str):
        return self.from_fraction(parse_decimal(text))

    def to_string(self, x, digits=None) -> str:
        return x.to_string(digits or self.digits)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def neg(self, a):
        return -a

    def abs(self, a):
        return abs(a)

    def compare(self, a, b) -> int:
        if a < b:
            return -1
        if b < a:
            return 1
        return 0

    def epsilon(self):
        return self.from_float(self.eps)

    def unwrap(self, x):
        """The bare scalar, for code that bypasses instrumentation"""
        return x

    def __eq__(self, other):
        return isinstance(other, Field) and other.name == self.name

    def __hash__(self):
        return hash(self.name)

    def __reduce__(self):
        return (get_field, (self.name,))

    def __repr__(self):
        return '{}({!r})'.format(self.__class__.__name__, self.name)


class FloatField(Field):
    name = 'd'
    eps = EPS_D
    digits = ROUND_TRIP_DIGITS['d']

    def from_fraction(self, value):
        return to_double(value)

    def from_int(self, value):
        return to_double(value)

    def from_float(self, value):
        return float(value)

    def to_fraction(self, x):
        return Fraction(float(x))

    def to_string(self, x, digits=None):
        return format(float(x), '.{}g'.format(digits or self.digits))

    def sqrt(self, x):
        if x < 0.0:
            raise ScalarDomainError('sqrt of a negative number', code='negative_sqrt')
        return math.sqrt(x)

    def div(self, a, b):
        if b == 0.0:
            raise ScalarDomainError('division by zero', code='division_by_zero')
        return a / b

    def is_valid(self, x):
        return isinstance(x, float)


class DDField(Field):
    name = 'dd'
    eps = EPS_DD
    digits = ROUND_TRIP_DIGITS['dd']

    def zero(self):
        return DoubleDouble()

    def one(self):
        return DoubleDouble(1.0)

    def from_fraction(self, value):
        return DoubleDouble.from_fraction(value)

    def from_int(self, value):
        return DoubleDouble.from_int(value)

    def from_float(self, value):
        return DoubleDouble(value)

    def to_fraction(self, x):
        return x.to_fraction()

    def sqrt(self, x):
        return x.sqrt()

    def is_valid(self, x):
        return isinstance(x, DoubleDouble) and x.is_normalized()


class QDField(Field):
    name = 'qd'
    eps = EPS_QD
    digits = ROUND_TRIP_DIGITS['qd']

    def zero(self):
        return QuadDouble()

    def one(self):
        return QuadDouble(1.0)

    def from_fraction(self, value):
        return QuadDouble.from_fraction(value)

    def from_int(self, value):
        return QuadDouble.from_int(value)

    def from_float(self, value):
        return QuadDouble(value)

    def to_fraction(self, x):
        return x.to_fraction()

    def sqrt(self, x):
        return x.sqrt()

    def is_valid(self, x):
        return isinstance(x, QuadDouble) and x.is_normalized()


class CountingField(Field):
    """
    Wraps another field so that every scalar it produces is a
    :class:`CountingScalar` reporting to `counter`.
    """

    def __init__(self, inner: Field, counter: OpCounter = None):
        self.inner = inner
        self.counter = counter if counter is not None else OpCounter()
        self.name = inner.name
        self.eps = inner.eps
        self.digits = inner.digits

    def _wrap(self, value):
        return CountingScalar(value, self.counter)

    def unwrap(self, x):
        return x.inner if isinstance(x, CountingScalar) else x

    def zero(self):
        return self._wrap(self.inner.zero())

    def one(self):
        return self._wrap(self.inner.one())

    def from_fraction(self, value):
        return self._wrap(self.inner.from_fraction(value))

    def from_int(self, value):
        return self._wrap(self.inner.from_int(value))

    def from_float(self, value):
        return self._wrap(self.inner.from_float(value))

    def to_fraction(self, x):
        return self.inner.to_fraction(self.unwrap(x))

    def to_string(self, x, digits=None):
        return self.inner.to_string(self.unwrap(x), digits)

    def sqrt(self, x):
        self.counter.count_div()
        return self._wrap(self.inner.sqrt(self.unwrap(x)))

    def is_valid(self, x):
        return isinstance(x, CountingScalar) and self.inner.is_valid(x.inner)

    def __eq__(self, other):
        return isinstance(other, CountingField) and other.inner == self.inner and other.counter is self.counter

    def __hash__(self):
        return hash(('counting', self.name))

    def __reduce__(self):
        raise TypeError('CountingField cannot leave its process; use the thread executor when counting')


FIELDS = {
    'd': FloatField(),
    'dd': DDField(),
    'qd': QDField(),
}
""" Precisions available by name; 'd' is the plain machine double used for cheap oracles """


def get_field(name: str) -> Field:
    try:
        return FIELDS[name]
    except KeyError:
        raise PlanError('{} is not a known precision, expected one of {}'.format(name, sorted(FIELDS)),
                        code='unknown_precision') from None
