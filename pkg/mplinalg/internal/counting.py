"""
    :class:`OpCounter`: thread safe tallies of scalar operations.
    :class:`CountingScalar`: wraps any scalar and reports each operation to a
    shared counter. Wrapping never changes a numerical result.
"""

import functools
import logging
from threading import Lock

logger = logging.getLogger(__name__)


class OpCounter:

    def __init__(self):
        self.mul_count = 0
        self.add_count = 0
        self.div_count = 0
        self._lock = Lock()

    def count_mul(self):
        with self._lock:
            self.mul_count += 1

    def count_add(self):
        with self._lock:
            self.add_count += 1

    def count_div(self):
        with self._lock:
            self.div_count += 1

    def reset(self):
        with self._lock:
            self.mul_count = 0
            self.add_count = 0
            self.div_count = 0

    def snapshot(self):
        with self._lock:
            return {'mul_count': self.mul_count, 'add_count': self.add_count, 'div_count': self.div_count}

    def __getstate__(self):
        raise TypeError('OpCounter cannot leave its process; use the thread executor when counting')

    def __repr__(self):
        return 'OpCounter(mul={}, add={}, div={})'.format(self.mul_count, self.add_count, self.div_count)


def _unwrap(value):
    return value.inner if isinstance(value, CountingScalar) else value


@functools.total_ordering
class CountingScalar:
    __slots__ = ('inner', 'counter')

    def __init__(self, inner, counter: OpCounter):
        self.inner = inner
        self.counter = counter

    def _wrap(self, value):
        return CountingScalar(value, self.counter)

    def __add__(self, other):
        self.counter.count_add()
        return self._wrap(self.inner + _unwrap(other))

    def __radd__(self, other):
        self.counter.count_add()
        return self._wrap(_unwrap(other) + self.inner)

    def __sub__(self, other):
        self.counter.count_add()
        return self._wrap(self.inner - _unwrap(other))

    def __rsub__(self, other):
        self.counter.count_add()
        return self._wrap(_unwrap(other) - self.inner)

    def __mul__(self, other):
        self.counter.count_mul()
        return self._wrap(self.inner * _unwrap(other))

    def __rmul__(self, other):
        self.counter.count_mul()
        return self._wrap(_unwrap(other) * self.inner)

    def __truediv__(self, other):
        self.counter.count_div()
        return self._wrap(self.inner / _unwrap(other))

    def __rtruediv__(self, other):
        self.counter.count_div()
        return self._wrap(_unwrap(other) / self.inner)

    def __neg__(self):
        return self._wrap(-self.inner)

    def __pos__(self):
        return self

    def __abs__(self):
        return self._wrap(abs(self.inner))

    def __eq__(self, other):
        return self.inner == _unwrap(other)

    def __lt__(self, other):
        return self.inner < _unwrap(other)

    def __le__(self, other):
        return self.inner <= _unwrap(other)

    def __gt__(self, other):
        return self.inner > _unwrap(other)

    def __ge__(self, other):
        return self.inner >= _unwrap(other)

    def __hash__(self):
        return hash(self.inner)

    def __bool__(self):
        return bool(self.inner)

    def __float__(self):
        return float(self.inner)

    def __repr__(self):
        return 'CountingScalar({!r})'.format(self.inner)

    def __str__(self):
        return str(self.inner)
