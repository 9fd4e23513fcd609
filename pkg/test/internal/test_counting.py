import logging
import pickle
import threading

import pytest
from mplinalg.internal.counting import CountingScalar, OpCounter
from mplinalg.internal.dd import DoubleDouble
from mplinalg.internal.fields import CountingField

logger = logging.getLogger(__name__)


@pytest.fixture
def counted(dd):
    return CountingField(dd, OpCounter())


def test_each_operation_counts_once(counted):
    a = counted.from_int(3)
    b = counted.from_int(4)
    a + b
    a - b
    a * b
    a / b
    -a
    abs(a)
    assert counted.counter.snapshot() == {'mul_count': 1, 'add_count': 2, 'div_count': 1}


def test_mixed_and_reflected_operands(counted):
    a = counted.from_int(3)
    assert (2 * a).inner == DoubleDouble.from_int(6)
    assert (1 - a).inner == DoubleDouble.from_int(-2)
    assert (a + DoubleDouble(0.5)).inner == DoubleDouble(3.5)
    snap = counted.counter.snapshot()
    assert snap['mul_count'] == 1
    assert snap['add_count'] == 2


def test_wrapping_is_transparent(dd, counted):
    plain = [dd.from_int(i) / dd.from_int(7) for i in range(1, 9)]
    wrapped = [counted.from_int(i) / counted.from_int(7) for i in range(1, 9)]
    acc_plain, acc_wrapped = dd.zero(), counted.zero()
    for x, y in zip(plain, plain[::-1]):
        acc_plain = acc_plain + x * y
    for x, y in zip(wrapped, wrapped[::-1]):
        acc_wrapped = acc_wrapped + x * y
    assert acc_wrapped.inner == acc_plain
    assert acc_wrapped == acc_plain


def test_sqrt_counts_as_division(counted):
    counted.sqrt(counted.from_int(2))
    assert counted.counter.div_count == 1


def test_ordering_and_truthiness(counted):
    a, b = counted.from_int(1), counted.from_int(2)
    assert a < b and b > a and a <= b
    assert not counted.zero()
    assert float(b) == 2.0
    assert hash(a) == hash(DoubleDouble(1.0))


def test_reset(counted):
    counted.from_int(1) * counted.from_int(2)
    counted.counter.reset()
    assert counted.counter.snapshot() == {'mul_count': 0, 'add_count': 0, 'div_count': 0}


def test_counts_exact_across_threads(counted):
    x = counted.from_int(3)

    def work():
        for _ in range(1000):
            x * x
            x + x

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert counted.counter.mul_count == 8000
    assert counted.counter.add_count == 8000


def test_counter_stays_in_process(counted):
    with pytest.raises(TypeError):
        pickle.dumps(counted.counter)
    with pytest.raises(TypeError):
        pickle.dumps(counted)


def test_scalar_wraps_plain_floats():
    counter = OpCounter()
    x = CountingScalar(1.5, counter)
    assert (x * 2.0).inner == 3.0
    assert counter.mul_count == 1
