import logging
import time

import pytest
from mplinalg import LinalgSession

logger = logging.getLogger(__name__)

pytestmark = [pytest.mark.timing, pytest.mark.usefixtures('timing_enabled')]


def _seconds(ls, a, b, algorithm):
    started = time.perf_counter()
    ls.matmul(a, b, algorithm=algorithm)
    return time.perf_counter() - started


def test_recursive_algorithms_beat_block():
    ls = LinalgSession(precision='dd', block_size=16, n_min=16)
    a, b = ls.generators.random(128, 1), ls.generators.random(128, 2)
    block = _seconds(ls, a, b, 'block')
    for algorithm in ('strassen', 'winograd'):
        seconds = _seconds(ls, a, b, algorithm)
        logger.info('%s %.3fs against block %.3fs', algorithm, seconds, block)
        assert seconds < block


def test_processes_speed_up_strassen():
    serial = LinalgSession(precision='qd', n_min=16, block_size=16)
    parallel = LinalgSession(precision='qd', n_min=16, block_size=16, workers=4, executor='process')
    a, b = serial.generators.random(64, 1), serial.generators.random(64, 2)
    one = _seconds(serial, a, b, 'strassen')
    four = _seconds(parallel, a, b, 'strassen')
    logger.info('strassen qd n=64: 1 worker %.3fs, 4 processes %.3fs', one, four)
    assert four < one
