import logging
import os

import pytest
from mplinalg import LinalgSession

logger = logging.getLogger(__name__)

ALGORITHMS = ['simple', 'block', 'strassen', 'winograd']


@pytest.fixture(scope='module')
def workers():
    return int(os.getenv('MPLINALG_TEST_WORKERS', '4'))


@pytest.fixture(scope='module')
def ls():
    return LinalgSession(precision='dd', block_size=8, n_min=8)


@pytest.fixture(scope='module')
def ls_qd():
    return LinalgSession(precision='qd', block_size=8, n_min=8)


@pytest.fixture(scope='module')
def ls_parallel(workers):
    return LinalgSession(precision='dd', workers=workers, block_size=8, n_min=8)


@pytest.fixture
def counting():
    def make(precision='dd', n_min=32, block_size=32, workers=1):
        return LinalgSession(precision=precision, workers=workers, block_size=block_size, n_min=n_min,
                             count_ops=True)
    return make


@pytest.fixture(scope='module')
def timing_enabled():
    if not os.getenv('MPLINALG_TIMING_TESTS'):
        pytest.skip('set MPLINALG_TIMING_TESTS=1 to run wall clock comparisons')
