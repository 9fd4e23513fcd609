import logging
import random

import pytest
from mplinalg.internal.fields import get_field

logger = logging.getLogger(__name__)


@pytest.fixture(scope='module')
def dd():
    return get_field('dd')


@pytest.fixture(scope='module')
def qd():
    return get_field('qd')


@pytest.fixture(scope='module', params=['d', 'dd', 'qd'])
def field(request):
    return get_field(request.param)


@pytest.fixture
def rng():
    """Seeded source of random doubles, one per test"""
    return random.Random(20151026)
