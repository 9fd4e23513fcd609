import logging
import threading
from functools import partial

import pytest
from mplinalg.internal.engine import Engine, SectionRunner, run_parallel_sections
from mplinalg.internal.exceptions import PlanError, SingularMatrixError, WorkerPoolError
from mplinalg.internal.fields import CountingField
from mplinalg.internal.oracles import bench_product_sum

logger = logging.getLogger(__name__)


def _square(x):
    return x * x


def _explode():
    raise RuntimeError('boom')


def _singular():
    raise SingularMatrixError('zero pivot', index=3)


@pytest.mark.parametrize('workers', [1, 2, 4])
def test_results_in_task_order(workers):
    tasks = [partial(_square, i) for i in range(10)]
    assert run_parallel_sections(tasks, workers) == [i * i for i in range(10)]


def test_process_executor():
    tasks = [partial(bench_product_sum, 3, i) for i in (1, 2)]
    assert run_parallel_sections(tasks, 2, executor='process') == [4, 7]


def test_serial_runner_stays_on_calling_thread():
    with SectionRunner(1) as runner:
        idents = runner.run([threading.get_ident, threading.get_ident])
    assert idents == [threading.get_ident()] * 2


def test_foreign_failure_is_wrapped():
    with pytest.raises(WorkerPoolError) as e:
        run_parallel_sections([partial(_square, 2), _explode], 2)
    assert e.value.code == 'worker_failure'
    assert isinstance(e.value.__cause__, RuntimeError)


def test_library_error_passes_through():
    with pytest.raises(SingularMatrixError) as e:
        run_parallel_sections([partial(_square, 2), _singular], 2)
    assert e.value.index == 3


def test_pool_failure_injected(mocker):
    future = mocker.Mock()
    future.result.side_effect = MemoryError()
    pool = mocker.Mock()
    pool.submit.return_value = future
    mocker.patch.dict('mplinalg.internal.engine._POOLS', {'thread': mocker.Mock(return_value=pool)})
    with pytest.raises(WorkerPoolError):
        run_parallel_sections([partial(_square, 1), partial(_square, 2)], 2)
    pool.shutdown.assert_called_once()


def test_bad_executor():
    with pytest.raises(PlanError) as e:
        SectionRunner(2, executor='gpu')
    assert e.value.code == 'bad_executor'


def test_engine_validation():
    with pytest.raises(PlanError) as e:
        Engine(workers=0)
    assert e.value.code == 'bad_workers'
    with pytest.raises(PlanError) as e:
        Engine(count_ops=True, executor='process')
    assert e.value.code == 'counting_process'
    with pytest.raises(PlanError) as e:
        Engine(precision='hd')
    assert e.value.code == 'unknown_precision'


def test_counting_engine():
    engine = Engine(precision='qd', count_ops=True)
    assert engine.counting
    assert isinstance(engine.field, CountingField)
    engine.field.one() * engine.field.one()
    assert engine.counts()['mul_count'] == 1
    engine.reset_counts()
    assert engine.counts()['mul_count'] == 0


def test_plain_engine():
    engine = Engine(precision='dd', workers=3)
    assert not engine.counting
    assert engine.counts() is None
    assert engine.field.name == 'dd'
    assert engine.run_parallel_sections([partial(_square, 3)]) == [9]
