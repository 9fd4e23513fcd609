from dataclasses import replace

from .api.base import MatmulPlan
from .api.block import BlockMatmul
from .api.generators import Generators
from .api.lu import LuSolver
from .api.simple import SimpleMatmul
from .api.strassen import StrassenMatmul
from .api.winograd import WinogradMatmul
from .internal.constants import DEFAULT_BLOCK_SIZE, DEFAULT_N_MIN
from .internal.engine import Engine
from .internal.exceptions import PlanError


class LinalgSession:
    def __init__(self, precision='dd', workers=1, block_size=DEFAULT_BLOCK_SIZE, n_min=DEFAULT_N_MIN,
                 count_ops=False, executor='thread'):
        engine = Engine(precision=precision, workers=workers, executor=executor, count_ops=count_ops,
                        block_size=block_size, n_min=n_min)
        self.engine = engine
        self.defaults = MatmulPlan(block_size=block_size, n_min=n_min, workers=workers, executor=executor)
        self.field = engine.field
        self.generators = Generators(engine)
        self.simple = SimpleMatmul(engine)
        self.block = BlockMatmul(engine)
        self.strassen = StrassenMatmul(engine)
        self.winograd = WinogradMatmul(engine)
        self.lu = LuSolver(engine)
        self._algorithms = {
            'simple': self.simple,
            'block': self.block,
            'strassen': self.strassen,
            'winograd': self.winograd,
        }

    def matmul(self, a, b, algorithm='block', **plan_overrides):
        """
        A B with the algorithm named `algorithm`; keyword arguments override
        the session's plan defaults (block_size, n_min, workers).
        """
        try:
            api = self._algorithms[algorithm]
        except KeyError:
            raise PlanError('unknown algorithm {!r}, expected one of {}'.format(algorithm, sorted(self._algorithms)),
                            code='unknown_algorithm') from None
        return api.multiply(a, b, replace(self.defaults, algorithm=algorithm, **plan_overrides))

    def counts(self):
        return self.engine.counts()

    def reset_counts(self):
        self.engine.reset_counts()
