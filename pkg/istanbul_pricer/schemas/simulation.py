from dataclasses import dataclass

import numpy as np

from istanbul_pricer import settings
from istanbul_pricer.exceptions import DomainError

MAX_SEED = 2 ** 64 - 1


@dataclass(frozen=True)
class SimConfig:
    """
    time steps n, number of paths, 64-bit seed, control-variate toggle and
    worker threads used for path blocks
    """
    steps: int = settings.STEPS
    paths: int = settings.PATHS
    seed: int = settings.SEED
    use_cv: bool = True
    workers: int = settings.WORKERS

    def __post_init__(self):
        if self.steps < 2:
            raise DomainError(f'steps must be at least 2, got {self.steps}')
        if self.paths < 2:
            raise DomainError(f'paths must be at least 2, got {self.paths}')
        if not 0 <= self.seed <= MAX_SEED:
            raise DomainError(f'seed must fit in 64 unsigned bits, got {self.seed}')
        if self.workers < 1:
            raise DomainError(f'workers must be positive, got {self.workers}')


@dataclass(frozen=True)
class PathGrid:
    """
    one simulated path on the uniform grid t_0 = 0 ... t_n = T
    """
    times: np.ndarray
    values: np.ndarray

    @property
    def steps(self):
        return len(self.values) - 1

    @property
    def horizon(self):
        return float(self.times[-1])
