import math
from dataclasses import dataclass, replace

from istanbul_pricer.exceptions import DomainError


@dataclass(frozen=True)
class KernelArgs:
    """
    arguments of the time integral
        int_0^T (T-t)^(-1/2) t^(-3/2) exp(-alpha^2 / (2(T-t)) - beta t - gamma / t) dt
    the expansion in beta is accurate up to beta^3 terms, large beta is accepted
    """
    alpha: float
    gamma: float
    horizon: float
    beta: float = 0.0

    def __post_init__(self):
        for name in ('alpha', 'gamma', 'horizon', 'beta'):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f'{name} must be finite')
        if self.alpha < 0:
            raise DomainError(f'alpha must be nonnegative, got {self.alpha}')
        if self.gamma <= 0:
            raise DomainError(f'gamma must be positive, got {self.gamma}')
        if self.horizon <= 0:
            raise DomainError(f'horizon must be positive, got {self.horizon}')

    @property
    def d(self):
        return (self.alpha + math.sqrt(2 * self.gamma)) / math.sqrt(self.horizon)

    @property
    def residual_scale(self):
        """
        size of the neglected beta^3 term relative to the leading term
        :return:
        """
        return abs(self.beta * self.horizon) ** 3 / 6

    def with_beta(self, beta):
        return replace(self, beta=beta)
