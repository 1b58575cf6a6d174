import math
from dataclasses import dataclass, replace

from istanbul_pricer.exceptions import DomainError


def _check_positive(name, value):
    """
    raise DomainError unless value is a finite positive number
    :param name:
    :param value:
    :return:
    """
    if not math.isfinite(value) or value <= 0:
        raise DomainError(f'{name} must be finite and positive, got {value}')


@dataclass(frozen=True)
class MarketParams:
    """
    Black-Scholes world: spot S0, risk-free rate r, volatility sigma, maturity T in years
    """
    spot: float
    rate: float
    vol: float
    maturity: float

    def __post_init__(self):
        _check_positive('spot', self.spot)
        _check_positive('vol', self.vol)
        _check_positive('maturity', self.maturity)
        if not math.isfinite(self.rate):
            raise DomainError(f'rate must be finite, got {self.rate}')

    @property
    def drift_rn(self):
        """
        risk-neutral log drift r - sigma^2 / 2
        :return:
        """
        return self.rate - self.vol ** 2 / 2

    @property
    def mu(self):
        """
        drift in volatility units
        :return:
        """
        return self.drift_rn / self.vol

    @property
    def discount(self):
        return math.exp(-self.rate * self.maturity)

    def with_spot(self, spot):
        return replace(self, spot=spot)

    def with_rate(self, rate):
        return replace(self, rate=rate)


@dataclass(frozen=True)
class IstanbulContract:
    """
    fixed strike K and up-barrier B of a geometric Istanbul call
    """
    strike: float
    barrier: float

    def __post_init__(self):
        _check_positive('strike', self.strike)
        _check_positive('barrier', self.barrier)

    def scaled_barrier(self, market: MarketParams):
        """
        b = log(B / S0) / sigma
        :param market:
        :return:
        """
        return math.log(self.barrier / market.spot) / market.vol

    def barrier_active(self, market: MarketParams):
        """
        whether the barrier still lies above the spot
        :param market:
        :return:
        """
        return self.barrier > market.spot
