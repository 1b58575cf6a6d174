"""
reference price of the geometric Istanbul call: the hit part of the payoff is
integrated against the exact law of log(G_T / B), the no-hit part is the
up-and-out call
"""
import math

from loguru import logger

from istanbul_pricer import settings
from istanbul_pricer.exceptions import DomainError, RegimeError
from istanbul_pricer.pricers.base import BasePricer
from istanbul_pricer.pricers.closed_form import uoc_price
from istanbul_pricer.schemas.market import MarketParams, IstanbulContract
from istanbul_pricer.schemas.result import QuadratureResult
from istanbul_pricer.utils.model import joint_density_z
from istanbul_pricer.utils.quadrature import integrate_1d

# z-space cut where the Gaussian factor exp(-3 z^2 / (2 T sigma^2)) beats exp(-TAIL_EXPONENT)
TAIL_EXPONENT = 40.0
MIN_REL_TOL = 1e-8
INNER_TOL_RATIO = 0.1
INNER_ABS_TOL = 1e-13


class QuadraturePricer(BasePricer):
    """
    nested adaptive quadrature over z = log(x / B) and the hitting time
    """

    name = 'quadrature'

    def __init__(self, rel_tol=settings.PRICE_REL_TOL, abs_tol=settings.QUAD_ABS_TOL,
                 tail_exponent=TAIL_EXPONENT, inner_tol_ratio=INNER_TOL_RATIO):
        """
        init quadrature pricer
        :param rel_tol: relative tolerance of the outer integral
        :param abs_tol: absolute tolerance of the outer integral
        :param tail_exponent: truncation level of the z range
        :param inner_tol_ratio: inner tolerance as a fraction of the outer one
        """
        super(QuadraturePricer, self).__init__()
        self.rel_tol = rel_tol
        self.abs_tol = abs_tol
        self.tail_exponent = tail_exponent
        self.inner_tol_ratio = inner_tol_ratio

    def z_range(self, market: MarketParams):
        """
        half width of the z interval carrying the integrand; solves
        3 z^2 / (2 T sigma^2) - (|c| + 1) z = tail_exponent, c the e^z growth rate of the density
        :param market:
        :return:
        """
        curvature = 3 / (2 * market.maturity * market.vol ** 2)
        slope = abs(3 * market.mu / (2 * market.vol)) + 1
        return (slope + math.sqrt(slope ** 2 + 4 * curvature * self.tail_exponent)) / (2 * curvature)

    def hit_part(self, market: MarketParams, contract: IstanbulContract, rel_tol: float):
        """
        undiscounted E[(G_T - K)+ ; tau < T] as a z integral
        :param market:
        :param contract:
        :param rel_tol:
        :return: QuadratureResult
        """
        strike, barrier = contract.strike, contract.barrier
        inner_tol = rel_tol * self.inner_tol_ratio
        half_width = self.z_range(market)
        lo = max(math.log(strike / barrier), -half_width)
        if lo >= half_width:
            return QuadratureResult(value=0.0, abs_error_estimate=0.0, evaluations=0)

        def integrand(z):
            density = joint_density_z(z, market, barrier, rel_tol=inner_tol, abs_tol=INNER_ABS_TOL)
            return (barrier * math.exp(z) - strike) * density

        # |z| kink of the density at 0
        points = [0.0] if lo < 0 else None
        return integrate_1d(integrand, lo, half_width, abs_tol=self.abs_tol, rel_tol=rel_tol, points=points)

    def process(self, market: MarketParams, contract: IstanbulContract, rel_tol=None, **kwargs):
        """
        :param market:
        :param contract:
        :param rel_tol: overrides the pricer tolerance
        :return: QuadratureResult
        """
        rel_tol = self.rel_tol if rel_tol is None else rel_tol
        if rel_tol < MIN_REL_TOL:
            raise DomainError(f'rel_tol must be at least {MIN_REL_TOL}, got {rel_tol}')
        if not contract.barrier_active(market):
            raise RegimeError(f'quadrature needs barrier {contract.barrier} above spot {market.spot}')

        hit = self.hit_part(market, contract, rel_tol)
        knock_out = uoc_price(market, contract.strike, contract.barrier)
        value = market.discount * hit.value + knock_out
        logger.debug(f'quadrature hit part {hit.value} with {hit.evaluations} evaluations, '
                     f'up-and-out part {knock_out}')
        return QuadratureResult(value=value, abs_error_estimate=market.discount * hit.abs_error_estimate,
                                evaluations=hit.evaluations)


quadrature_pricer = QuadraturePricer()


def gic_quadrature(market: MarketParams, contract: IstanbulContract,
                   rel_tol=settings.PRICE_REL_TOL) -> QuadratureResult:
    """
    reference price of the geometric Istanbul call
    :param market:
    :param contract:
    :param rel_tol:
    :return:
    """
    return quadrature_pricer.price(market, contract, rel_tol=rel_tol)
