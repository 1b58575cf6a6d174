import math

from loguru import logger

from istanbul_pricer import settings
from istanbul_pricer.exceptions import DomainError, NegativePriceError
from istanbul_pricer.pricers.base import BasePricer
from istanbul_pricer.schemas.derived import DerivedParams, K_GE_B, K_LT_B
from istanbul_pricer.schemas.market import MarketParams, IstanbulContract
from istanbul_pricer.schemas.result import ApproxPrice, THEOREM1, THEOREM2, GAC_COINCIDENCE
from istanbul_pricer.utils.model import derive_params, singular_drift
from istanbul_pricer.utils.normal import pdf, cdf, sf


def lognormal_call(log_mean: float, log_var: float, strike: float, discount: float):
    """
    discounted call on a lognormal underlying, exp(-rT) E[(G - K)+]
    :param log_mean: mean of log G
    :param log_var: variance of log G
    :param strike:
    :param discount:
    :return:
    """
    if strike <= 0:
        raise DomainError(f'strike must be positive, got {strike}')
    sd = math.sqrt(log_var)
    forward = math.exp(log_mean + log_var / 2)
    if sd == 0:
        return discount * max(forward - strike, 0.0)
    d1 = (log_mean - math.log(strike) + log_var) / sd
    d2 = d1 - sd
    return discount * (forward * float(cdf(d1)) - strike * float(cdf(d2)))


def gac_price(market: MarketParams, strike: float):
    """
    geometric Asian call on the continuous average over [0, T]; the average is
    lognormal with log-mean log S0 + (r - sigma^2/2) T / 2 and log-variance sigma^2 T / 3
    :param market:
    :param strike:
    :return:
    """
    log_mean = math.log(market.spot) + market.drift_rn * market.maturity / 2
    log_var = market.vol ** 2 * market.maturity / 3
    return lognormal_call(log_mean, log_var, strike, market.discount)


def black_scholes_call(market: MarketParams, strike: float):
    log_mean = math.log(market.spot) + market.drift_rn * market.maturity
    return lognormal_call(log_mean, market.vol ** 2 * market.maturity, strike, market.discount)


def uoc_price(market: MarketParams, strike: float, barrier: float):
    """
    continuously monitored up-and-out call, no rebate
    :param market:
    :param strike:
    :param barrier:
    :return:
    """
    spot, horizon, rate, sigma = market.spot, market.maturity, market.rate, market.vol
    if spot > barrier:
        raise DomainError(f'up-and-out call needs spot <= barrier, got {spot} > {barrier}')
    # knocked out at inception, and worthless whenever the strike is at or above the barrier
    if spot == barrier or strike >= barrier:
        return 0.0

    sig_sqrt_t = sigma * math.sqrt(horizon)
    lam = (rate + 0.5 * sigma ** 2) / sigma ** 2
    discount = market.discount
    ratio = barrier / spot

    x1 = math.log(spot / strike) / sig_sqrt_t + lam * sig_sqrt_t
    x2 = math.log(spot / barrier) / sig_sqrt_t + lam * sig_sqrt_t
    y1 = math.log(barrier ** 2 / (spot * strike)) / sig_sqrt_t + lam * sig_sqrt_t
    y2 = math.log(barrier / spot) / sig_sqrt_t + lam * sig_sqrt_t

    vanilla = spot * cdf(x1) - strike * discount * cdf(x1 - sig_sqrt_t)
    above = spot * cdf(x2) - strike * discount * cdf(x2 - sig_sqrt_t)
    reflected = (spot * ratio ** (2 * lam) * cdf(-y1)
                 - strike * discount * ratio ** (2 * lam - 2) * cdf(-y1 + sig_sqrt_t))
    reflected_above = (spot * ratio ** (2 * lam) * cdf(-y2)
                       - strike * discount * ratio ** (2 * lam - 2) * cdf(-y2 + sig_sqrt_t))
    return max(0.0, float(vanilla - above + reflected - reflected_above))


def perturb_drift(market: MarketParams, epsilon=settings.SINGULARITY_EPSILON):
    """
    shift the rate so that |e| (or |c|) equals epsilon, keeping its sign
    :param market:
    :param epsilon:
    :return:
    """
    sigma = market.vol
    e = 3 * market.mu / (2 * sigma)
    if abs(e) <= epsilon:
        e = math.copysign(epsilon, e)
    else:
        e = math.copysign(epsilon, e + 1) - 1
    mu = 2 * sigma * e / 3
    return market.with_rate(mu * sigma + sigma ** 2 / 2)


class ClosedFormPricer(BasePricer):
    """
    second-order Taylor approximation of the geometric Istanbul call
    """

    name = 'approx'

    def __init__(self, negative_clamp=settings.NEGATIVE_CLAMP, barrier_epsilon=settings.BARRIER_EPSILON):
        """
        init closed form pricer
        :param negative_clamp: negative outputs above -negative_clamp * S0 are rounded to 0
        :param barrier_epsilon: scaled barrier distance below which S0 counts as at the barrier
        """
        super(ClosedFormPricer, self).__init__()
        self.negative_clamp = negative_clamp
        self.barrier_epsilon = barrier_epsilon

    def _prefactor(self, market: MarketParams, params: DerivedParams):
        sigma, horizon = market.vol, market.maturity
        mu, b = params.mu, params.b
        return math.sqrt(3) * b / (2 * sigma) * math.exp(
            -3 * mu ** 2 * horizon / 8 + b * mu - market.rate * horizon)

    def _strike_above_barrier(self, market: MarketParams, contract: IstanbulContract, p: DerivedParams):
        """
        price for K >= B
        :return:
        """
        z = p.z
        bracket_b = (math.exp(z[3]) * (z[4] * sf(z[2]) + z[6] * pdf(z[2]) + z[7] * sf(z[2]))
                     + z[5] * sf(z[1]))
        bracket_k = (math.exp(z[9]) * (z[10] * sf(z[8]) + (z[12] + p.w / p.a ** 2) * pdf(z[8])
                                       + z[13] * sf(z[8]))
                     + z[11] * sf(z[1]))
        return self._prefactor(market, p) * float(contract.barrier * bracket_b - contract.strike * bracket_k)

    def _below_barrier_bracket(self, p: DerivedParams, log_bk, x, z_far, z_near, exponent, slope, mid, reflected_slope, tail):
        """
        one braced term of the K < B formula; the B term uses x = c with z1..z7,
        the K term x = e with z8..z14
        """
        a, d, h = p.a, p.d, p.h
        reflected = z_near - 2 * x / a
        body = (slope * (sf(z_far) - sf(z_near))
                - mid * pdf(z_near)
                + (d * log_bk / (x * a) + mid) * pdf(z_far)
                + math.exp(-2 * h * x / a) * (-reflected_slope * sf(reflected)
                                              - (mid + 2 * d * h / (x * a ** 2)) * pdf(reflected)))
        return math.exp(exponent) * body + tail * sf(z_far - x / a) * math.exp(-x * log_bk)

    def _strike_below_barrier(self, market: MarketParams, contract: IstanbulContract, p: DerivedParams):
        """
        price for K < B, up-and-out call included
        :return:
        """
        z = p.z
        log_bk = math.log(contract.barrier / contract.strike)
        bracket_b = self._below_barrier_bracket(p, log_bk, p.c, z[1], z[2], z[3], z[4], z[5], z[6], z[7])
        bracket_k = self._below_barrier_bracket(p, log_bk, p.e, z[8], z[9], z[10], z[11], z[12], z[13], z[14])
        integral = self._prefactor(market, p) * float(contract.barrier * bracket_b - contract.strike * bracket_k)
        return integral + uoc_price(market, contract.strike, contract.barrier)

    def _clamp(self, value, market: MarketParams):
        if value >= 0:
            return value
        if value >= -self.negative_clamp * market.spot:
            return 0.0
        raise NegativePriceError(f'approximation returned {value}, below the roundoff allowance')

    def process(self, market: MarketParams, contract: IstanbulContract, **kwargs):
        """
        dispatch on the regime: coincidence with the geometric Asian call when
        S0 >= B, first formula when K >= B, second otherwise
        :param market:
        :param contract:
        :return: ApproxPrice
        """
        if not contract.barrier_active(market) or contract.scaled_barrier(market) < self.barrier_epsilon:
            if contract.barrier_active(market):
                logger.warning(f'barrier {contract.barrier} is at the spot, using the geometric Asian call')
            return ApproxPrice(value=gac_price(market, contract.strike), regime=GAC_COINCIDENCE)

        perturbed = singular_drift(market)
        if perturbed:
            shifted = perturb_drift(market)
            logger.warning(f'c or e vanishes at r={market.rate}, pricing at r={shifted.rate}')
            market = shifted

        if contract.strike >= contract.barrier:
            params = derive_params(market, contract, K_GE_B, guard=False)
            value, regime = self._strike_above_barrier(market, contract, params), THEOREM1
        else:
            params = derive_params(market, contract, K_LT_B, guard=False)
            value, regime = self._strike_below_barrier(market, contract, params), THEOREM2
        return ApproxPrice(value=self._clamp(value, market), regime=regime,
                           coefficients=params, perturbed=perturbed)


closed_form_pricer = ClosedFormPricer()


def gic_approx(market: MarketParams, contract: IstanbulContract) -> ApproxPrice:
    """
    closed-form approximation of the geometric Istanbul call
    :param market:
    :param contract:
    :return:
    """
    return closed_form_pricer.price(market, contract)
