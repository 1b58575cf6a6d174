"""
law of the first hitting time of the up-barrier and of the geometric average
G_T on the event that the barrier is hit before maturity
"""
import math

from loguru import logger

from istanbul_pricer import settings
from istanbul_pricer.exceptions import DomainError, RegimeError, AccuracyError
from istanbul_pricer.schemas.derived import DerivedParams, K_GE_B, K_LT_B, REGIMES
from istanbul_pricer.schemas.kernel import KernelArgs
from istanbul_pricer.schemas.market import MarketParams, IstanbulContract
from istanbul_pricer.schemas.result import QuadratureResult
from istanbul_pricer.utils.math_kernel import kernel_integral, UNDERFLOW_EXPONENT
from istanbul_pricer.utils.normal import cdf
from istanbul_pricer.utils.quadrature import integrate_1d

CDF = 'cdf'
PDF = 'pdf'

SQRT3 = math.sqrt(3.0)


class SingularityError(DomainError):
    """
    c or e too close to zero for the approximation formulas
    """


def singular_drift(market: MarketParams, epsilon=settings.SINGULARITY_EPSILON):
    """
    whether c = 3 mu / (2 sigma) + 1 or e = c - 1 lies within epsilon of zero
    :param market:
    :param epsilon:
    :return:
    """
    e = 3 * market.mu / (2 * market.vol)
    return abs(e) <= epsilon or abs(e + 1) <= epsilon


def _require_barrier(market: MarketParams, barrier: float):
    if not barrier > market.spot:
        raise RegimeError(f'barrier {barrier} must lie above spot {market.spot}; '
                          f'for barrier <= spot the price is the geometric Asian call')


def derive_params(market: MarketParams, contract: IstanbulContract, regime: str, guard=True) -> DerivedParams:
    """
    coefficients a, h, c, d, e, k, l, w and z1..z13 (K >= B) or z1..z14 (K < B)
    :param market:
    :param contract:
    :param regime: K_ge_B or K_lt_B
    :param guard: raise SingularityError when c or e is within epsilon of zero;
        without it only an exact zero is refused
    :return:
    """
    if regime not in REGIMES:
        raise DomainError(f'unknown regime {regime}')
    _require_barrier(market, contract.barrier)
    if singular_drift(market, epsilon=settings.SINGULARITY_EPSILON if guard else 0.0):
        raise SingularityError(f'drift r={market.rate} puts c or e within '
                               f'{settings.SINGULARITY_EPSILON if guard else 0.0} of zero')

    sigma, horizon = market.vol, market.maturity
    mu = market.mu
    b = contract.scaled_barrier(market)
    strike, barrier = contract.strike, contract.barrier
    log_kb = math.log(strike / barrier)

    a = SQRT3 / (sigma * math.sqrt(horizon))
    h = abs(b) / math.sqrt(horizon)
    c = 3 * mu / (2 * sigma) + 1
    e = c - 1
    d = 3 * mu ** 4 / (128 * sigma ** 2)
    k = (horizon - b ** 2) * mu ** 4 / 128 - mu ** 2 / 4
    l = 2 / (horizon * h) + horizon * mu ** 4 * h / 128
    w = -mu ** 4 * math.sqrt(3 * horizon) / (128 * sigma)

    def tail(x):
        # -d/x L^2 + 2d/x^2 L - 2d/x^3 - k/x at L = log(K/B)
        return -d * log_kb ** 2 / x + 2 * d * log_kb / x ** 2 - 2 * d / x ** 3 - k / x

    z = {}
    if regime == K_GE_B:
        z[1] = a * log_kb + h
        z[2] = z[1] - c / a
        z[3] = c ** 2 / (2 * a ** 2) - h * c / a
        z[4] = (-2 * d * h / a ** 3 - d * (1 - h ** 2) / (c * a ** 2) + 2 * d / c ** 3
                + 2 * d * h / (a * c ** 2) + d * c / a ** 4 + k / c)
        z[5] = (strike / barrier) ** c * tail(c)
        z[6] = (d * log_kb / (a * c) - 2 * d / (a * c ** 2) - d * h / (c * a ** 2)
                + d / a ** 3 + w / a ** 2)
        z[7] = w * c / a ** 3 - w * h / a ** 2 + l / a
        z[8] = z[1] - e / a
        z[9] = e ** 2 / (2 * a ** 2) - h * e / a
        z[10] = (-2 * d * h / a ** 3 - d * (1 - h ** 2) / (e * a ** 2) + 2 * d / e ** 3
                 + 2 * d * h / (a * e ** 2) + d * e / a ** 4 + k / e)
        z[11] = (strike / barrier) ** e * tail(e)
        z[12] = (d * log_kb / (a * e) - 2 * d / (a * e ** 2) - d * h / (e * a ** 2)
                 + d / a ** 3)
        z[13] = w * e / a ** 3 - w * h / a ** 2 + l / a
    else:
        log_bk = -log_kb
        z[1] = a * log_bk + h + c / a
        z[2] = z[1] - a * log_bk
        z[3] = c ** 2 / (2 * a ** 2) + h * c / a
        z[4] = (2 * d * h / a ** 3 - d * (1 - h ** 2) / (c * a ** 2) + 2 * d / c ** 3
                - 2 * d * h / (a * c ** 2) + d * c / a ** 4 + k / c
                + w * c / a ** 3 + w * h / a ** 2 - l / a)
        z[5] = 2 * d / (a * c ** 2) - d * h / (c * a ** 2) - d / a ** 3 - w / a ** 2
        z[6] = 2 * (2 * h * d / a ** 3 - 2 * h * d / (c ** 2 * a) + w * h / a ** 2 - l / a) - z[4]
        z[7] = tail(c)
        z[8] = a * log_bk + h + e / a
        z[9] = z[8] - a * log_bk
        z[10] = e ** 2 / (2 * a ** 2) + h * e / a
        z[11] = (2 * d * h / a ** 3 - d * (1 - h ** 2) / (e * a ** 2) + 2 * d / e ** 3
                 - 2 * d * h / (a * e ** 2) + d * e / a ** 4 + k / e
                 + w * e / a ** 3 + w * h / a ** 2 - l / a)
        z[12] = 2 * d / (a * e ** 2) - d * h / (e * a ** 2) - d / a ** 3 - w / a ** 2
        z[13] = 2 * (2 * h * d / a ** 3 - 2 * h * d / (e ** 2 * a) + w * h / a ** 2 - l / a) - z[11]
        z[14] = tail(e)

    params = DerivedParams(regime=regime, drift_rn=market.drift_rn, mu=mu, b=b,
                           a=a, h=h, c=c, d=d, e=e, k=k, l=l, w=w, z=z)
    logger.debug(f'derived params {params.as_dict()}')
    return params


def hitting_density(t: float, market: MarketParams, barrier: float):
    """
    density of the first hitting time of the barrier,
        h(t) = b / sqrt(2 pi t^3) exp(-(b - mu t)^2 / (2t))
    :param t:
    :param market:
    :param barrier:
    :return:
    """
    if not t > 0:
        raise DomainError(f'hitting time density needs t > 0, got {t}')
    _require_barrier(market, barrier)
    b = math.log(barrier / market.spot) / market.vol
    exponent = (b - market.mu * t) ** 2 / (2 * t)
    if exponent > UNDERFLOW_EXPONENT:
        return 0.0
    return b / math.sqrt(2 * math.pi * t ** 3) * math.exp(-exponent)


def hitting_probability(market: MarketParams, barrier: float, horizon: float = None):
    """
    P(tau < T), the closed-form integral of hitting_density over (0, T)
    :param market:
    :param barrier:
    :param horizon: defaults to the maturity
    :return:
    """
    _require_barrier(market, barrier)
    horizon = market.maturity if horizon is None else horizon
    if not horizon > 0:
        raise DomainError(f'horizon must be positive, got {horizon}')
    b = math.log(barrier / market.spot) / market.vol
    mu, root = market.mu, math.sqrt(horizon)
    first = float(cdf((-b + mu * horizon) / root))
    second = float(cdf((-b - mu * horizon) / root))
    # exp(2 mu b) may overflow while the product stays bounded
    return first + math.exp(2 * mu * b + math.log(second)) if second > 0 else first


def density_inner_integral(z: float, market: MarketParams, barrier: float,
                           rel_tol=settings.QUAD_REL_TOL, abs_tol=1e-300) -> QuadratureResult:
    """
    time integral of the joint density of log(G_T / B),
        int_0^T (T-t)^(-1/2) t^(-3/2) exp(-3 z^2 / (2 (T-t) sigma^2) - mu^2 t / 8 - b^2 / (2t)) dt
    :param z: log(x / B)
    :param market:
    :param barrier:
    :param rel_tol:
    :param abs_tol:
    :return:
    """
    _require_barrier(market, barrier)
    b = math.log(barrier / market.spot) / market.vol
    args = KernelArgs(alpha=SQRT3 * abs(z) / market.vol, gamma=b ** 2 / 2,
                      horizon=market.maturity, beta=market.mu ** 2 / 8)
    return kernel_integral(args, 'A', abs_tol=abs_tol, rel_tol=rel_tol)


def joint_density_z(z: float, market: MarketParams, barrier: float, rel_tol=settings.QUAD_REL_TOL,
                    abs_tol=1e-300):
    """
    density of Z = log(G_T / B) on {tau < T}
    :param z:
    :param market:
    :param barrier:
    :param rel_tol:
    :param abs_tol: absolute tolerance of the time integral
    :return:
    """
    sigma, mu, horizon = market.vol, market.mu, market.maturity
    b = math.log(barrier / market.spot) / sigma
    exponent = 3 * mu * z / (2 * sigma) - 3 * mu ** 2 * horizon / 8 + b * mu
    inner = density_inner_integral(z, market, barrier, rel_tol=rel_tol, abs_tol=abs_tol).value
    return SQRT3 * b / (2 * math.pi * sigma) * math.exp(exponent) * inner


def joint_law_gt(x: float, market: MarketParams, contract: IstanbulContract, mode: str = CDF,
                 rel_tol=settings.QUAD_REL_TOL):
    """
    exact law of G_T restricted to {tau < T}: P(G_T <= x, tau < T) for mode cdf,
    its derivative in x for mode pdf
    :param x:
    :param market:
    :param contract:
    :param mode: cdf or pdf
    :param rel_tol:
    :return:
    """
    if not x > 0:
        raise DomainError(f'joint law needs x > 0, got {x}')
    _require_barrier(market, contract.barrier)
    log_xb = math.log(x / contract.barrier)
    if mode == PDF:
        return joint_density_z(log_xb, market, contract.barrier, rel_tol=rel_tol) / x
    if mode != CDF:
        raise DomainError(f'unknown mode {mode}')

    sigma, drift, horizon = market.vol, market.drift_rn, market.maturity

    def integrand(t):
        remaining = horizon - t
        if remaining <= 0:
            return 0.0
        level = SQRT3 * (log_xb - drift * remaining / 2) / (sigma * math.sqrt(remaining))
        return float(cdf(level)) * hitting_density(t, market, contract.barrier)

    b = contract.scaled_barrier(market)
    t_cut = b ** 2 / (2 * UNDERFLOW_EXPONENT)
    if t_cut >= horizon:
        return 0.0
    try:
        return integrate_1d(integrand, t_cut, horizon, abs_tol=settings.QUAD_ABS_TOL, rel_tol=rel_tol).value
    except AccuracyError:
        logger.error(f'joint law cdf at x={x} did not converge')
        raise
