"""
Monte-Carlo pricing on a uniform time grid: grid-monitored hitting time,
trapezoid averages and the geometric Asian call as control variate
"""
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator

import numpy as np
from loguru import logger

from istanbul_pricer import settings
from istanbul_pricer.exceptions import DomainError
from istanbul_pricer.pricers.base import BasePricer
from istanbul_pricer.pricers.closed_form import gac_price, lognormal_call
from istanbul_pricer.schemas.market import MarketParams, IstanbulContract
from istanbul_pricer.schemas.result import PriceEstimate, CRUDE, CV
from istanbul_pricer.schemas.simulation import SimConfig, PathGrid

GIC = 'gic'
GAC = 'gac'
AIC = 'aic'
UOC = 'uoc'
KINDS = (GIC, GAC, AIC, UOC)
CONTROLLED_KINDS = (GIC, AIC)


def path_generator(seed: int, index: int) -> np.random.Generator:
    """
    independent stream of path `index`: Philox keyed by the seed, the path index
    in the top counter word
    :param seed:
    :param index:
    :return:
    """
    counter = np.array([0, 0, 0, index], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=seed, counter=counter))


def simulate_values(config: SimConfig, market: MarketParams, start: int, stop: int) -> np.ndarray:
    """
    prices of paths start..stop-1 on the grid, one row per path, column 0 the spot
    :param config:
    :param market:
    :param start:
    :param stop:
    :return: array of shape (stop - start, steps + 1)
    """
    steps = config.steps
    dt = market.maturity / steps
    shocks = np.stack([path_generator(config.seed, i).standard_normal(steps) for i in range(start, stop)])
    increments = market.drift_rn * dt + market.vol * math.sqrt(dt) * shocks
    log_values = np.zeros((stop - start, steps + 1))
    log_values[:, 1:] = np.cumsum(increments, axis=1)
    log_values += math.log(market.spot)
    return np.exp(log_values)


def _blocks(paths: int, block_size: int = settings.BLOCK_SIZE):
    return [(start, min(start + block_size, paths)) for start in range(0, paths, block_size)]


def simulate_paths(config: SimConfig, market: MarketParams) -> Iterator[PathGrid]:
    """
    stream the simulated paths in index order
    :param config:
    :param market:
    :return:
    """
    times = np.linspace(0.0, market.maturity, config.steps + 1)
    for start, stop in _blocks(config.paths):
        for values in simulate_values(config, market, start, stop):
            yield PathGrid(times=times, values=values)


def _tail_average(segments: np.ndarray, first: np.ndarray):
    """
    mean of segments[row, first[row]:] per row
    :param segments:
    :param first:
    :return:
    """
    steps = segments.shape[1]
    tail_sums = np.cumsum(segments[:, ::-1], axis=1)[:, ::-1]
    rows = np.arange(segments.shape[0])
    return tail_sums[rows, first] / (steps - first)


def batch_payoffs(values: np.ndarray, contract: IstanbulContract, kind: str = GIC) -> np.ndarray:
    """
    undiscounted payoffs of a block of paths on a uniform grid
    :param values: array of shape (paths, steps + 1)
    :param contract:
    :param kind: gic, gac, aic or uoc
    :return:
    """
    if kind not in KINDS:
        raise DomainError(f'unknown payoff kind {kind}, choose from {", ".join(KINDS)}')
    values = np.atleast_2d(values)
    strike, barrier = contract.strike, contract.barrier
    terminal = values[:, -1]
    european = np.maximum(terminal - strike, 0.0)

    if kind == UOC:
        return european * (values.max(axis=1) < barrier)

    if kind == AIC:
        segments = (values[:, :-1] + values[:, 1:]) / 2
    else:
        log_values = np.log(values)
        segments = (log_values[:, :-1] + log_values[:, 1:]) / 2

    if kind == GAC:
        return np.maximum(np.exp(segments.mean(axis=1)) - strike, 0.0)

    # a first crossing at the last grid point leaves an empty window and pays the European call
    crossed = values[:, :-1] >= barrier
    hit = crossed.any(axis=1)
    first = np.where(hit, crossed.argmax(axis=1), 0)
    average = _tail_average(segments, first)
    if kind == GIC:
        average = np.exp(average)
    return np.where(hit, np.maximum(average - strike, 0.0), european)


def path_payoff(path: PathGrid, contract: IstanbulContract, kind: str = GIC) -> float:
    return float(batch_payoffs(path.values[np.newaxis, :], contract, kind)[0])


def discrete_gac_price(market: MarketParams, strike: float, steps: int):
    """
    price of the geometric Asian call on the trapezoid average of an n-step grid;
    log G is normal with mean log S0 + (r - sigma^2/2) T / 2 and
    variance sigma^2 T (4 n^2 - 1) / (12 n^2)
    :param market:
    :param strike:
    :param steps:
    :return:
    """
    if steps < 1:
        raise DomainError(f'steps must be positive, got {steps}')
    log_mean = math.log(market.spot) + market.drift_rn * market.maturity / 2
    log_var = market.vol ** 2 * market.maturity * (4 * steps ** 2 - 1) / (12 * steps ** 2)
    return lognormal_call(log_mean, log_var, strike, market.discount)


def _crude(discounted: np.ndarray, degenerate_control=False):
    paths = len(discounted)
    return PriceEstimate(value=float(discounted.mean()),
                         std_error=float(discounted.std(ddof=1) / math.sqrt(paths)),
                         paths=paths, method=CRUDE, degenerate_control=degenerate_control)


class MonteCarloPricer(BasePricer):
    """
    crude and control-variate Monte-Carlo estimators
    """

    name = 'mc'

    def __init__(self, block_size=settings.BLOCK_SIZE):
        """
        init Monte-Carlo pricer
        :param block_size: paths simulated per task
        """
        super(MonteCarloPricer, self).__init__()
        self.block_size = block_size

    def payoffs(self, config: SimConfig, market: MarketParams, contract: IstanbulContract, kind: str):
        """
        target payoffs and, with the control variate on, geometric Asian payoffs of the same paths
        :return: (target, control or None)
        """
        def run(block):
            start, stop = block
            values = simulate_values(config, market, start, stop)
            target = batch_payoffs(values, contract, kind)
            control = batch_payoffs(values, contract, GAC) if config.use_cv else None
            logger.debug(f'simulated paths {start} to {stop}')
            return target, control

        blocks = _blocks(config.paths, self.block_size)
        # map keeps block order, so the result does not depend on the worker count
        with ThreadPoolExecutor(max_workers=config.workers) as executor:
            results = list(executor.map(run, blocks))
        target = np.concatenate([r[0] for r in results])
        control = np.concatenate([r[1] for r in results]) if config.use_cv else None
        return target, control

    def process(self, market: MarketParams, contract: IstanbulContract, config: SimConfig = None,
                kind: str = GIC, **kwargs):
        """
        :param market:
        :param contract:
        :param config: simulation settings, defaults to SimConfig()
        :param kind: payoff kind
        :return: PriceEstimate
        """
        config = config or SimConfig()
        if kind not in KINDS:
            raise DomainError(f'unknown payoff kind {kind}, choose from {", ".join(KINDS)}')
        if config.use_cv and kind not in CONTROLLED_KINDS:
            raise DomainError(f'the control variate applies to {", ".join(CONTROLLED_KINDS)}, not {kind}')

        target, control = self.payoffs(config, market, contract, kind)
        discount = market.discount
        h1 = discount * target
        if not config.use_cv:
            return _crude(h1)

        h2 = discount * control
        control_var = h2.var(ddof=1)
        if control_var == 0:
            logger.warning('geometric Asian payoffs have zero variance, falling back to the crude estimator')
            return _crude(h1, degenerate_control=True)
        theta = float(np.cov(h1, h2)[0, 1] / control_var)
        controlled = h1 - theta * (h2 - gac_price(market, contract.strike))
        return PriceEstimate(value=float(controlled.mean()),
                             std_error=float(controlled.std(ddof=1) / math.sqrt(config.paths)),
                             paths=config.paths, method=CV, theta_star=theta)


monte_carlo_pricer = MonteCarloPricer()


def price_mc(config: SimConfig, market: MarketParams, contract: IstanbulContract, kind: str = GIC) -> PriceEstimate:
    """
    Monte-Carlo price of the given payoff kind
    :param config:
    :param market:
    :param contract:
    :param kind: gic, gac, aic or uoc
    :return:
    """
    return monte_carlo_pricer.price(market, contract, config=config, kind=kind)
