import math

import pytest
from loguru import logger

from istanbul_pricer.schemas.market import MarketParams, IstanbulContract
from istanbul_pricer.schemas.simulation import SimConfig
from tests.published import RATE, VOL

# grid monitoring of B exp(-0.5826 sigma sqrt(dt)) behaves like continuous monitoring of B
GRID_BARRIER_SHIFT = 0.5826


def make_inputs(spot, strike, barrier, maturity, rate=RATE, vol=VOL):
    market = MarketParams(spot=float(spot), rate=rate, vol=vol, maturity=float(maturity))
    return market, IstanbulContract(strike=float(strike), barrier=float(barrier))


def continuously_monitored(market, contract, steps):
    """
    contract whose barrier, checked on a grid of `steps` points, tracks the
    continuously monitored barrier of `contract`
    """
    shift = math.exp(-GRID_BARRIER_SHIFT * market.vol * math.sqrt(market.maturity / steps))
    return IstanbulContract(strike=contract.strike, barrier=contract.barrier * shift)


@pytest.fixture
def first_row():
    """
    first published row, S0 = 57, K = 63, B = 60, T = 0.5
    """
    return make_inputs(57, 63, 60, 0.5)


@pytest.fixture
def quick_config():
    return SimConfig(steps=100, paths=2000, seed=7, use_cv=True)


@pytest.fixture
def caplog_loguru(caplog):
    handler = logger.add(caplog.handler, format='{message}', level='DEBUG')
    logger.enable('istanbul_pricer')
    yield caplog
    logger.disable('istanbul_pricer')
    logger.remove(handler)
