from loguru import logger

from istanbul_pricer import settings
from istanbul_pricer.exceptions import DomainError
from istanbul_pricer.pricers import price
from istanbul_pricer.schemas.market import MarketParams, IstanbulContract

MAX_BUMP_FRACTION = 0.1


def delta_fd(engine: str, market: MarketParams, contract: IstanbulContract, bump: float = None,
             forward=False, **options):
    """
    Delta by bump and reprice, central by default. The mc engine reuses the seed
    of its config on every leg, so both legs see the same paths.
    :param engine: approx, quadrature or mc
    :param market:
    :param contract:
    :param bump: spot bump, defaults to DELTA_BUMP * S0
    :param forward: first-order forward difference instead of central
    :param options: passed to the pricer, config or rel_tol
    :return:
    """
    spot = market.spot
    bump = settings.DELTA_BUMP * spot if bump is None else bump
    if not 0 < bump <= MAX_BUMP_FRACTION * spot:
        raise DomainError(f'bump must lie in (0, {MAX_BUMP_FRACTION} * S0], got {bump}')

    up = price(market.with_spot(spot + bump), contract, engine, **options)
    if forward:
        base = price(market, contract, engine, **options)
        delta = (up - base) / bump
    else:
        down = price(market.with_spot(spot - bump), contract, engine, **options)
        delta = (up - down) / (2 * bump)
    logger.debug(f'{engine} delta at S0={spot} with bump {bump}: {delta}')
    return delta
