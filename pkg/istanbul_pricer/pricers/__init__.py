from istanbul_pricer import settings
from istanbul_pricer.exceptions import DomainError
from istanbul_pricer.pricers.closed_form import gic_approx, gac_price
from istanbul_pricer.pricers.monte_carlo import price_mc, GIC
from istanbul_pricer.pricers.quadrature import gic_quadrature
from istanbul_pricer.schemas.market import MarketParams, IstanbulContract
from istanbul_pricer.schemas.simulation import SimConfig

APPROX = 'approx'
QUADRATURE = 'quadrature'
MC = 'mc'
ENGINES = (APPROX, QUADRATURE, MC)


def price(market: MarketParams, contract: IstanbulContract, engine: str = APPROX,
          config: SimConfig = None, rel_tol=settings.PRICE_REL_TOL):
    """
    price of the geometric Istanbul call with the chosen engine
    :param market:
    :param contract:
    :param engine: approx, quadrature or mc
    :param config: simulation settings of the mc engine
    :param rel_tol: tolerance of the quadrature engine
    :return: float
    """
    if engine == APPROX:
        return gic_approx(market, contract).value
    if engine == QUADRATURE:
        if not contract.barrier_active(market):
            return gac_price(market, contract.strike)
        return gic_quadrature(market, contract, rel_tol=rel_tol).value
    if engine == MC:
        return price_mc(config or SimConfig(), market, contract, GIC).value
    raise DomainError(f'unknown engine {engine}, choose from {", ".join(ENGINES)}')
