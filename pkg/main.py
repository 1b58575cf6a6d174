from istanbul_pricer.pricers.closed_form import gic_approx
from istanbul_pricer.pricers.quadrature import gic_quadrature
from istanbul_pricer.pricers.monte_carlo import price_mc
from istanbul_pricer.schemas.market import MarketParams, IstanbulContract
from istanbul_pricer.schemas.simulation import SimConfig
import json

market = MarketParams(spot=57, rate=0.05, vol=0.3, maturity=0.5)
contract = IstanbulContract(strike=63, barrier=60)
print(json.dumps(gic_approx(market, contract).as_dict(), indent=2))
print(json.dumps(gic_quadrature(market, contract).as_dict(), indent=2))

market = MarketParams(spot=79, rate=0.05, vol=0.3, maturity=1)
contract = IstanbulContract(strike=81, barrier=85)
print(json.dumps(price_mc(SimConfig(), market, contract).as_dict(), indent=2))
