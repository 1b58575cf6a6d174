from loguru import logger

from istanbul_pricer.schemas.market import MarketParams, IstanbulContract


class BasePricer(object):
    """
    Base Pricer which provide common methods
    """

    name = 'base'

    def process(self, market: MarketParams, contract: IstanbulContract, **kwargs):
        """
        process method that you should implement
        :param market:
        :param contract:
        :return:
        """
        logger.error('You must implement process method in your pricer.')
        raise NotImplementedError

    def price(self, market: MarketParams, contract: IstanbulContract, **kwargs):
        """
        base price method, it logs the request then calls the process
        method that child class implements
        :param market:
        :param contract:
        :return:
        """
        logger.debug(f'{self.name} pricing {market} {contract}')
        return self.process(market, contract, **kwargs)
