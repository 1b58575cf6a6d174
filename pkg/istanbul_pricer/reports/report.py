"""
CSV data of the published tables and figures
"""
from typing import Callable, Dict, Iterator, Tuple

import numpy as np
import pandas as pd
from loguru import logger

from istanbul_pricer import settings
from istanbul_pricer.exceptions import IstanbulError, ReportError
from istanbul_pricer.presets import figures, tables
from istanbul_pricer.pricers import APPROX
from istanbul_pricer.pricers.closed_form import gic_approx
from istanbul_pricer.pricers.monte_carlo import price_mc, GIC, AIC
from istanbul_pricer.reports.delta import delta_fd
from istanbul_pricer.schemas.market import MarketParams, IstanbulContract
from istanbul_pricer.schemas.report import ReportSpec, TABLE1, TABLE2, TABLE3, FIG1, FIG2, FIG3
from istanbul_pricer.schemas.simulation import SimConfig

OK = 'ok'
FAILED = 'failed'
STATUS = 'status'
FLOAT_FORMAT = '%.6f'

COLUMNS = {
    TABLE1: ['S0', 'K', 'B', 'T', 'approx', 'mcv', 'se', 're_pct'],
    TABLE2: ['S0', 'K', 'B', 'T', 'approx', 'mcv', 'se', 're_pct'],
    TABLE3: ['T', 're_t1', 're_t2'],
    FIG1: ['r', 'sigma', 'value'],
    FIG2: ['panel', 'S0', 'K', 'B', 'gic_approx', 'aic_mc', 'aic_se'],
    FIG3: ['panel', 'S0', 'K', 'B', 'sigma', 'T', 'delta'],
}

Row = Tuple[Dict[str, object], Callable[[], Dict[str, float]]]


def row_seed(seed: int, index: int) -> int:
    """
    independent 64-bit seed of report row `index`
    :param seed:
    :param index:
    :return:
    """
    return int(np.random.SeedSequence([seed, index]).generate_state(1, np.uint64)[0])


def relative_error_pct(approx: float, reference: float):
    return abs(approx - reference) / reference * 100


class ReportBuilder(object):
    """
    yields the rows of one report, each a dict of fixed inputs and a
    callable computing the priced columns
    """

    def __init__(self, spec: ReportSpec):
        self.spec = spec
        self.overrides = spec.overrides
        self.index = 0

    def config(self) -> SimConfig:
        """
        simulation settings of the next Monte-Carlo row
        :return:
        """
        self.index += 1
        return SimConfig(steps=self.overrides.get('steps', settings.STEPS),
                         paths=self.overrides.get('paths', settings.PATHS),
                         seed=row_seed(self.spec.seed, self.index),
                         workers=self.overrides.get('workers', settings.WORKERS))

    def rows(self) -> Iterator[Row]:
        return getattr(self, f'rows_{self.spec.report_id}')()

    def _table_rows(self, contracts):
        for spot, strike, barrier in contracts:
            for maturity in tables.MATURITIES:
                market = MarketParams(spot=spot, rate=tables.RATE, vol=tables.VOL, maturity=maturity)
                contract = IstanbulContract(strike=strike, barrier=barrier)
                config = self.config()

                def compute(market=market, contract=contract, config=config):
                    approx = gic_approx(market, contract).value
                    estimate = price_mc(config, market, contract, GIC)
                    return {'approx': approx, 'mcv': estimate.value, 'se': estimate.std_error,
                            're_pct': relative_error_pct(approx, estimate.value)}

                yield {'S0': spot, 'K': strike, 'B': barrier, 'T': maturity}, compute

    def rows_table1(self):
        return self._table_rows(tables.TABLE1_CONTRACTS)

    def rows_table2(self):
        return self._table_rows(tables.TABLE2_CONTRACTS)

    def rows_table3(self):
        for maturity in tables.TABLE3_MATURITIES:
            legs = []
            for column, (spot, strike, barrier) in zip(('re_t1', 're_t2'), tables.TABLE3_SETS):
                market = MarketParams(spot=spot, rate=tables.RATE, vol=tables.VOL, maturity=maturity)
                legs.append((column, market, IstanbulContract(strike=strike, barrier=barrier), self.config()))

            def compute(legs=legs):
                result = {}
                for column, market, contract, config in legs:
                    approx = gic_approx(market, contract).value
                    estimate = price_mc(config, market, contract, GIC)
                    result[column] = relative_error_pct(approx, estimate.value)
                return result

            yield {'T': maturity}, compute

    def rows_fig1(self):
        for rate in figures.FIG1_RATES:
            for vol in figures.FIG1_VOLS:
                market = MarketParams(spot=1.0, rate=float(rate), vol=float(vol), maturity=1.0)
                yield {'r': float(rate), 'sigma': float(vol)}, lambda market=market: {'value': market.mu ** 2 / 8}

    def _fig2_row(self, panel, spot, strike, barrier):
        market = MarketParams(spot=float(spot), rate=figures.RATE, vol=figures.VOL, maturity=figures.FIG2_MATURITY)
        contract = IstanbulContract(strike=float(strike), barrier=float(barrier))
        config = self.config()

        def compute():
            estimate = price_mc(config, market, contract, AIC)
            return {'gic_approx': gic_approx(market, contract).value,
                    'aic_mc': estimate.value, 'aic_se': estimate.std_error}

        return {'panel': panel, 'S0': spot, 'K': strike, 'B': barrier}, compute

    def rows_fig2(self):
        for spot in figures.FIG2_SPOTS:
            yield self._fig2_row('left', int(spot), figures.FIG2_LEFT_STRIKE, figures.FIG2_LEFT_BARRIER)
        for strike in figures.FIG2_STRIKES:
            yield self._fig2_row('right', figures.FIG2_RIGHT_SPOT, int(strike), figures.FIG2_RIGHT_BARRIER)

    def _fig3_row(self, panel, spot, strike, vol, maturity):
        market = MarketParams(spot=float(spot), rate=figures.RATE, vol=vol, maturity=maturity)
        contract = IstanbulContract(strike=float(strike), barrier=float(figures.FIG3_BARRIER))
        engine = self.overrides.get('engine', APPROX)
        options = {'config': self.config()} if engine == 'mc' else {}

        def compute():
            return {'delta': delta_fd(engine, market, contract, bump=self.overrides.get('bump'), **options)}

        return {'panel': panel, 'S0': spot, 'K': strike, 'B': figures.FIG3_BARRIER,
                'sigma': vol, 'T': maturity}, compute

    def rows_fig3(self):
        for vol in figures.FIG3_VOLS:
            for spot in figures.FIG3_SPOTS:
                yield self._fig3_row('left', int(spot), figures.FIG3_LEFT_STRIKE, vol, figures.FIG3_LEFT_MATURITY)
        for maturity in figures.FIG3_MATURITIES:
            for strike in figures.FIG3_STRIKES:
                yield self._fig3_row('right', figures.FIG3_RIGHT_SPOT, int(strike), figures.VOL, maturity)


def run_report(spec: ReportSpec):
    """
    write the CSV of a report; a row whose pricing fails is kept with empty
    priced columns and status failed
    :param spec:
    :return: number of failed rows
    """
    columns = COLUMNS[spec.report_id]
    try:
        handle = open(spec.output_path, 'w', newline='', encoding='utf-8')
    except OSError as e:
        raise ReportError(f'cannot write report to {spec.output_path}: {e}') from e

    records, failed = [], 0
    for number, (fixed, compute) in enumerate(ReportBuilder(spec).rows(), start=1):
        record = dict(fixed)
        try:
            record.update(compute())
            record[STATUS] = OK
        except (IstanbulError, ArithmeticError):
            logger.exception(f'{spec.report_id} row {number} {fixed} failed')
            record[STATUS] = FAILED
            failed += 1
        logger.info(f'{spec.report_id} row {number}: {record[STATUS]}')
        records.append(record)

    frame = pd.DataFrame(records, columns=columns + [STATUS])
    with handle:
        frame.to_csv(handle, index=False, float_format=FLOAT_FORMAT, lineterminator='\n')
    logger.info(f'{spec.report_id} written to {spec.output_path}, {failed} failed rows')
    return failed
