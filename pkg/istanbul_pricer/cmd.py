import argparse
import json
import sys

from loguru import logger

from istanbul_pricer import settings
from istanbul_pricer.__version__ import __version__
from istanbul_pricer.exceptions import AccuracyError, DomainError
from istanbul_pricer.pricers import price, ENGINES, APPROX, QUADRATURE, MC
from istanbul_pricer.pricers.closed_form import gic_approx
from istanbul_pricer.pricers.monte_carlo import price_mc, GIC
from istanbul_pricer.pricers.quadrature import gic_quadrature
from istanbul_pricer.reports import delta_fd, run_report
from istanbul_pricer.schemas.market import MarketParams, IstanbulContract
from istanbul_pricer.schemas.report import ReportSpec, REPORT_IDS
from istanbul_pricer.schemas.simulation import SimConfig

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_ACCURACY = 3
EXIT_IO = 4


def _add_market_arguments(parser):
    parser.add_argument('--s0', type=float, required=True, help='spot price')
    parser.add_argument('--strike', type=float, required=True)
    parser.add_argument('--barrier', type=float, required=True, help='up-barrier')
    parser.add_argument('--rate', type=float, required=True, help='risk-free rate')
    parser.add_argument('--vol', type=float, required=True, help='volatility')
    parser.add_argument('--maturity', type=float, required=True, help='maturity in years')
    parser.add_argument('--engine', choices=ENGINES, default=APPROX)
    parser.add_argument('--steps', type=int, default=settings.STEPS)
    parser.add_argument('--paths', type=int, default=settings.PATHS)
    parser.add_argument('--seed', type=int, default=settings.SEED, help='defaults to ISTANBUL_SEED')
    parser.add_argument('--cv', action='store_true', help='geometric Asian control variate')
    parser.add_argument('--workers', type=int, default=settings.WORKERS)


def build_parser():
    parser = argparse.ArgumentParser(prog='istanbul-pricer',
                                     description='price geometric Istanbul call options')
    parser.add_argument('--version', action='version', version=__version__)
    parser.add_argument('--log-level', default=settings.LOG_LEVEL,
                        help='loguru level, defaults to ISTANBUL_LOG_LEVEL or WARNING')
    commands = parser.add_subparsers(dest='command', required=True)

    price_parser = commands.add_parser('price', help='price one contract')
    _add_market_arguments(price_parser)

    delta_parser = commands.add_parser('delta', help='finite difference Delta of one contract')
    _add_market_arguments(delta_parser)
    delta_parser.add_argument('--bump', type=float, default=None, help='spot bump, defaults to 1%% of S0')
    delta_parser.add_argument('--forward', action='store_true', help='forward instead of central difference')

    report_parser = commands.add_parser('report', help='write the CSV data of a table or figure')
    report_parser.add_argument('--id', dest='report_id', choices=REPORT_IDS, required=True)
    report_parser.add_argument('--out', required=True, help='output CSV path')
    report_parser.add_argument('--seed', type=int, default=settings.SEED, help='defaults to ISTANBUL_SEED')
    report_parser.add_argument('--paths', type=int)
    report_parser.add_argument('--steps', type=int)
    report_parser.add_argument('--workers', type=int)
    report_parser.add_argument('--engine', choices=ENGINES, help='Delta engine of fig3')
    report_parser.add_argument('--bump', type=float, help='Delta bump of fig3')
    return parser


def _inputs(args):
    market = MarketParams(spot=args.s0, rate=args.rate, vol=args.vol, maturity=args.maturity)
    contract = IstanbulContract(strike=args.strike, barrier=args.barrier)
    config = SimConfig(steps=args.steps, paths=args.paths, seed=args.seed, use_cv=args.cv, workers=args.workers)
    return market, contract, config


def run_price(args):
    market, contract, config = _inputs(args)
    if args.engine == APPROX:
        detail = gic_approx(market, contract).as_dict()
    elif args.engine == MC:
        detail = price_mc(config, market, contract, GIC).as_dict()
    elif contract.barrier_active(market):
        detail = gic_quadrature(market, contract).as_dict()
    else:
        detail = {'value': price(market, contract, QUADRATURE)}
    return {'engine': args.engine, 'price': detail['value'], 'detail': detail}


def run_delta(args):
    market, contract, config = _inputs(args)
    options = {'config': config} if args.engine == MC else {}
    delta = delta_fd(args.engine, market, contract, bump=args.bump, forward=args.forward, **options)
    return {'engine': args.engine, 'delta': delta, 'forward': args.forward}


def run_report_command(args):
    overrides = {key: getattr(args, key) for key in ('paths', 'steps', 'workers', 'engine', 'bump')
                 if getattr(args, key) is not None}
    spec = ReportSpec(report_id=args.report_id, output_path=args.out, seed=args.seed, overrides=overrides)
    failed = run_report(spec)
    return {'report': args.report_id, 'output': args.out, 'failed_rows': failed}


COMMANDS = {
    'price': run_price,
    'delta': run_delta,
    'report': run_report_command,
}


def main(argv=None):
    """
    command line entry, returns the exit code
    :param argv:
    :return:
    """
    args = build_parser().parse_args(argv)
    logger.remove()
    logger.add(sys.stderr, level=args.log_level.upper())
    logger.enable('istanbul_pricer')
    try:
        result = COMMANDS[args.command](args)
    except DomainError as e:
        logger.error(f'invalid input: {e}')
        return EXIT_DOMAIN
    except AccuracyError as e:
        logger.error(f'accuracy not reached: {e}, best estimate {e.estimate}')
        return EXIT_ACCURACY
    except OSError as e:
        logger.error(f'output failed: {e}')
        return EXIT_IO
    print(json.dumps(result, indent=2, default=str))
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
