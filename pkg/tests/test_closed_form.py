import numpy as np
import pytest
from loguru import logger

from istanbul_pricer.exceptions import DomainError
from istanbul_pricer.pricers import price
from istanbul_pricer.pricers.closed_form import gic_approx, gac_price, uoc_price, black_scholes_call, \
    ClosedFormPricer
from istanbul_pricer.schemas.result import THEOREM1, THEOREM2, GAC_COINCIDENCE
from tests.conftest import make_inputs
from tests.published import TABLE1, TABLE2, row_id


@pytest.mark.parametrize('row', TABLE1, ids=row_id)
def test_published_values_strike_above_barrier(row):
    market, contract = make_inputs(*row[:4])
    result = gic_approx(market, contract)
    assert result.regime == THEOREM1
    assert result.value == pytest.approx(row[4], abs=1e-4)


@pytest.mark.parametrize('row', TABLE2, ids=row_id)
def test_published_values_strike_below_barrier(row):
    market, contract = make_inputs(*row[:4])
    result = gic_approx(market, contract)
    assert result.regime == THEOREM2
    assert result.value == pytest.approx(row[4], abs=1e-4)


def test_spot_at_or_above_barrier_is_geometric_asian():
    for spot in (60, 65):
        market, contract = make_inputs(spot, 63, 60, 1.0)
        result = gic_approx(market, contract)
        assert result.regime == GAC_COINCIDENCE
        assert result.value == gac_price(market, 63)


def test_approaches_geometric_asian_near_barrier():
    market, contract = make_inputs(59.999, 63, 60, 1.0)
    at_barrier, _ = make_inputs(60, 63, 60, 1.0)
    assert gic_approx(market, contract).value == pytest.approx(gac_price(at_barrier, 63), rel=1e-2)


@pytest.mark.parametrize('spot,barrier,maturity', [(57, 60, 0.5), (60, 64, 1.0), (79, 85, 1.5)])
def test_continuous_across_strike_equal_barrier(spot, barrier, maturity):
    at_barrier = gic_approx(*make_inputs(spot, barrier, barrier, maturity))
    below = gic_approx(*make_inputs(spot, barrier * (1 - 1e-9), barrier, maturity))
    assert at_barrier.regime == THEOREM1
    assert below.regime == THEOREM2
    assert abs(at_barrier.value - below.value) <= 1e-4 * spot


@pytest.mark.parametrize('spot,barrier', [(57, 60), (60, 64), (79, 85)])
def test_decreasing_in_strike(spot, barrier):
    strikes = np.linspace(0.8 * spot, 1.3 * spot, 26)
    values = [gic_approx(*make_inputs(spot, k, barrier, 1.0)).value for k in strikes]
    assert all(a >= b for a, b in zip(values, values[1:]))
    assert all(v >= 0 for v in values)


def test_singular_drift_is_perturbed():
    # r = sigma^2 / 2
    market, contract = make_inputs(57, 63, 60, 1.0, rate=0.045)
    result = gic_approx(market, contract)
    assert result.perturbed
    neighbour = gic_approx(*make_inputs(57, 63, 60, 1.0, rate=0.04501))
    assert result.value == pytest.approx(neighbour.value, abs=1e-3)
    assert not neighbour.perturbed


def test_perturbation_is_logged(caplog_loguru):
    gic_approx(*make_inputs(57, 63, 60, 1.0, rate=0.045))
    assert any('pricing at r=' in record.message for record in caplog_loguru.records)


def test_library_is_silent_by_default(caplog):
    handler = logger.add(caplog.handler, format='{message}', level='DEBUG')
    try:
        gic_approx(*make_inputs(57, 63, 60, 1.0, rate=0.045))
    finally:
        logger.remove(handler)
    assert not caplog.records


def test_coefficients_are_reported(first_row):
    result = gic_approx(*first_row)
    record = result.as_dict()
    assert record['regime'] == THEOREM1
    assert 'z13' in record['coefficients']


def test_dispatcher_uses_closed_form(first_row):
    assert price(*first_row) == gic_approx(*first_row).value
    with pytest.raises(DomainError):
        price(*first_row, engine='pde')


def test_negative_clamp():
    pricer = ClosedFormPricer(negative_clamp=1e-9)
    market, _ = make_inputs(57, 63, 60, 1.0)
    assert pricer._clamp(-1e-12, market) == 0.0
    with pytest.raises(DomainError):
        pricer._clamp(-1.0, market)


def test_geometric_asian_below_vanilla(first_row):
    market, _ = first_row
    for strike in (50, 57, 63):
        assert 0 < gac_price(market, strike) < black_scholes_call(market, strike)


def test_geometric_asian_zero_volatility_limit():
    market, _ = make_inputs(57, 50, 60, 1.0, vol=1e-9)
    forward = 57 * np.exp(0.05 / 2)
    assert gac_price(market, 50) == pytest.approx(np.exp(-0.05) * (forward - 50), rel=1e-6)


def test_up_and_out_far_barrier_is_vanilla(first_row):
    market, _ = first_row
    assert uoc_price(market, 63, 57 * 50) == pytest.approx(black_scholes_call(market, 63), rel=1e-8)


def test_up_and_out_edge_cases(first_row):
    market, _ = first_row
    assert uoc_price(market, 63, 60) == 0.0
    assert uoc_price(market, 50, 57) == 0.0
    assert 0 < uoc_price(market, 50, 70) < black_scholes_call(market, 50)
    with pytest.raises(DomainError):
        uoc_price(market, 50, 55)


def test_invalid_inputs():
    with pytest.raises(DomainError):
        make_inputs(57, 63, 60, 1.0, vol=0.0)
    with pytest.raises(DomainError):
        make_inputs(57, -63, 60, 1.0)
    with pytest.raises(DomainError):
        make_inputs(57, 63, 60, float('inf'))
