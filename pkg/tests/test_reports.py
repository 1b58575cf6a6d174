import numpy as np
import pandas as pd
import pytest

from istanbul_pricer.exceptions import DomainError, ReportError
from istanbul_pricer.reports import delta_fd, run_report
from istanbul_pricer.reports.report import row_seed, relative_error_pct
from istanbul_pricer.schemas.report import ReportSpec, TABLE1, TABLE3, FIG1, FIG2, FIG3
from istanbul_pricer.schemas.simulation import SimConfig
from tests.conftest import make_inputs
from tests.published import TABLE1 as PUBLISHED_TABLE1, TABLE3_MATURITIES

QUICK = {'paths': 200, 'steps': 50}


def read_rows(path):
    # cells as written, failed columns as empty strings
    return pd.read_csv(path, dtype=str, keep_default_na=False).to_dict('records')


def test_spec_validation(tmp_path):
    with pytest.raises(DomainError):
        ReportSpec(report_id='table9', output_path=str(tmp_path / 'x.csv'))
    with pytest.raises(DomainError):
        ReportSpec(report_id=TABLE1, output_path=str(tmp_path / 'x.csv'), overrides={'vol': 0.2})


def test_relative_error():
    assert relative_error_pct(99.0, 100.0) == pytest.approx(1.0)
    assert relative_error_pct(101.0, 100.0) == pytest.approx(1.0)


def test_row_seeds_are_distinct():
    seeds = {row_seed(20210, i) for i in range(100)}
    assert len(seeds) == 100
    assert row_seed(20210, 3) == row_seed(20210, 3)


def test_fig1(tmp_path):
    path = tmp_path / 'fig1.csv'
    assert run_report(ReportSpec(report_id=FIG1, output_path=str(path))) == 0
    rows = read_rows(path)
    assert len(rows) == 15 * 81
    values = {(float(r['r']), float(r['sigma'])): float(r['value']) for r in rows}
    assert values[(0.05, 0.3)] == pytest.approx(((0.05 - 0.045) / 0.3) ** 2 / 8, abs=5e-7)
    assert values[(0.05, 0.3)] == pytest.approx(3.5e-5, abs=1e-9)
    assert max(values, key=values.get) == (0.08, 0.1)
    assert all(r['status'] == 'ok' for r in rows)


def test_csv_layout(tmp_path):
    path = tmp_path / 'fig1.csv'
    run_report(ReportSpec(report_id=FIG1, output_path=str(path)))
    content = path.read_bytes()
    assert content.startswith(b'r,sigma,value,status\n0.010000,0.100000,')
    assert b'\n0.050000,0.300000,0.000035,ok\n' in content
    assert b'\r' not in content


def test_table1_quick(tmp_path):
    path = tmp_path / 'table1.csv'
    run_report(ReportSpec(report_id=TABLE1, output_path=str(path), overrides=QUICK))
    rows = read_rows(path)
    assert len(rows) == 27
    for row, published in zip(rows, PUBLISHED_TABLE1):
        assert (float(row['S0']), float(row['K']), float(row['B']), float(row['T'])) == published[:4]
        assert float(row['approx']) == pytest.approx(published[4], abs=1e-4)
        expected = abs(float(row['approx']) - float(row['mcv'])) / float(row['mcv']) * 100
        assert float(row['re_pct']) == pytest.approx(expected, abs=2e-3)
        assert row['status'] == 'ok'


def test_table3_quick(tmp_path):
    path = tmp_path / 'table3.csv'
    run_report(ReportSpec(report_id=TABLE3, output_path=str(path), overrides=QUICK))
    rows = read_rows(path)
    assert [float(r['T']) for r in rows] == [2, 3, 4, 5, 6]
    assert all(float(r['re_t1']) >= 0 and float(r['re_t2']) >= 0 for r in rows)


@pytest.mark.slow
def test_table3_relative_errors_stay_below_two_percent(tmp_path):
    path = tmp_path / 'table3.csv'
    assert run_report(ReportSpec(report_id=TABLE3, output_path=str(path))) == 0
    rows = read_rows(path)
    assert [float(r['T']) for r in rows] == list(TABLE3_MATURITIES)
    for row in rows:
        assert float(row['re_t1']) <= 2.0
        assert float(row['re_t2']) <= 2.0


def test_byte_stable(tmp_path):
    first, second = tmp_path / 'a.csv', tmp_path / 'b.csv'
    for path in (first, second):
        run_report(ReportSpec(report_id=FIG2, output_path=str(path), seed=5, overrides=QUICK))
    assert first.read_bytes() == second.read_bytes()


def test_fig2_geometric_below_arithmetic(tmp_path):
    path = tmp_path / 'fig2.csv'
    run_report(ReportSpec(report_id=FIG2, output_path=str(path), overrides={'paths': 1000, 'steps': 100}))
    rows = read_rows(path)
    assert {r['panel'] for r in rows} == {'left', 'right'}
    assert len(rows) == 62
    for row in rows:
        assert float(row['gic_approx']) <= float(row['aic_mc']) + 3 * float(row['aic_se'])


def test_fig3_delta_range_and_shape(tmp_path):
    path = tmp_path / 'fig3.csv'
    run_report(ReportSpec(report_id=FIG3, output_path=str(path)))
    rows = read_rows(path)
    assert len(rows) == 3 * 25 + 3 * 41
    deltas = [float(r['delta']) for r in rows]
    assert all(-0.01 <= d <= 1.05 for d in deltas)
    for vol in (0.2, 0.3, 0.4):
        left = [float(r['delta']) for r in rows if r['panel'] == 'left' and float(r['sigma']) == vol]
        assert len(left) == 25
        assert all(a <= b + 1e-9 for a, b in zip(left, left[1:]))


def test_failed_row_is_kept(tmp_path, monkeypatch):
    from istanbul_pricer.reports import report

    original = report.gic_approx

    def flaky(market, contract):
        if market.spot == 57 and market.maturity == 1.0:
            raise DomainError('boom')
        return original(market, contract)

    monkeypatch.setattr(report, 'gic_approx', flaky)
    path = tmp_path / 'table1.csv'
    assert run_report(ReportSpec(report_id=TABLE1, output_path=str(path), overrides=QUICK)) == 1
    rows = read_rows(path)
    assert len(rows) == 27
    failed = [r for r in rows if r['status'] == 'failed']
    assert len(failed) == 1
    assert failed[0]['S0'] == '57' and failed[0]['approx'] == ''


def test_unwritable_path(tmp_path):
    spec = ReportSpec(report_id=FIG1, output_path=str(tmp_path / 'missing' / 'fig1.csv'))
    with pytest.raises(ReportError):
        run_report(spec)


def test_deep_out_of_the_money_delta():
    market, contract = make_inputs(60, 600, 63, 1.0)
    assert abs(delta_fd('approx', market, contract)) < 0.01


def test_delta_bump_validation(first_row):
    with pytest.raises(DomainError):
        delta_fd('approx', *first_row, bump=0.0)
    with pytest.raises(DomainError):
        delta_fd('approx', *first_row, bump=10.0)


def test_delta_is_stable_under_bump_halving():
    market, contract = make_inputs(80, 80, 85, 1.0)
    full = delta_fd('approx', market, contract, bump=0.8)
    half = delta_fd('approx', market, contract, bump=0.4)
    assert abs(full - half) < 1e-4
    assert 0 < full < 1


def test_forward_and_central_agree():
    market, contract = make_inputs(70, 80, 85, 1.0)
    central = delta_fd('approx', market, contract)
    forward = delta_fd('approx', market, contract, forward=True)
    assert forward == pytest.approx(central, abs=2e-2)


def test_simulated_delta_uses_common_numbers():
    market, contract = make_inputs(80, 80, 85, 1.0)
    config = SimConfig(steps=100, paths=4000, seed=3)
    simulated = delta_fd('mc', market, contract, config=config)
    assert simulated == delta_fd('mc', market, contract, config=config)
    assert simulated == pytest.approx(delta_fd('approx', market, contract), abs=0.15)


@pytest.mark.slow
def test_quadrature_delta_is_nondecreasing():
    values = []
    for spot in np.arange(60, 80, 6):
        market, contract = make_inputs(spot, 80, 85, 1.0)
        values.append(delta_fd('quadrature', market, contract))
    assert all(a <= b + 1e-6 for a, b in zip(values, values[1:]))
