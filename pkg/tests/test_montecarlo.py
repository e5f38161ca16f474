import dataclasses
import math

import pytest

from uavplan.channel import URBAN, EnvironmentParams, LinkGeometry, RadioConfig
from uavplan.coverage import CoverageQuery, InterfererSpec, coverage_probability
from uavplan.montecarlo import CHUNK, simulate_coverage

RADIO = RadioConfig()


def query(r=1500, h=2000, pt=35, interferer=None):
    return CoverageQuery(LinkGeometry(r, h), URBAN, dataclasses.replace(RADIO, tx_power_dbm=pt), interferer)


def test_deterministic_success_without_spread():
    env = EnvironmentParams(alpha=0.6, gamma=0.11, k1=1e-12, k2=0, g1=1e-12, g2=0,
                            mu_los_db=3, mu_nlos_db=3, path_loss_exp=2.5)
    res = simulate_coverage(CoverageQuery(LinkGeometry(500, 2000), env, RADIO), 5000, 1)
    assert res.empirical_pcov == 1.0
    assert res.std_error == 0.0


def test_same_seed_same_result():
    assert simulate_coverage(query(), 20_000, 42) == simulate_coverage(query(), 20_000, 42)
    assert simulate_coverage(query(), 20_000, 42) != simulate_coverage(query(), 20_000, 43)


@pytest.mark.parametrize("n", [1, CHUNK - 1, CHUNK, 3 * CHUNK + 17])
def test_thread_count_does_not_change_result(n):
    q = query(2320, 2765, 18.5)
    assert simulate_coverage(q, n, 9, workers=1) == simulate_coverage(q, n, 9, workers=4)


def test_std_error_formula():
    res = simulate_coverage(query(2320, 2765, 18.5), 10_000, 5)
    p = res.empirical_pcov
    assert 0 <= p <= 1
    assert res.std_error == pytest.approx(math.sqrt(p * (1 - p) / res.n_samples))


def test_std_error_scales_inverse_sqrt_n():
    q = query(2320, 2765, 18.5)
    small = simulate_coverage(q, 1_000, 2)
    large = simulate_coverage(q, 100_000, 2)
    assert small.std_error / large.std_error == pytest.approx(10.0, rel=0.15)


@pytest.mark.parametrize("r,h,pt", [(1500, 2000, 35), (2320, 2765, 18.5), (1000, 1500, 30)])
def test_agrees_with_analytic_under_interference(r, h, pt):
    horiz = 2 * RADIO.footprint_radius(h) - r
    q = query(r, h, pt, InterfererSpec(LinkGeometry(horiz, h), math.atan2(horiz, h)))
    res = simulate_coverage(q, 100_000, 21)
    assert abs(res.empirical_pcov - coverage_probability(q)) <= 3 * res.std_error


def test_rejects_empty_sample():
    with pytest.raises(ValueError):
        simulate_coverage(query(), 0, 0)
