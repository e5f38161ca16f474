import dataclasses
import math

import numpy as np
import pytest

from uavplan.channel import URBAN, LinkGeometry, RadioConfig
from uavplan.coverage import CoverageQuery, InterfererSpec, coverage_probability
from uavplan.errors import BeamFootprintViolation, NoCoverage, Unreachable
from uavplan.montecarlo import simulate_coverage
from uavplan.solver import Binding, coverage_radius, lifetime_metric, min_transmit_power

RADIO = RadioConfig(carrier_hz=2e9, tx_power_dbm=35, beamwidth_deg=80, sidelobe_gain_lin=0.1,
                    sinr_threshold_lin=5, noise_dbm=-120, coverage_eps=0.8)


def at_power(p):
    return dataclasses.replace(RADIO, tx_power_dbm=p)


def pcov(r, h, p, interferer=None):
    return coverage_probability(CoverageQuery(LinkGeometry(r, h), URBAN, at_power(p), interferer))


def test_radius_beam_limited_at_high_power():
    sol = coverage_radius(at_power(80), URBAN, 2000)
    assert sol.binding is Binding.BEAM_LIMITED
    assert sol.radius_m == pytest.approx(2000 * math.tan(math.radians(40)))


def test_radius_no_coverage_at_low_power():
    with pytest.raises(NoCoverage):
        coverage_radius(at_power(-100), URBAN, 2000)


def test_radius_urban_reference_setup_is_beam_limited():
    sol = coverage_radius(RADIO, URBAN, 5000)
    assert 0 <= sol.radius_m <= 4195.5
    assert sol.binding is Binding.BEAM_LIMITED
    assert sol.radius_m == pytest.approx(4195.498155886399, abs=0.1)
    mc = simulate_coverage(CoverageQuery(LinkGeometry(sol.radius_m, 5000), URBAN, RADIO), 100_000, 3)
    assert mc.empirical_pcov >= RADIO.coverage_eps


def test_radius_power_limited_regression_matches_monte_carlo():
    radio = at_power(24)
    sol = coverage_radius(radio, URBAN, 5000)
    assert sol.binding is Binding.POWER_LIMITED
    assert sol.radius_m == pytest.approx(2764.97, abs=0.1)
    assert sol.pcov_at_radius >= radio.coverage_eps
    # the empirical estimate brackets the crossing 50 m either side
    inside = simulate_coverage(CoverageQuery(LinkGeometry(sol.radius_m - 50, 5000), URBAN, radio), 100_000, 11)
    outside = simulate_coverage(CoverageQuery(LinkGeometry(sol.radius_m + 50, 5000), URBAN, radio), 100_000, 12)
    assert inside.empirical_pcov - 3 * inside.std_error > 0.8
    assert outside.empirical_pcov + 3 * outside.std_error < 0.8


def test_radius_targets_outermost_crossing():
    # the crossing returned must have no covered grid point beyond it
    radio = at_power(24)
    sol = coverage_radius(radio, URBAN, 5000)
    beyond = np.linspace(sol.radius_m + 0.5, radio.footprint_radius(5000), 400)
    assert all(pcov(r, 5000, 24) < 0.8 for r in beyond)


@pytest.mark.parametrize("p", np.arange(10.0, 40.0, 2.0))
def test_radius_monotone_in_power(p):
    h = 3000
    def radius(power):
        try:
            return coverage_radius(at_power(power), URBAN, h).radius_m
        except NoCoverage:
            return 0.0

    a, b = radius(p), radius(p + 2)
    assert b >= a
    assert b <= RADIO.footprint_radius(h) + 0.1


def test_power_forward_check_regression():
    p = min_transmit_power(2320, RADIO, URBAN, 2765)
    assert p == pytest.approx(19.554, abs=0.01)
    assert 0.8 <= pcov(2320, 2765, p) <= 0.81
    assert pcov(2320, 2765, p - 0.02) < 0.8


def test_power_round_trip_from_radius():
    sol = coverage_radius(at_power(24), URBAN, 5000)
    assert min_transmit_power(sol.radius_m, RADIO, URBAN, 5000) == pytest.approx(24, abs=0.05)


def test_power_vacuous_requirement_returns_floor():
    radio = dataclasses.replace(RADIO, coverage_eps=1e-300)
    assert min_transmit_power(2000, radio, URBAN, 2765) == -30.0


def test_power_errors():
    with pytest.raises(BeamFootprintViolation):
        min_transmit_power(3000, RADIO, URBAN, 2765)
    # co-located interferer in its main-lobe regime cannot be beaten by power
    strong = dataclasses.replace(RADIO, sidelobe_gain_lin=4.0)
    interferer = InterfererSpec(LinkGeometry(2320, 2765), 0.0)
    with pytest.raises(Unreachable):
        min_transmit_power(2320, strong, URBAN, 2765, interferer)


def test_power_monotone_in_radius():
    radii = np.linspace(100, 2320, 12)
    powers = [min_transmit_power(r, RADIO, URBAN, 2765) for r in radii]
    assert all(b >= a for a, b in zip(powers, powers[1:]))


@pytest.mark.parametrize("h", [800, 2765, 5000])
@pytest.mark.parametrize("frac", [0.2, 0.55, 0.9, 1.0])
def test_round_trip_radius_of_min_power(h, frac):
    r = frac * RADIO.footprint_radius(h)
    p = min_transmit_power(r, RADIO, URBAN, h)
    assert coverage_radius(at_power(p), URBAN, h).radius_m >= r - 1.0


def test_round_trip_with_interferer():
    h, r = 2000, 1500
    interferer = InterfererSpec(LinkGeometry(1700, h), math.atan2(1700, h))
    p = min_transmit_power(r, RADIO, URBAN, h, interferer)
    assert coverage_radius(at_power(p), URBAN, h, interferer).radius_m >= r - 1.0


def test_lifetime_metric():
    assert lifetime_metric(20, 20) == 1.0
    assert lifetime_metric(23.0103, 20) == pytest.approx(0.5, abs=1e-3)
    assert lifetime_metric(10, 20) == pytest.approx(10.0, abs=1e-6)
