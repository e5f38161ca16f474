"""Downlink coverage probability under mean nearest-UAV interference."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .channel import (
    EnvironmentParams, LinkGeometry, RadioConfig, dbm_to_mw, los_probability,
    main_lobe_gain_db, path_loss_db, shadow_sigma, SPEED_OF_LIGHT,
)
from .errors import BeamFootprintViolation

# relative slack on the footprint test so beam-edge ranges computed as
# h*tan(theta/2) are not rejected by rounding
_FOOTPRINT_RTOL = 1e-12


@dataclass(frozen=True)
class InterfererSpec:
    """Nearest interfering UAV as seen from the served user."""

    geometry: LinkGeometry
    sector_angle_rad: float


@dataclass(frozen=True)
class CoverageQuery:
    serving: LinkGeometry
    env: EnvironmentParams
    radio: RadioConfig
    interferer: Optional[InterfererSpec] = None


def q_function(x: float) -> float:
    """Standard normal tail probability P[Z > x]."""
    return 0.5 * math.erfc(x / math.sqrt(2.0))


def mean_interference_mw(interferer: InterfererSpec, env: EnvironmentParams,
                         radio: RadioConfig) -> float:
    """Mean received power from the interferer, in mW.

    The interferer reaches the user through its side lobe, so the gain is the
    configured flat side-lobe level regardless of the exact sector angle.
    """
    geom = interferer.geometry
    p_los = los_probability(geom.elevation_rad, env)
    excess = (10.0 ** (-env.mu_los_db / 10.0) * p_los
              + 10.0 ** (-env.mu_nlos_db / 10.0) * (1.0 - p_los))
    spread = (4 * math.pi * radio.carrier_hz * geom.distance_m / SPEED_OF_LIGHT) ** (-env.path_loss_exp)
    return dbm_to_mw(radio.tx_power_dbm) * radio.sidelobe_gain_lin * excess * spread


def p_min_db(radio: RadioConfig, interference_mw: float) -> float:
    """Detection threshold 10*log10(beta*N + beta*I) in dBm."""
    if interference_mw < 0:
        raise ValueError("interference_mw must be >= 0")
    beta = radio.sinr_threshold_lin
    return 10.0 * math.log10(beta * dbm_to_mw(radio.noise_dbm) + beta * interference_mw)


def check_footprint(serving: LinkGeometry, radio: RadioConfig) -> None:
    limit = radio.footprint_radius(serving.altitude_m)
    if serving.horiz_range_m > limit * (1 + _FOOTPRINT_RTOL):
        raise BeamFootprintViolation(
            f"range {serving.horiz_range_m:.6g} m exceeds beam footprint "
            f"{limit:.6g} m at altitude {serving.altitude_m:.6g} m")


def _tail(margin_db: float, sigma_db: float) -> float:
    # sigma -> 0 limit of Q(margin/sigma)
    if sigma_db == 0:
        return 1.0 if margin_db < 0 else (0.5 if margin_db == 0 else 0.0)
    return q_function(margin_db / sigma_db)


def q_arguments(query: CoverageQuery) -> tuple[float, float, float, float]:
    """Return (P_LoS, margin_LoS, margin_NLoS, P_min) for a query.

    The margins are the numerators P_min + L - P_t - G + mu of the two
    Gaussian tail terms, in dB.
    """
    check_footprint(query.serving, query.radio)
    env, radio, geom = query.env, query.radio, query.serving
    i_bar = 0.0 if query.interferer is None else mean_interference_mw(query.interferer, env, radio)
    pmin = p_min_db(radio, i_bar)
    loss = path_loss_db(geom.distance_m, radio.carrier_hz, env.path_loss_exp)
    base = pmin + loss - radio.tx_power_dbm - main_lobe_gain_db(radio.beamwidth_deg)
    return los_probability(geom.elevation_rad, env), base + env.mu_los_db, base + env.mu_nlos_db, pmin


def coverage_probability(query: CoverageQuery) -> float:
    """Probability that the served user's received power reaches P_min.

    Raises BeamFootprintViolation when the user is outside the main lobe.
    """
    p_los, m_los, m_nlos, _ = q_arguments(query)
    el = query.serving.elevation_rad
    term_los = _tail(m_los, shadow_sigma(el, query.env, True))
    term_nlos = _tail(m_nlos, shadow_sigma(el, query.env, False))
    return min(1.0, max(0.0, p_los * term_los + (1.0 - p_los) * term_nlos))
