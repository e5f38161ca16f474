"""Air-to-ground channel primitives.

Two-level directional antenna, log-distance path loss, elevation-dependent
LoS probability and shadow-fading spread. Angles are carried in radians;
the empirical LoS and shadowing fits are evaluated on degrees.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError

SPEED_OF_LIGHT = 299_792_458.0  # m/s
UNIT_GAIN_BEAMWIDTH_DEG = math.sqrt(29000.0)


@dataclass(frozen=True)
class EnvironmentParams:
    """Propagation constants for one environment class."""

    alpha: float
    gamma: float
    k1: float
    k2: float
    g1: float
    g2: float
    mu_los_db: float
    mu_nlos_db: float
    path_loss_exp: float

    def __post_init__(self):
        for name in ("alpha", "gamma", "k1", "g1"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be > 0, got {getattr(self, name)!r}")
        for name in ("k2", "g2"):
            if not getattr(self, name) >= 0:
                raise DomainError(f"{name} must be >= 0, got {getattr(self, name)!r}")
        if not self.path_loss_exp >= 2:
            raise DomainError(f"path_loss_exp must be >= 2, got {self.path_loss_exp!r}")
        if not self.mu_nlos_db >= self.mu_los_db:
            raise DomainError("mu_nlos_db must be >= mu_los_db")


URBAN = EnvironmentParams(
    alpha=0.6, gamma=0.11, k1=10.39, k2=0.05, g1=29.06, g2=0.03,
    mu_los_db=1.0, mu_nlos_db=20.0, path_loss_exp=2.5,
)


@dataclass(frozen=True)
class RadioConfig:
    """Transmitter and receiver parameters.

    ``beamwidth_deg`` is the full half-power beamwidth; the ground footprint
    radius is ``h * tan(beamwidth/2)``.
    """

    carrier_hz: float = 2e9
    tx_power_dbm: float = 35.0
    beamwidth_deg: float = 80.0
    sidelobe_gain_lin: float = 0.1
    sinr_threshold_lin: float = 5.0
    noise_dbm: float = -120.0
    coverage_eps: float = 0.8

    def __post_init__(self):
        if not 0 < self.beamwidth_deg < 180:
            raise DomainError(f"beamwidth_deg must be in (0, 180), got {self.beamwidth_deg!r}")
        if not self.carrier_hz > 0:
            raise DomainError(f"carrier_hz must be > 0, got {self.carrier_hz!r}")
        if not 0 <= self.sidelobe_gain_lin < main_lobe_gain(self.beamwidth_deg):
            raise DomainError("sidelobe_gain_lin must be in [0, main-lobe gain)")
        if not 0 < self.coverage_eps < 1:
            raise DomainError(f"coverage_eps must be in (0, 1), got {self.coverage_eps!r}")
        if not self.sinr_threshold_lin > 0:
            raise DomainError("sinr_threshold_lin must be > 0")
        if not math.isfinite(self.tx_power_dbm) or not math.isfinite(self.noise_dbm):
            raise DomainError("tx_power_dbm and noise_dbm must be finite")

    @property
    def half_beam_rad(self) -> float:
        return math.radians(self.beamwidth_deg) / 2

    def footprint_radius(self, altitude_m: float) -> float:
        """Largest horizontal range inside the main lobe at this altitude."""
        return altitude_m * math.tan(self.half_beam_rad)


@dataclass(frozen=True)
class LinkGeometry:
    """UAV-to-user geometry; distance and elevation are derived on construction."""

    horiz_range_m: float
    altitude_m: float
    distance_m: float = field(init=False)
    elevation_rad: float = field(init=False)

    def __post_init__(self):
        if not self.altitude_m > 0:
            raise DomainError(f"altitude_m must be > 0, got {self.altitude_m!r}")
        if not self.horiz_range_m >= 0:
            raise DomainError(f"horiz_range_m must be >= 0, got {self.horiz_range_m!r}")
        d = math.hypot(self.horiz_range_m, self.altitude_m)
        object.__setattr__(self, "distance_m", d)
        object.__setattr__(self, "elevation_rad", math.asin(min(1.0, self.altitude_m / d)))


def dbm_to_mw(dbm: float) -> float:
    return 10.0 ** (dbm / 10.0)


def mw_to_dbm(mw: float) -> float:
    return 10.0 * math.log10(mw)


def main_lobe_gain(beamwidth_deg: float) -> float:
    """Main-lobe gain approximation 29000 / beamwidth^2 (beamwidth in degrees)."""
    if not 0 < beamwidth_deg < 180:
        raise DomainError(f"beamwidth_deg must be in (0, 180), got {beamwidth_deg!r}")
    return 29000.0 / beamwidth_deg ** 2


def main_lobe_gain_db(beamwidth_deg: float) -> float:
    return 10.0 * math.log10(main_lobe_gain(beamwidth_deg))


def antenna_gain(sector_angle_rad: float, config: RadioConfig) -> float:
    """Linear gain toward ``sector_angle_rad`` off boresight.

    The main lobe is the closed interval [-beamwidth/2, beamwidth/2].
    """
    if not -math.pi <= sector_angle_rad <= math.pi:
        raise DomainError("sector_angle_rad must be in [-pi, pi]")
    if abs(math.degrees(sector_angle_rad)) <= config.beamwidth_deg / 2:
        return main_lobe_gain(config.beamwidth_deg)
    return config.sidelobe_gain_lin


def path_loss_db(distance_m: float, carrier_hz: float, path_loss_exp: float) -> float:
    if not distance_m > 0:
        raise DomainError(f"distance_m must be > 0, got {distance_m!r}")
    if not carrier_hz > 0:
        raise DomainError(f"carrier_hz must be > 0, got {carrier_hz!r}")
    return 10.0 * path_loss_exp * math.log10(4 * math.pi * carrier_hz * distance_m / SPEED_OF_LIGHT)


def _check_elevation(elevation_rad: float) -> None:
    if not 0 < elevation_rad <= math.pi / 2 + 1e-12:
        raise DomainError(f"elevation_rad must be in (0, pi/2], got {elevation_rad!r}")


def los_probability(elevation_rad: float, env: EnvironmentParams) -> float:
    """Probability of a line-of-sight link, zero at or below 15 degrees."""
    _check_elevation(elevation_rad)
    base = math.degrees(elevation_rad) - 15.0
    if base <= 0:
        return 0.0
    return min(1.0, max(0.0, env.alpha * base ** env.gamma))


def nlos_probability(elevation_rad: float, env: EnvironmentParams) -> float:
    return 1.0 - los_probability(elevation_rad, env)


def shadow_sigma(elevation_rad: float, env: EnvironmentParams, los_flag: bool) -> float:
    """Shadow-fading standard deviation in dB; the exponent takes degrees."""
    _check_elevation(elevation_rad)
    theta_deg = math.degrees(elevation_rad)
    if los_flag:
        return env.k1 * math.exp(-env.k2 * theta_deg)
    return env.g1 * math.exp(-env.g2 * theta_deg)
