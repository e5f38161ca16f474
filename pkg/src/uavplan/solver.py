"""One-dimensional solves for coverage radius and minimum transmit power."""
from __future__ import annotations

import dataclasses
import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .channel import EnvironmentParams, LinkGeometry, RadioConfig
from .coverage import CoverageQuery, InterfererSpec, coverage_probability
from .errors import BeamFootprintViolation, DomainError, NoCoverage, NonMonotone, Unreachable

RADIUS_TOL_M = 0.1
POWER_TOL_DB = 0.01
GRID_POINTS = 512
POWER_BRACKET_DBM = (-30.0, 60.0)


class Binding(enum.Enum):
    POWER_LIMITED = "PowerLimited"
    BEAM_LIMITED = "BeamLimited"


@dataclass(frozen=True)
class RadiusSolution:
    radius_m: float
    binding: Binding
    pcov_at_radius: float


def _pcov(r: float, h: float, radio: RadioConfig, env: EnvironmentParams,
          interferer: Optional[InterfererSpec]) -> float:
    return coverage_probability(CoverageQuery(LinkGeometry(r, h), env, radio, interferer))


def coverage_radius(radio: RadioConfig, env: EnvironmentParams, altitude_m: float,
                    interferer: Optional[InterfererSpec] = None, *,
                    grid_points: int = GRID_POINTS, tol_m: float = RADIUS_TOL_M) -> RadiusSolution:
    """Largest range under the beam where coverage probability reaches epsilon.

    Coverage need not be monotone in range, so a grid scan locates the
    outermost crossing before bisection refines it.
    """
    if not altitude_m > 0:
        raise DomainError("altitude_m must be > 0")
    eps = radio.coverage_eps
    r_max = radio.footprint_radius(altitude_m)
    grid = np.linspace(0.0, r_max, grid_points)
    values = [_pcov(float(r), altitude_m, radio, env, interferer) for r in grid]
    ok = [i for i, p in enumerate(values) if p >= eps]
    if not ok:
        raise NoCoverage(f"coverage {eps} not met at any range up to {r_max:.6g} m "
                         f"(P_t = {radio.tx_power_dbm} dBm, h = {altitude_m:.6g} m)")
    last = ok[-1]
    if last == grid_points - 1:
        return RadiusSolution(r_max, Binding.BEAM_LIMITED, values[-1])
    lo, hi = float(grid[last]), float(grid[last + 1])
    while hi - lo > tol_m:
        mid = 0.5 * (lo + hi)
        if _pcov(mid, altitude_m, radio, env, interferer) >= eps:
            lo = mid
        else:
            hi = mid
    return RadiusSolution(lo, Binding.POWER_LIMITED, _pcov(lo, altitude_m, radio, env, interferer))


def min_transmit_power(required_radius_m: float, radio_template: RadioConfig,
                       env: EnvironmentParams, altitude_m: float,
                       interferer: Optional[InterfererSpec] = None, *,
                       p_lo: float = POWER_BRACKET_DBM[0], p_hi: float = POWER_BRACKET_DBM[1],
                       tol_db: float = POWER_TOL_DB) -> float:
    """Smallest transmit power (dBm) meeting epsilon at ``required_radius_m``.

    Interference from ``interferer`` scales with the trial power, as both UAVs
    share one power setting.
    """
    limit = radio_template.footprint_radius(altitude_m)
    if required_radius_m > limit * (1 + 1e-12):
        raise BeamFootprintViolation(
            f"required radius {required_radius_m:.6g} m exceeds footprint {limit:.6g} m")
    eps = radio_template.coverage_eps

    def pcov(p):
        radio = dataclasses.replace(radio_template, tx_power_dbm=p)
        return _pcov(required_radius_m, altitude_m, radio, env, interferer)

    probe = [pcov(p) for p in np.linspace(p_lo, p_hi, 8)]
    if any(b < a - 1e-12 for a, b in zip(probe, probe[1:])):
        raise NonMonotone("coverage decreases with transmit power inside the bracket")
    if probe[0] >= eps:
        return p_lo
    if probe[-1] < eps:
        raise Unreachable(f"coverage {eps} not reached at {p_hi} dBm for radius "
                          f"{required_radius_m:.6g} m (best {probe[-1]:.4g})")
    lo, hi = p_lo, p_hi
    while hi - lo > tol_db:
        mid = 0.5 * (lo + hi)
        if pcov(mid) >= eps:
            hi = mid
        else:
            lo = mid
    return hi


def lifetime_metric(tx_power_dbm: float, reference_power_dbm: float) -> float:
    """Coverage lifetime relative to the reference, inversely proportional to power."""
    return 10.0 ** ((reference_power_dbm - tx_power_dbm) / 10.0)
