"""End-to-end deployment planning over a circular area and the parameter sweeps."""
from __future__ import annotations

import dataclasses
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .channel import EnvironmentParams, LinkGeometry, RadioConfig
from .coverage import InterfererSpec
from .errors import DomainError, Infeasible, PlanningError, Unreachable
from .packing import MAX_STORED, altitude_for_radius, layout
from .solver import lifetime_metric, min_transmit_power


@dataclass(frozen=True)
class PlanConstraints:
    coverage_eps: Optional[float] = None
    max_altitude_m: Optional[float] = None
    max_tx_power_dbm: Optional[float] = None

    def __post_init__(self):
        if self.max_altitude_m is not None and not self.max_altitude_m > 0:
            raise DomainError("max_altitude_m must be positive")
        if self.coverage_eps is not None and not 0 < self.coverage_eps < 1:
            raise DomainError("coverage_eps must be in (0, 1)")


@dataclass(frozen=True)
class DeploymentPlan:
    uav_count: int
    area_radius_m: float
    positions: tuple[tuple[float, float, float], ...]
    per_uav_radius_m: float
    altitude_m: float
    tx_power_dbm: float
    total_coverage: float
    lifetime: float
    altitude_capped: bool = False

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["positions"] = [list(p) for p in self.positions]
        return d


@dataclass(frozen=True)
class SweepRow:
    key: float
    uav_count: Optional[int] = None
    total_coverage: Optional[float] = None
    lifetime: Optional[float] = None
    altitude_m: Optional[float] = None
    tx_power_dbm: Optional[float] = None
    error: str = ""


def _radio_for(radio: RadioConfig, constraints: PlanConstraints) -> RadioConfig:
    if constraints.coverage_eps is None:
        return radio
    return dataclasses.replace(radio, coverage_eps=constraints.coverage_eps)


def edge_interferer(spacing_m: float, radius_m: float, altitude_m: float) -> InterfererSpec:
    """Nearest UAV as seen by a user on the serving cell edge facing it."""
    horiz = spacing_m - radius_m
    return InterfererSpec(LinkGeometry(horiz, altitude_m), math.atan2(horiz, altitude_m))


def _solve_power(area_radius_m, m, env, radio, constraints):
    lay = layout(m)
    r_u = lay.radius_norm * area_radius_m
    capped = False
    h = altitude_for_radius(r_u, radio.beamwidth_deg)
    if constraints.max_altitude_m is not None and h > constraints.max_altitude_m:
        h = constraints.max_altitude_m
        r_u = radio.footprint_radius(h)
        capped = True
    interferer = None
    if m > 1:
        interferer = edge_interferer(lay.min_spacing() * area_radius_m, r_u, h)
    p_hi = constraints.max_tx_power_dbm
    kwargs = {} if p_hi is None else {"p_hi": p_hi}
    try:
        power = min_transmit_power(r_u, radio, env, h, interferer, **kwargs)
    except Unreachable as exc:
        raise Infeasible(f"M={m}: {exc}") from exc
    return lay, r_u, h, power, capped


def reference_power(area_radius_m: float, env: EnvironmentParams, radio_template: RadioConfig,
                    constraints: PlanConstraints = PlanConstraints()) -> float:
    """Transmit power of the single-UAV plan, the lifetime normalization point.

    Falls back to the template power when one UAV cannot serve the area.
    """
    radio = _radio_for(radio_template, constraints)
    try:
        return _solve_power(area_radius_m, 1, env, radio, constraints)[3]
    except PlanningError:
        return radio_template.tx_power_dbm


def plan(area_radius_m: float, m: int, env: EnvironmentParams, radio_template: RadioConfig,
         constraints: PlanConstraints = PlanConstraints(),
         reference_power_dbm: Optional[float] = None) -> DeploymentPlan:
    """Place ``m`` UAVs on the optimal packing and find their common power.

    Raises Infeasible when the power cap cannot meet epsilon at the cell edge.
    """
    if not area_radius_m > 0:
        raise DomainError("area_radius_m must be > 0")
    radio = _radio_for(radio_template, constraints)
    lay, r_u, h, power, capped = _solve_power(area_radius_m, m, env, radio, constraints)
    if reference_power_dbm is None:
        reference_power_dbm = power if m == 1 else reference_power(area_radius_m, env, radio_template, constraints)
    positions = tuple((x * area_radius_m, y * area_radius_m, h) for x, y in lay.centers_norm)
    return DeploymentPlan(
        uav_count=m,
        area_radius_m=area_radius_m,
        positions=positions,
        per_uav_radius_m=r_u,
        altitude_m=h,
        tx_power_dbm=power,
        total_coverage=m * (r_u / area_radius_m) ** 2,
        lifetime=lifetime_metric(power, reference_power_dbm),
        altitude_capped=capped,
    )


def min_uav_count(area_radius_m: float, coverage_threshold: float, env: EnvironmentParams,
                  radio: RadioConfig, constraints: PlanConstraints = PlanConstraints(),
                  m_min: int = 1, m_max: int = MAX_STORED) -> Optional[int]:
    """Smallest M in [m_min, m_max] whose plan covers ``coverage_threshold`` of the area.

    Returns None when no stored layout is feasible.
    """
    for m in range(max(1, m_min), min(m_max, MAX_STORED) + 1):
        try:
            p = plan(area_radius_m, m, env, radio, constraints, reference_power_dbm=0.0)
        except PlanningError:
            continue
        if p.total_coverage >= coverage_threshold:
            return m
    return None


def _run(fn, keys, workers):
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, keys))
    return [fn(k) for k in keys]


def sweep_vs_m(area_radius_m: float, m_range: Iterable[int], env: EnvironmentParams,
               radio: RadioConfig, constraints: PlanConstraints = PlanConstraints(),
               workers: int = 1) -> list[SweepRow]:
    """One row per UAV count; failures are recorded in the row's ``error`` field."""
    ref = reference_power(area_radius_m, env, radio, constraints)

    def row(m):
        try:
            p = plan(area_radius_m, m, env, radio, constraints, reference_power_dbm=ref)
        except PlanningError as exc:
            return SweepRow(key=m, error=f"{type(exc).__name__}: {exc}")
        return SweepRow(key=m, uav_count=m, total_coverage=p.total_coverage, lifetime=p.lifetime,
                        altitude_m=p.altitude_m, tx_power_dbm=p.tx_power_dbm)

    return _run(row, sorted(set(m_range)), workers)


def sweep_vs_rc(rc_range: Iterable[float], coverage_threshold: float, env: EnvironmentParams,
                radio: RadioConfig, constraints: PlanConstraints = PlanConstraints(),
                workers: int = 1) -> list[SweepRow]:
    """Minimum UAV count for each area radius."""
    def row(rc):
        m = min_uav_count(rc, coverage_threshold, env, radio, constraints)
        if m is None:
            return SweepRow(key=rc, error="Infeasible: no stored layout meets the threshold")
        return SweepRow(key=rc, uav_count=m)

    return _run(row, sorted(set(rc_range)), workers)
