"""Coverage-driven 3D deployment planning for multiple UAV base stations."""

__version__ = "0.1.0"

from .channel import URBAN, EnvironmentParams, LinkGeometry, RadioConfig
from .coverage import CoverageQuery, InterfererSpec, coverage_probability
from .montecarlo import SimResult, simulate_coverage
from .packing import PackingLayout, layout, verify_layout
from .planner import DeploymentPlan, PlanConstraints, min_uav_count, plan, sweep_vs_m, sweep_vs_rc
from .solver import RadiusSolution, coverage_radius, min_transmit_power

__all__ = [
    "URBAN", "EnvironmentParams", "LinkGeometry", "RadioConfig", "CoverageQuery", "InterfererSpec",
    "coverage_probability", "SimResult", "simulate_coverage", "PackingLayout", "layout",
    "verify_layout", "DeploymentPlan", "PlanConstraints", "min_uav_count", "plan", "sweep_vs_m",
    "sweep_vs_rc", "RadiusSolution", "coverage_radius", "min_transmit_power",
]
