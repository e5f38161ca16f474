"""Scenario and environment-preset files.

Scenarios are TOML. Angles are in degrees, distances in meters and powers
in dBm. Example::

    environment = "urban"        # preset name, path to a preset file, or a table
    area_radius_m = 5000

    [radio]
    beamwidth_deg = 80
    tx_power_dbm = 35

    [constraints]
    max_altitude_m = 5000
"""
from __future__ import annotations

import dataclasses
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Optional

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .channel import EnvironmentParams, RadioConfig
from .errors import PlanningError, ScenarioError
from .planner import PlanConstraints

DEFAULT_AREA_RADIUS_M = 5000.0
_TOP_KEYS = {"environment", "area_radius_m", "radio", "constraints"}


@dataclass(frozen=True)
class Scenario:
    env: EnvironmentParams
    radio: RadioConfig = field(default_factory=RadioConfig)
    area_radius_m: float = DEFAULT_AREA_RADIUS_M
    constraints: PlanConstraints = field(default_factory=PlanConstraints)


def preset_names() -> list[str]:
    return sorted(p.name[:-5] for p in resources.files("uavplan.data").iterdir()
                  if p.name.endswith(".toml"))


def _build(cls, table: Any, where: str):
    if not isinstance(table, dict):
        raise ScenarioError(f"{where}: expected a table")
    known = {f.name for f in dataclasses.fields(cls) if f.init}
    for key in table:
        if key not in known:
            raise ScenarioError(f"{where}.{key}: unknown key (expected one of {sorted(known)})")
    for key, value in table.items():
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ScenarioError(f"{where}.{key}: expected a number, got {value!r}")
    try:
        return cls(**{k: float(v) for k, v in table.items()})
    except TypeError as exc:
        raise ScenarioError(f"{where}: {exc}") from exc
    except PlanningError as exc:
        raise ScenarioError(f"{where}: {exc}") from exc


def _read_toml(text: str, source: str) -> dict:
    try:
        return tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ScenarioError(f"{source}: {exc}") from exc


def load_environment(name_or_path: str) -> EnvironmentParams:
    """Load an environment preset by name or from a TOML file path."""
    if name_or_path in preset_names():
        text = resources.files("uavplan.data").joinpath(f"{name_or_path}.toml").read_text()
        source = f"preset {name_or_path!r}"
    else:
        path = Path(name_or_path)
        if not path.is_file():
            raise ScenarioError(f"environment: unknown preset {name_or_path!r} "
                                f"(known: {', '.join(preset_names())})")
        text, source = path.read_text(), str(path)
    return _build(EnvironmentParams, _read_toml(text, source), "environment")


def parse_scenario(text: str, source: str = "<scenario>", base_dir: Optional[Path] = None) -> Scenario:
    data = _read_toml(text, source)
    for key in data:
        if key not in _TOP_KEYS:
            raise ScenarioError(f"{source}: {key}: unknown key (expected one of {sorted(_TOP_KEYS)})")
    env_spec = data.get("environment", "urban")
    if isinstance(env_spec, str):
        if base_dir is not None and env_spec not in preset_names() and not Path(env_spec).is_absolute():
            env_spec = str(base_dir / env_spec)
        env = load_environment(env_spec)
    else:
        env = _build(EnvironmentParams, env_spec, "environment")
    radio = _build(RadioConfig, data.get("radio", {}), "radio")
    constraints = _build(PlanConstraints, data.get("constraints", {}), "constraints")
    area = data.get("area_radius_m", DEFAULT_AREA_RADIUS_M)
    if isinstance(area, bool) or not isinstance(area, (int, float)) or not area > 0:
        raise ScenarioError(f"area_radius_m: expected a positive number, got {area!r}")
    return Scenario(env, radio, float(area), constraints)


def load_scenario(path: Optional[str]) -> Scenario:
    """Read a scenario file; ``None`` gives the default urban 2 GHz setup."""
    if path is None:
        return Scenario(load_environment("urban"))
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ScenarioError(f"{path}: {exc.strerror}") from exc
    return parse_scenario(text, str(p), p.parent)
