"""Equal-circle packings in the unit disk and the packing-density altitude bound.

Layouts for M = 1..10 are stored as normalized centers (enclosing radius 1).
Ring-type optima are generated from their closed forms; M = 10 has no closed
form, so its centers are tabulated from a numerical optimum and its radius is
the largest one those centers admit. ``verify_layout`` is the check of record
for all of them.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, Unsupported

MAX_STORED = 10
GEOM_TOL = 1e-9

# reference radii of the tabulated optimum, used only for tests/reporting
TABLE_RADII = {1: 1.0, 2: 0.5, 3: 0.464, 4: 0.413, 5: 0.370,
               6: 0.333, 7: 0.333, 8: 0.302, 9: 0.275, 10: 0.261}
TABLE_COVERAGE = {1: 1.0, 2: 0.5, 3: 0.646, 4: 0.686, 5: 0.685,
                  6: 0.666, 7: 0.778, 8: 0.733, 9: 0.689, 10: 0.687}

_CENTERS_10 = (
    (0.253372163991707, 0.139448317527568),
    (-0.206146998478546, -0.11345702561917),
    (-0.187331267834263, 0.713560712924037),
    (-0.614172028093001, 0.408723151834076),
    (0.50261219517934, -0.540039698720433),
    (0.016702866430067, -0.73755197050111),
    (0.73445605953214, -0.06954273185296),
    (-0.477649595130165, -0.562239058772192),
    (-0.730554938276904, -0.102719896301938),
    (0.334203584638672, 0.65770043253119),
)


@dataclass(frozen=True)
class PackingLayout:
    count: int
    radius_norm: float
    centers_norm: tuple[tuple[float, float], ...]

    @property
    def total_coverage(self) -> float:
        return self.count * self.radius_norm ** 2

    def min_spacing(self) -> float:
        """Smallest center-to-center distance; infinite for a single circle."""
        c = self.centers_norm
        return min((math.dist(c[i], c[j]) for i in range(len(c)) for j in range(i + 1, len(c))),
                   default=math.inf)

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "radius_norm": self.radius_norm,
            "centers_norm": [list(p) for p in self.centers_norm],
            "total_coverage": self.total_coverage,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "PackingLayout":
        centers = tuple((float(x), float(y)) for x, y in data["centers_norm"])
        layout = cls(int(data["count"]), float(data["radius_norm"]), centers)
        if len(centers) != layout.count:
            raise ValueError("centers_norm length does not match count")
        return layout


def _ring(n: int, distance: float, phase: float = math.pi / 2) -> list[tuple[float, float]]:
    return [(distance * math.cos(phase + 2 * math.pi * k / n),
             distance * math.sin(phase + 2 * math.pi * k / n)) for k in range(n)]


def _ring_radius(n: int) -> float:
    # n equal circles around the rim, neighbours tangent
    s = math.sin(math.pi / n)
    return s / (1 + s)


def _closed_form(m: int) -> tuple[float, list[tuple[float, float]]]:
    if m == 1:
        return 1.0, [(0.0, 0.0)]
    if m == 2:
        return 0.5, [(-0.5, 0.0), (0.5, 0.0)]
    if m in (3, 4, 5):
        rho = _ring_radius(m)
        return rho, _ring(m, 1 - rho)
    if m in (6, 7):
        # centre circle plus a ring at distance 2/3
        return 1 / 3, [(0.0, 0.0)] + _ring(m - 1, 2 / 3)
    if m in (8, 9):
        rho = _ring_radius(m - 1)
        return rho, [(0.0, 0.0)] + _ring(m - 1, 1 - rho)
    centers = list(_CENTERS_10)
    return _feasible_radius(centers), centers


def _feasible_radius(centers) -> float:
    contain = min(1.0 - math.hypot(x, y) for x, y in centers)
    spacing = min((math.dist(centers[i], centers[j]) / 2
                   for i in range(len(centers)) for j in range(i + 1, len(centers))),
                  default=math.inf)
    return min(contain, spacing)


@lru_cache(maxsize=None)
def layout(m: int) -> PackingLayout:
    """Best known packing of ``m`` equal circles in the unit disk."""
    if not isinstance(m, int) or m < 1 or m > MAX_STORED:
        raise Unsupported(f"no stored layout for M={m!r}; supported range is 1..{MAX_STORED}")
    rho, centers = _closed_form(m)
    return PackingLayout(m, rho, tuple(centers))


def verify_layout(lay: PackingLayout, tol: float = GEOM_TOL) -> list[str]:
    """List every overlap and containment violation; empty when the layout is valid."""
    problems = []
    c, rho = lay.centers_norm, lay.radius_norm
    for i in range(len(c)):
        reach = math.hypot(*c[i]) + rho
        if reach > 1 + tol:
            problems.append(f"containment: circle {i} reaches {reach:.12g} > 1")
        for j in range(i + 1, len(c)):
            d = math.dist(c[i], c[j])
            if d < 2 * rho - tol:
                problems.append(f"overlap: circles {i},{j} spaced {d:.12g} < {2 * rho:.12g}")
    return problems


def qm_inequality(q: float, m: int) -> float:
    """Left-hand side of the packing-density condition; q_m is its largest root."""
    return (math.pi / math.asin(q / 2)) * ((q * math.sqrt(3) + math.sqrt(4 - q * q)) / q) \
        + math.sqrt(12) * (1 - m)


def qm_solve(m: int, tol: float = 1e-12) -> float:
    """Largest q in (0, 2] with ``qm_inequality(q, m) >= 0``.

    The left-hand side decreases monotonically on (0, 2], so bisection on
    the sign change is sufficient.
    """
    if m < 2:
        raise Unsupported("the packing-density bound is not defined for M < 2")
    # relative slack absorbs rounding at the exact root q = 2 for M = 2
    if qm_inequality(2.0, m) >= -1e-12:
        return 2.0
    lo, hi = 1e-9, 2.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if qm_inequality(mid, m) >= 0:
            lo = mid
        else:
            hi = mid
    return lo


def bound_radius_norm(m: int) -> float:
    """Upper bound q_m/(2+q_m) on the normalized radius of M equal circles."""
    q = qm_solve(m)
    return q / (2 + q)


def altitude_upper_bound(m: int, area_radius_m: float, beamwidth_deg: float) -> float:
    """Highest common altitude at which M beam footprints can avoid overlap."""
    if not area_radius_m > 0:
        raise DomainError("area_radius_m must be > 0")
    if not 0 < beamwidth_deg < 180:
        raise DomainError("beamwidth_deg must be in (0, 180)")
    return bound_radius_norm(m) * area_radius_m / math.tan(math.radians(beamwidth_deg) / 2)


def altitude_for_radius(radius_m: float, beamwidth_deg: float) -> float:
    if not radius_m > 0:
        raise DomainError("radius_m must be > 0")
    if not 0 < beamwidth_deg < 180:
        raise DomainError("beamwidth_deg must be in (0, 180)")
    return radius_m / math.tan(math.radians(beamwidth_deg) / 2)
