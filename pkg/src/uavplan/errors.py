"""Exception types raised by the planning engine."""


class PlanningError(Exception):
    """Base class for every error raised by uavplan."""


class DomainError(PlanningError, ValueError):
    """An argument lies outside the domain of a model formula."""


class BeamFootprintViolation(PlanningError):
    """The user lies outside the main-lobe footprint, r > h*tan(beamwidth/2)."""


class NoCoverage(PlanningError):
    """The coverage target is not met at any range under the beam."""


class Unreachable(PlanningError):
    """The coverage target is not met even at the top of the power bracket."""


class NonMonotone(PlanningError):
    """Coverage was found to decrease with transmit power inside the bracket."""


class Unsupported(PlanningError):
    """The requested UAV count has no stored layout or bound."""


class Infeasible(PlanningError):
    """No deployment satisfies the constraints."""


class ScenarioError(PlanningError):
    """A scenario or preset file failed to parse or validate."""
