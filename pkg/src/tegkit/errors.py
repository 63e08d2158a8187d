"""Exception classes shared across the package."""


class TegkitError(Exception):
    """Base class for all tegkit errors."""


class MaterialDataError(TegkitError, LookupError):
    """A material property is missing for the requested annealing state."""


class ScheduleError(TegkitError, ValueError):
    """An annealing schedule violates a material temperature limit."""


class GeometryError(TegkitError, ValueError):
    """A device geometry is invalid or too coarse to hold a junction pair."""


class DomainError(TegkitError, ValueError):
    """A numeric argument is outside the physical domain of an operation."""


class NoFeasibleDesignError(TegkitError, ValueError):
    """A design search produced no feasible candidate."""


class ConfigError(TegkitError, ValueError):
    """A study configuration file is malformed or inconsistent."""
