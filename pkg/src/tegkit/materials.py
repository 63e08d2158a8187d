"""Thermoelectric material properties and the annealing state machine.

Bismuth and antimony thin films change electrical resistivity with
post-deposition annealing. Each material carries one resistivity value per
annealing state plus the literature bulk value, a room-temperature Seebeck
coefficient, and the melting temperature of the relevant binary system that
bounds furnace annealing.

Internal units: resistivity in ohm*cm, Seebeck coefficient in V/K,
temperatures in degrees Celsius.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .errors import ConfigError, MaterialDataError, ScheduleError


class AnnealState(enum.Enum):
    """Discrete film condition determining resistivity.

    ``BULK_REFERENCE`` carries the literature bulk resistivity rather than a
    process outcome.
    """

    AS_DEPOSITED = "as_deposited"
    FURNACE_ANNEALED = "furnace_annealed"
    LASER_ANNEALED = "laser_annealed"
    BULK_REFERENCE = "bulk_reference"


class AnnealMethod(enum.Enum):
    FURNACE = "furnace"
    LASER = "laser"


@dataclass(frozen=True)
class Material:
    """One thermoelectric leg material with per-state resistivity.

    Attributes:
        name: material identifier, e.g. "bismuth".
        seebeck_bulk: room-temperature Seebeck coefficient (V/K, signed).
        melt_limit_celsius: melting temperature of the binary system formed
            with the adhesion layer; furnace anneals must stay strictly below.
        resistivity_by_state: AnnealState -> resistivity in ohm*cm.
    """

    name: str
    seebeck_bulk: float
    melt_limit_celsius: float
    resistivity_by_state: Mapping[AnnealState, float]

    def __post_init__(self) -> None:
        if self.melt_limit_celsius <= 0:
            raise ValueError(f"{self.name}: melt limit must be positive")
        table = dict(self.resistivity_by_state)
        for state, rho in table.items():
            if rho <= 0:
                raise ValueError(
                    f"{self.name}: resistivity for {state.value} must be positive"
                )
        deposited = table.get(AnnealState.AS_DEPOSITED)
        for state in (AnnealState.FURNACE_ANNEALED, AnnealState.LASER_ANNEALED):
            annealed = table.get(state)
            if deposited is not None and annealed is not None and annealed > deposited:
                raise ValueError(
                    f"{self.name}: {state.value} resistivity exceeds the"
                    " as-deposited value; annealing never worsens resistivity"
                )
        object.__setattr__(self, "resistivity_by_state", MappingProxyType(table))


@dataclass(frozen=True)
class AnnealSchedule:
    """One annealing step. Laser schedules carry no temperature."""

    method: AnnealMethod
    temperature_celsius: float | None = None
    duration_hours: float = 0.0
    atmosphere: str = "Ar"

    def __post_init__(self) -> None:
        if self.duration_hours < 0:
            raise ValueError("duration_hours must be >= 0")
        if self.method is AnnealMethod.FURNACE:
            if self.temperature_celsius is None or self.temperature_celsius <= 0:
                raise ValueError("furnace schedules require temperature_celsius > 0")
        elif self.temperature_celsius is not None:
            raise ValueError("laser schedules carry no temperature")


@dataclass(frozen=True)
class ScheduleViolation:
    """Why a schedule fails validation against a material."""

    material: str
    limit_celsius: float
    requested_celsius: float

    def __str__(self) -> str:
        return (
            f"furnace anneal at {self.requested_celsius:g} C reaches the"
            f" {self.material} system melt limit of {self.limit_celsius:g} C"
        )


def resistivity(material: Material, state: AnnealState) -> float:
    """Resistivity of ``material`` in ``state``, in ohm*cm."""
    try:
        return material.resistivity_by_state[state]
    except KeyError:
        raise MaterialDataError(
            f"no resistivity stored for {material.name} in state {state.value}"
        ) from None


def validate_schedule(
    material: Material, schedule: AnnealSchedule
) -> ScheduleViolation | None:
    """Check a schedule against the material's melt limit.

    Furnace schedules pass iff the temperature is strictly below the limit.
    Laser schedules always pass (no bulk-melt constraint is modeled for the
    nanosecond pulses). Returns a violation record rather than raising.
    """
    if schedule.method is AnnealMethod.LASER:
        return None
    assert schedule.temperature_celsius is not None
    if schedule.temperature_celsius < material.melt_limit_celsius:
        return None
    return ScheduleViolation(
        material=material.name,
        limit_celsius=material.melt_limit_celsius,
        requested_celsius=schedule.temperature_celsius,
    )


def apply_anneal(
    material: Material, current: AnnealState, schedule: AnnealSchedule
) -> AnnealState:
    """Resulting state after running ``schedule`` on a film in ``current``.

    The outcome depends only on the method (furnace -> FURNACE_ANNEALED,
    laser -> LASER_ANNEALED), so re-annealing is idempotent. The current
    state does not gate the transition; each step is validated on its own.
    """
    violation = validate_schedule(material, schedule)
    if violation is not None:
        raise ScheduleError(str(violation))
    if schedule.method is AnnealMethod.FURNACE:
        return AnnealState.FURNACE_ANNEALED
    return AnnealState.LASER_ANNEALED


def delta_seebeck(negative_leg: Material, positive_leg: Material) -> float:
    """Per-junction-pair Seebeck difference S_pos - S_neg, in V/K."""
    return positive_leg.seebeck_bulk - negative_leg.seebeck_bulk


# Built-in legs. Resistivities in ohm*cm per annealing state; the bulk rows
# are 300 K literature values. Adhesion flash layers (Ti, Ti+Au) are not
# modeled; they have no measurable effect on the thermoelectric response.
BISMUTH = Material(
    name="bismuth",
    seebeck_bulk=-70e-6,
    melt_limit_celsius=271.0,
    resistivity_by_state={
        AnnealState.AS_DEPOSITED: 1600e-6,
        AnnealState.FURNACE_ANNEALED: 900e-6,
        AnnealState.LASER_ANNEALED: 800e-6,
        AnnealState.BULK_REFERENCE: 117e-6,
    },
)

ANTIMONY = Material(
    name="antimony",
    seebeck_bulk=40e-6,
    melt_limit_celsius=360.0,
    resistivity_by_state={
        AnnealState.AS_DEPOSITED: 1100e-6,
        AnnealState.FURNACE_ANNEALED: 825e-6,
        # laser annealing brings no further improvement over the furnace
        AnnealState.LASER_ANNEALED: 825e-6,
        AnnealState.BULK_REFERENCE: 40.1e-6,
    },
)

BUILTIN_MATERIALS: Mapping[str, Material] = MappingProxyType(
    {"bismuth": BISMUTH, "antimony": ANTIMONY}
)

_RESISTIVITY_KEYS = tuple(state.value for state in AnnealState)
_REQUIRED_KEYS = {"seebeck_uv_per_k", "melt_limit_c", "resistivity_uohm_cm"}
# base names a user might write without the mandatory unit suffix
_SUFFIX_HINTS = {
    "seebeck": "seebeck_uv_per_k",
    "seebeck_uv": "seebeck_uv_per_k",
    "melt_limit": "melt_limit_c",
    "resistivity": "resistivity_uohm_cm",
}


def _material_from_table(name: str, table: dict) -> Material:
    for key in table:
        if key in _REQUIRED_KEYS:
            continue
        hint = _SUFFIX_HINTS.get(key)
        if hint is not None:
            raise ConfigError(
                f"material {name}: key '{key}' is missing its unit suffix,"
                f" use '{hint}'"
            )
        raise ConfigError(f"material {name}: unknown key '{key}'")
    missing = _REQUIRED_KEYS - table.keys()
    if missing:
        raise ConfigError(
            f"material {name}: missing required keys {sorted(missing)}"
        )
    rho_table = table["resistivity_uohm_cm"]
    if not isinstance(rho_table, dict):
        raise ConfigError(
            f"material {name}: resistivity_uohm_cm must map annealing states"
            " to values"
        )
    unknown = set(rho_table) - set(_RESISTIVITY_KEYS)
    if unknown:
        raise ConfigError(
            f"material {name}: unknown annealing states {sorted(unknown)}"
        )
    missing_states = set(_RESISTIVITY_KEYS) - set(rho_table)
    if missing_states:
        raise ConfigError(
            f"material {name}: missing resistivity for states"
            f" {sorted(missing_states)}"
        )
    try:
        return Material(
            name=name,
            seebeck_bulk=float(table["seebeck_uv_per_k"]) * 1e-6,
            melt_limit_celsius=float(table["melt_limit_c"]),
            resistivity_by_state={
                AnnealState(key): float(value) * 1e-6
                for key, value in rho_table.items()
            },
        )
    except ValueError as exc:
        raise ConfigError(f"material {name}: {exc}") from exc


def load_materials_file(path) -> dict[str, Material]:
    """Parse a materials override file (TOML, ``[material.<name>]`` sections).

    Each section must define ``seebeck_uv_per_k``, ``melt_limit_c`` and a
    complete ``resistivity_uohm_cm`` table; unit suffixes are mandatory.
    Returns the built-in table with overridden or added entries.
    """
    with open(path, "rb") as handle:
        try:
            data = tomllib.load(handle)
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from exc
    unknown = set(data) - {"material"}
    if unknown:
        raise ConfigError(f"{path}: unknown top-level keys {sorted(unknown)}")
    sections = data.get("material", {})
    if not isinstance(sections, dict) or not sections:
        raise ConfigError(f"{path}: no [material.<name>] sections")
    merged = dict(BUILTIN_MATERIALS)
    for name, table in sections.items():
        if not isinstance(table, dict):
            raise ConfigError(f"{path}: [material.{name}] must be a section")
        merged[name] = _material_from_table(name, table)
    return merged
