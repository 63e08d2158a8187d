"""Lumped electrical model of a planar thermoelectric generator.

For N junction pairs in series the model is

    V_s  = N * dS * dT
    R_g  = N * (rho_bi * L / A + rho_sb * L / A + 2 * rho_m * L_m / A_m)
    P_cc = V_s**2 / R_g          (short-circuit power)
    P_u  = P_cc / 4              (power into a matched load)

with dS the per-pair Seebeck difference, L the line length and A the line
cross-section. The metal interconnect term defaults to absent since the
interconnect resistivity is negligible against the leg resistivities;
metal-to-leg contact resistance is neglected throughout.

Also provides the inverse operations: fitting the film thickness from a
measured global resistance and fitting the effective Seebeck difference from
a measured open-circuit voltage.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError
from .layout import DeviceGeometry, LayoutCounts, line_cross_section


@dataclass(frozen=True)
class MetalTerm:
    """Optional interconnect contribution: resistivity (ohm*cm), length (cm),
    cross-section (cm^2) of one metal bridge."""

    resistivity: float
    length: float
    area: float

    def __post_init__(self) -> None:
        if min(self.resistivity, self.length, self.area) <= 0:
            raise DomainError("metal term fields must be positive")


@dataclass(frozen=True)
class DeviceModel:
    """Electrical model of one chip: geometry, counts, leg resistivities
    (ohm*cm) and the per-pair Seebeck difference (V/K)."""

    geometry: DeviceGeometry
    layout: LayoutCounts
    rho_bi: float
    rho_sb: float
    delta_seebeck: float
    metal: MetalTerm | None = None

    def __post_init__(self) -> None:
        if self.rho_bi <= 0 or self.rho_sb <= 0:
            raise DomainError("leg resistivities must be positive")
        if self.delta_seebeck <= 0:
            raise DomainError("delta_seebeck must be positive for a working pair")


@dataclass(frozen=True)
class OperatingPoint:
    """One evaluated condition: temperature gradient (K), global resistance
    (ohm), open-circuit voltage (V), short-circuit and matched-load power (W).

    The power identities hold exactly: p_cc == v_s**2 / r_g and
    p_u == p_cc / 4.
    """

    delta_t: float
    r_g: float
    v_s: float
    p_cc: float
    p_u: float

    def __post_init__(self) -> None:
        if self.r_g <= 0:
            raise DomainError("r_g must be positive")
        if self.p_cc != self.v_s**2 / self.r_g:
            raise DomainError("p_cc must equal v_s**2 / r_g exactly")
        if self.p_u != self.p_cc / 4:
            raise DomainError("p_u must equal p_cc / 4 exactly")


@dataclass(frozen=True)
class CalibrationResidual:
    """Forward-model check of one device row at the fitted parameter."""

    device: str
    measured: float
    modeled: float
    relative_error: float


@dataclass(frozen=True)
class CalibrationResult:
    """A fitted parameter plus per-device residuals."""

    parameter_name: str
    value: float
    unit: str
    residuals: tuple[CalibrationResidual, ...]

    def __post_init__(self) -> None:
        if not self.residuals:
            raise DomainError("calibration residuals must be non-empty")


def _relative_error(modeled: float, measured: float) -> float:
    if measured == 0:
        return 0.0 if modeled == measured else float("inf")
    return abs(modeled - measured) / abs(measured)


def global_resistance(model: DeviceModel) -> float:
    """Series resistance of all legs (plus optional interconnects), in ohms."""
    area = line_cross_section(model.geometry)
    length = model.geometry.line_length
    per_pair = model.rho_bi * length / area + model.rho_sb * length / area
    if model.metal is not None:
        per_pair += 2 * model.metal.resistivity * model.metal.length / model.metal.area
    return model.layout.junction_pairs * per_pair


def seebeck_voltage(n: int, delta_s: float, delta_t: float) -> float:
    """Open-circuit voltage of n pairs: n * delta_s * delta_t (volts)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if delta_t < 0:
        raise DomainError("delta_t must be >= 0")
    return n * delta_s * delta_t


def short_circuit_power(v_s: float, r_g: float) -> float:
    """P_cc = v_s**2 / r_g, in watts."""
    if r_g <= 0:
        raise DomainError("r_g must be positive")
    return v_s**2 / r_g


def useful_power(p_cc: float) -> float:
    """Power delivered to a matched load, p_cc / 4."""
    return p_cc / 4


def operating_point(
    model: DeviceModel, delta_t: float, r_g: float | None = None
) -> OperatingPoint:
    """Evaluate the full model at one temperature gradient.

    ``r_g`` substitutes a measured resistance for the modeled one, e.g. the
    effective device resistance after the final anneal.
    """
    resistance = global_resistance(model) if r_g is None else r_g
    v_s = seebeck_voltage(model.layout.junction_pairs, model.delta_seebeck, delta_t)
    p_cc = short_circuit_power(v_s, resistance)
    return OperatingPoint(
        delta_t=delta_t, r_g=resistance, v_s=v_s, p_cc=p_cc, p_u=useful_power(p_cc)
    )


def power_curve(
    model: DeviceModel,
    delta_t_range: tuple[float, float],
    steps: int,
    r_g: float | None = None,
) -> list[OperatingPoint]:
    """Operating points over evenly spaced gradients in ``delta_t_range``.

    V_s is exactly linear and P_u exactly quadratic across the samples.
    """
    lo, hi = delta_t_range
    if steps < 2:
        raise DomainError("steps must be >= 2")
    if not hi > lo:
        raise DomainError("delta_t_range must be non-degenerate (hi > lo)")
    if lo < 0:
        raise DomainError("delta_t must be >= 0")
    return [
        operating_point(model, float(dt), r_g)
        for dt in np.linspace(lo, hi, steps)
    ]


def calibrate_thickness(
    measured_r_g: float,
    layout: LayoutCounts,
    line_width: float,
    line_length: float,
    rho_bi: float,
    rho_sb: float,
    checks: Sequence[tuple[str, LayoutCounts, float, float]] = (),
) -> CalibrationResult:
    """Invert the resistance model for the film thickness.

    With the metal term neglected, R_g = N * (rho_bi + rho_sb) * L / (w * t),
    so t = N * (rho_bi + rho_sb) * L / (w * R_g). The result's residuals
    start with the fitted row itself followed by one row per ``checks`` entry
    ``(device, layout, line_width, measured_r_g)``, each forward-evaluated at
    the single fitted thickness.

    Args:
        measured_r_g: measured global resistance (ohm).
        layout: junction counts of the measured device.
        line_width: line width w (cm).
        line_length: line length L (cm), shared by all check rows.
        rho_bi, rho_sb: leg resistivities (ohm*cm) matching the measurement.
        checks: additional device rows to evaluate at the fitted thickness.
    """
    if measured_r_g <= 0:
        raise DomainError("measured_r_g must be positive")
    if min(line_width, line_length, rho_bi, rho_sb) <= 0:
        raise DomainError("geometry and resistivities must be positive")
    thickness = (
        layout.junction_pairs
        * (rho_bi + rho_sb)
        * line_length
        / (line_width * measured_r_g)
    )
    residuals = []
    for device, row_layout, row_width, row_measured in (
        ("fit", layout, line_width, measured_r_g),
        *checks,
    ):
        modeled = (
            row_layout.junction_pairs
            * (rho_bi + rho_sb)
            * line_length
            / (row_width * thickness)
        )
        residuals.append(
            CalibrationResidual(
                device=device,
                measured=row_measured,
                modeled=modeled,
                relative_error=_relative_error(modeled, row_measured),
            )
        )
    return CalibrationResult(
        parameter_name="film_thickness",
        value=thickness,
        unit="cm",
        residuals=tuple(residuals),
    )


def calibrate_delta_seebeck(
    v_measured: float,
    n: int,
    delta_t: float,
    checks: Sequence[tuple[str, int, float, float]] = (),
) -> CalibrationResult:
    """Effective per-pair Seebeck difference from a measured voltage.

    dS_eff = V / (N * dT). Check rows are ``(device, n, delta_t,
    v_measured)`` tuples forward-evaluated at the fitted coefficient.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    if delta_t <= 0:
        raise DomainError("delta_t must be positive")
    delta_s = v_measured / (n * delta_t)
    residuals = []
    for device, row_n, row_dt, row_v in (("fit", n, delta_t, v_measured), *checks):
        modeled = row_n * delta_s * row_dt
        residuals.append(
            CalibrationResidual(
                device=device,
                measured=row_v,
                modeled=modeled,
                relative_error=_relative_error(modeled, row_v),
            )
        )
    return CalibrationResult(
        parameter_name="delta_seebeck",
        value=delta_s,
        unit="V/K",
        residuals=tuple(residuals),
    )


def anneal_resistance_drop(r_before: float, r_after: float) -> float:
    """Fractional resistance decrease 1 - r_after/r_before."""
    if r_before <= 0 or r_after <= 0:
        raise DomainError("resistances must be positive")
    return 1 - r_after / r_before
