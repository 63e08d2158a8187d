"""Chip geometry to junction-layout conversion.

A planar generator chip holds alternating bismuth and antimony lines of equal
width, separated by a fixed gap. One junction pair is one Bi line plus one Sb
line, so the pair pitch across the chip is 2 * (line_width + spacing). All
lengths are centimeters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import GeometryError

# centimeters per micrometre, for callers working in lithography units
MICRON = 1e-4

# Relative slack when comparing lengths assembled from converted units; an
# exact quotient such as 1 cm / 80 um must not lose a pair to one ulp.
_REL_TOL = 1e-9


def _snap_floor(quotient: float) -> int:
    n = math.floor(quotient)
    if quotient - n > 1 - _REL_TOL * max(1.0, quotient):
        n += 1
    return n


@dataclass(frozen=True)
class DeviceGeometry:
    """Planar chip and line dimensions, all in centimeters.

    ``chip_width`` runs across the lines (the pitch direction) and
    ``chip_height`` along them. ``line_length`` is the active line length L
    and ``film_thickness`` the deposited thickness t, so one line's
    cross-section is line_width * film_thickness.
    """

    chip_width: float
    chip_height: float
    line_width: float
    spacing: float
    line_length: float
    film_thickness: float

    def __post_init__(self) -> None:
        for field in (
            "chip_width",
            "chip_height",
            "line_width",
            "spacing",
            "line_length",
            "film_thickness",
        ):
            if getattr(self, field) <= 0:
                raise GeometryError(f"{field} must be positive")
        if self.line_length > self.chip_height * (1 + _REL_TOL):
            raise GeometryError("line_length exceeds chip_height")
        if 2 * (self.line_width + self.spacing) > self.chip_width * (1 + _REL_TOL):
            raise GeometryError(
                "chip_width cannot hold a single junction pair at this pitch"
            )

    @property
    def pair_pitch(self) -> float:
        """Width consumed by one Bi+Sb pair including both gaps, in cm."""
        return 2 * (self.line_width + self.spacing)


@dataclass(frozen=True)
class LayoutCounts:
    """Line and junction-pair counts for one chip."""

    total_lines: int
    junction_pairs: int

    def __post_init__(self) -> None:
        if self.junction_pairs < 1:
            raise GeometryError("junction_pairs must be >= 1")
        if self.total_lines != 2 * self.junction_pairs:
            raise GeometryError("total_lines must equal 2 * junction_pairs")


def compute_layout(geom: DeviceGeometry) -> LayoutCounts:
    """Count the complete junction pairs that fit across the chip.

    junction_pairs = floor(chip_width / pair_pitch); trailing partial pairs
    are discarded and no edge margin is reserved.
    """
    pairs = _snap_floor(geom.chip_width / geom.pair_pitch)
    if pairs < 1:
        raise GeometryError(
            f"geometry too coarse: pair pitch {geom.pair_pitch:g} cm does not"
            f" fit in chip width {geom.chip_width:g} cm"
        )
    return LayoutCounts(total_lines=2 * pairs, junction_pairs=pairs)


def line_cross_section(geom: DeviceGeometry) -> float:
    """Cross-section area of a single line, line_width * film_thickness (cm^2)."""
    return geom.line_width * geom.film_thickness
