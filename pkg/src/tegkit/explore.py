"""Design-space exploration over line geometry.

Sweeps evaluate a rectangular width x spacing grid through the layout and
electrical models at a fixed temperature gradient. Optimization is an
exhaustive argmax over the grid (the feasible spaces here are tiny, so
exactness beats cleverness), and the voltage/power trade-off is exposed as a
Pareto front in the (V_s, P_u) plane.

Grid evaluation is embarrassingly parallel; results are always merged in
grid order, so output is identical for any worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence, Union

from . import electro, reference
from .errors import DomainError, GeometryError, NoFeasibleDesignError
from .layout import DeviceGeometry, LayoutCounts, compute_layout
from .materials import ANTIMONY, BISMUTH, AnnealState, Material, resistivity

Objective = Literal["max_p_u", "max_v_s"]

_REL_TOL = 1e-9


@dataclass(frozen=True)
class StepRange:
    """Inclusive numeric range with a fixed step, e.g. 20 um to 60 um by 10."""

    start: float
    stop: float
    step: float

    def __post_init__(self) -> None:
        if self.step <= 0:
            raise DomainError("step must be positive")
        if self.stop < self.start:
            raise DomainError("stop must be >= start")

    def values(self) -> tuple[float, ...]:
        span = (self.stop - self.start) / self.step
        count = math.floor(span + _REL_TOL * max(1.0, span)) + 1
        return tuple(self.start + i * self.step for i in range(count))


@dataclass(frozen=True)
class SweepConstraints:
    """Optional feasibility bounds; violating points are flagged, not dropped."""

    min_junctions: int | None = None
    max_r_g: float | None = None


@dataclass(frozen=True)
class SweepSpec:
    """A width x spacing grid to evaluate at one temperature gradient.

    Chip dimensions default to the 1 x 1 cm reference footprint;
    ``film_thickness`` (cm) must be supplied, typically the calibrated
    nominal. ``delta_s_source`` is "bulk" or "calibrated" and is carried
    through to the outputs.
    """

    width_range: StepRange
    spacing_range: StepRange
    delta_t: float
    film_thickness: float
    material_state: AnnealState = AnnealState.LASER_ANNEALED
    delta_s_source: str = "calibrated"
    chip_width: float = 1.0
    chip_height: float = 1.0
    line_length: float = 1.0
    bismuth: Material = BISMUTH
    antimony: Material = ANTIMONY
    constraints: SweepConstraints | None = None

    def __post_init__(self) -> None:
        if self.delta_t < 0:
            raise DomainError("delta_t must be >= 0")
        if min(self.film_thickness, self.chip_width, self.chip_height,
               self.line_length) <= 0:
            raise DomainError("dimensions must be positive")
        # resolve eagerly so an unknown source fails at construction
        reference.delta_seebeck_for(self.delta_s_source, self.bismuth, self.antimony)

    @property
    def delta_seebeck(self) -> float:
        return reference.delta_seebeck_for(
            self.delta_s_source, self.bismuth, self.antimony
        )


@dataclass(frozen=True)
class DesignPoint:
    """One evaluated geometry; ``violations`` lists failed constraints."""

    geometry: DeviceGeometry
    layout: LayoutCounts
    point: electro.OperatingPoint
    violations: tuple[str, ...] = ()


@dataclass(frozen=True)
class SweepSkip:
    """A grid cell that could not be evaluated."""

    line_width: float
    spacing: float
    reason: str


@dataclass(frozen=True)
class SweepResult:
    """Evaluated points plus skipped cells, both in grid order."""

    points: tuple[DesignPoint, ...]
    skipped: tuple[SweepSkip, ...]

    @property
    def feasible(self) -> tuple[DesignPoint, ...]:
        return tuple(p for p in self.points if not p.violations)


def _evaluate_cell(
    spec: SweepSpec, width: float, spacing: float
) -> DesignPoint | SweepSkip:
    try:
        geom = DeviceGeometry(
            chip_width=spec.chip_width,
            chip_height=spec.chip_height,
            line_width=width,
            spacing=spacing,
            line_length=spec.line_length,
            film_thickness=spec.film_thickness,
        )
        layout = compute_layout(geom)
    except GeometryError as exc:
        return SweepSkip(line_width=width, spacing=spacing, reason=str(exc))
    model = electro.DeviceModel(
        geometry=geom,
        layout=layout,
        rho_bi=resistivity(spec.bismuth, spec.material_state),
        rho_sb=resistivity(spec.antimony, spec.material_state),
        delta_seebeck=spec.delta_seebeck,
    )
    point = electro.operating_point(model, spec.delta_t)
    violations = []
    if spec.constraints is not None:
        c = spec.constraints
        if c.min_junctions is not None and layout.junction_pairs < c.min_junctions:
            violations.append(
                f"junction_pairs {layout.junction_pairs} < min {c.min_junctions}"
            )
        if c.max_r_g is not None and point.r_g > c.max_r_g:
            violations.append(f"r_g {point.r_g!r} > max {c.max_r_g!r}")
    return DesignPoint(
        geometry=geom, layout=layout, point=point, violations=tuple(violations)
    )


def sweep(spec: SweepSpec, workers: int = 1) -> SweepResult:
    """Evaluate the full width x spacing grid.

    Infeasible cells (no complete junction pair) are skipped with a recorded
    reason; constraint violations are flagged on the point. Results are in
    grid order (width-major, spacing-minor) for any ``workers`` count.
    """
    cells = [
        (w, s) for w in spec.width_range.values() for s in spec.spacing_range.values()
    ]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda c: _evaluate_cell(spec, *c), cells))
    else:
        outcomes = [_evaluate_cell(spec, w, s) for w, s in cells]
    points = tuple(o for o in outcomes if isinstance(o, DesignPoint))
    skipped = tuple(o for o in outcomes if isinstance(o, SweepSkip))
    return SweepResult(points=points, skipped=skipped)


def _objective_value(point: DesignPoint, objective: Objective) -> float:
    if objective == "max_p_u":
        return point.point.p_u
    if objective == "max_v_s":
        return point.point.v_s
    raise DomainError(f"unknown objective {objective!r}")


def optimize(
    spec_or_points: Union[SweepSpec, Sequence[DesignPoint]],
    objective: Objective,
    workers: int = 1,
) -> DesignPoint:
    """Best feasible design under one objective.

    Accepts either a SweepSpec (the grid is swept first) or pre-evaluated
    design points, e.g. reference devices at measured resistance. Ties break
    deterministically: smaller R_g, then smaller width, then smaller spacing.
    """
    if isinstance(spec_or_points, SweepSpec):
        points: Iterable[DesignPoint] = sweep(spec_or_points, workers=workers).points
    else:
        points = spec_or_points
    candidates = [p for p in points if not p.violations]
    if not candidates:
        raise NoFeasibleDesignError(
            f"no feasible design point for objective {objective}"
        )
    return max(
        candidates,
        key=lambda p: (
            _objective_value(p, objective),
            -p.point.r_g,
            -p.geometry.line_width,
            -p.geometry.spacing,
        ),
    )


def pareto_front(points: Sequence[DesignPoint]) -> list[DesignPoint]:
    """Non-dominated designs in the (V_s, P_u) plane, maximizing both.

    Duplicate objective pairs collapse to their first occurrence. The front
    is returned sorted by ascending V_s.
    """
    first_of_pair: dict[tuple[float, float], DesignPoint] = {}
    for p in points:
        key = (p.point.v_s, p.point.p_u)
        first_of_pair.setdefault(key, p)
    # walk pairs by descending V_s; a pair is dominated iff a pair with
    # higher-or-equal V_s has strictly more P_u (equal pairs were collapsed)
    front: list[DesignPoint] = []
    best_p_u = -math.inf
    for key in sorted(first_of_pair, key=lambda k: (-k[0], -k[1])):
        if key[1] > best_p_u:
            front.append(first_of_pair[key])
            best_p_u = key[1]
    front.reverse()
    return front
