# Copyright(C) 2024 Torus Cones Developers
# Licensed under the MIT License

"""Per-cone report records and grid scans written as CSV."""

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

import numpy as np

from torus_cones import parameters as _params
from torus_cones.errors import ConeManifoldError
from torus_cones.geometry.cones import (
    KnotCone,
    LinkCone,
    knot_domain_violation,
    knot_sphericity_interval,
    link_domain_violation,
    structure,
)
from torus_cones.geometry.polyhedron import (
    FAN_CLAIMS,
    ClaimReport,
    build_polyhedron,
    geometric_length,
    schlafli_volume,
    verify_properness,
)
from torus_cones.logging import claim_summary_info, info
from torus_cones.reports.runner import parallel_map

CSV_VERSION_LINE = "# torus-cones scan v1"
CSV_COLUMNS = [
    "kind",
    "n",
    "alpha",
    "beta",
    "in_domain",
    "lambda",
    "theta",
    "length_alpha",
    "length_beta",
    "volume",
    "schlafli_volume",
    "length_gap",
    "volume_gap",
    "max_residual",
    "passed",
    "verified",
    "fan_proper",
]


@dataclass(frozen=True)
class ScanGrid:
    """A rectangular grid of cone angles.

    Without explicit ranges a knot grid spans the sphericity interval shrunk
    by margin, and a link grid covers (0, 2pi)^2 with cell-centred points.
    Points closer than margin to a domain boundary are reported out of
    domain.
    """

    kind: str
    n: int
    alpha_steps: int
    beta_steps: Optional[int] = None
    alpha_range: Optional[tuple[float, float]] = None
    beta_range: Optional[tuple[float, float]] = None
    margin: float = 1e-3

    def __post_init__(self):
        if self.kind not in ("knot", "link"):
            raise ValueError(f"kind must be knot or link, got {self.kind!r}")
        if self.kind == "link" and self.beta_steps is None:
            object.__setattr__(self, "beta_steps", self.alpha_steps)
        steps = [self.alpha_steps] + ([self.beta_steps] if self.kind == "link" else [])
        if any(step < 2 for step in steps):
            raise ValueError(f"step counts must be at least 2, got {steps}")
        if self.margin < 0:
            raise ValueError(f"margin must be non-negative, got {self.margin}")

    def _axis(self, steps, bounds):
        if bounds is not None:
            return np.linspace(bounds[0], bounds[1], steps)
        if self.kind == "knot":
            lo, hi = knot_sphericity_interval(self.n)
            return np.linspace(lo + self.margin, hi - self.margin, steps)
        half_cell = math.pi / steps
        return np.linspace(half_cell, 2.0 * math.pi - half_cell, steps)

    def points(self) -> list[tuple[float, Optional[float]]]:
        alphas = self._axis(self.alpha_steps, self.alpha_range)
        if self.kind == "knot":
            return [(float(a), None) for a in alphas]
        betas = self._axis(self.beta_steps, self.beta_range)
        return [(float(a), float(b)) for a in alphas for b in betas]

    def contains(self, alpha: float, beta: Optional[float]) -> bool:
        """Inside the domain with at least margin to spare. A point exactly
        margin away from a boundary, such as an end of the default knot
        axis, counts as inside."""
        if not 0.0 < alpha < 2.0 * math.pi:
            return False
        if self.kind == "knot":
            lo, hi = knot_sphericity_interval(self.n)
            return knot_domain_violation(self.n, alpha) is None and lo + self.margin <= alpha <= hi - self.margin
        if not 0.0 < beta < 2.0 * math.pi:
            return False
        if link_domain_violation(self.n, alpha, beta) is not None:
            return False
        lower = 2.0 * math.pi * (1.0 - 1.0 / self.n)
        upper = 2.0 * math.pi * (1.0 + 1.0 / self.n)
        total, diff = alpha + beta, abs(alpha - beta)
        return lower + self.margin <= total <= upper - self.margin and diff <= lower - self.margin


@dataclass(frozen=True)
class ReportRecord:
    kind: str
    n: int
    alpha: float
    beta: Optional[float] = None
    in_domain: bool = True
    lam: Optional[float] = None
    theta: Optional[float] = None
    lengths: tuple[float, ...] = ()
    geometric_lengths: tuple[float, ...] = ()
    volume: Optional[float] = None
    schlafli_volume: Optional[float] = None
    length_gap: Optional[float] = None
    volume_gap: Optional[float] = None
    max_residual: Optional[float] = None
    passed: bool = False
    verified: bool = True
    fan_proper: bool = True
    claims: tuple[ClaimReport, ...] = field(default=(), compare=False)

    def row(self) -> list[str]:
        lengths = list(self.lengths) + [None] * (2 - len(self.lengths))
        if self.kind == "knot":
            lengths[1] = None
        values = [
            self.kind,
            self.n,
            self.alpha,
            self.beta,
            self.in_domain,
            self.lam,
            self.theta,
            lengths[0],
            lengths[1],
            self.volume,
            self.schlafli_volume,
            self.length_gap,
            self.volume_gap,
            self.max_residual,
            self.passed if self.in_domain else None,
            self.verified if self.in_domain else None,
            self.fan_proper if self.in_domain else None,
        ]
        return [_format_value(value) for value in values]

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "cone_angles": [self.alpha] + ([self.beta] if self.beta is not None else []),
            "in_domain": self.in_domain,
            "lambda": self.lam,
            "theta": self.theta,
            "lengths": list(self.lengths),
            "geometric_lengths": list(self.geometric_lengths),
            "volume": self.volume,
            "schlafli_volume": self.schlafli_volume,
            "length_gap": self.length_gap,
            "volume_gap": self.volume_gap,
            "max_residual": self.max_residual,
            "passed": self.passed,
            "verified": self.verified,
            "fan_proper": self.fan_proper,
            "claims": [
                {
                    "claim": claim.claim,
                    "passed": claim.passed,
                    "max_residual": claim.max_residual,
                    "tolerance": claim.tolerance,
                    "details": claim.details,
                }
                for claim in self.claims
            ],
        }


def _format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, str):
        return value
    return "%.17g" % float(value)


def _finite_gap(first, second) -> float:
    gaps = [abs(a - b) for a, b in zip(first, second)]
    return max(gaps) if gaps else math.inf


def build_report(cone: Union[KnotCone, LinkCone], parameters=None, force: bool = False, schlafli: bool = True) -> ReportRecord:
    """Closed-form values, properness claims and both cross-route checks for one cone.

    Raises:
        DomainError: Outside the domain unless forced.
    """
    parameters = _params.resolve(parameters)
    closed = structure(cone, parameters, force)
    poly = build_polyhedron(cone, parameters, force)
    claims = tuple(verify_properness(poly, parameters=parameters))
    claim_summary_info(claims, f"{cone.kind} n={cone.n} angles={cone.cone_angles}")

    try:
        lengths = tuple(geometric_length(poly, parameters))
        length_gap = _finite_gap(lengths, closed.lengths)
    except ConeManifoldError as error:
        info(f"no geometric length: {error}")
        lengths, length_gap = (), math.inf

    volume, volume_gap = None, math.inf
    if poly.verified and schlafli:
        try:
            volume = schlafli_volume(cone, parameters)
            volume_gap = abs(volume - closed.volume)
        except ConeManifoldError as error:
            info(f"no Schlafli volume: {error}")
    elif poly.verified:
        volume_gap = None

    # Outside the NS-fan region only (a) and (b) are expected to hold
    expected = [claim for claim in claims if poly.fan_proper or claim.claim not in FAN_CLAIMS]
    passed = (
        poly.verified
        and all(claim.passed for claim in expected)
        and length_gap <= parameters["length_tolerance"]
        and (volume_gap is None or volume_gap <= parameters["volume_tolerance"])
    )
    return ReportRecord(
        kind=cone.kind,
        n=cone.n,
        alpha=cone.alpha,
        beta=getattr(cone, "beta", None),
        in_domain=True,
        lam=closed.lam,
        theta=closed.theta,
        lengths=closed.lengths,
        geometric_lengths=lengths,
        volume=closed.volume,
        schlafli_volume=volume,
        length_gap=length_gap,
        volume_gap=volume_gap,
        max_residual=max(claim.max_residual for claim in expected),
        passed=passed,
        verified=poly.verified,
        fan_proper=poly.fan_proper,
        claims=claims,
    )


def _scan_point(task) -> ReportRecord:
    kind, n, alpha, beta, inside, parameters, schlafli = task
    if not inside:
        return ReportRecord(kind=kind, n=n, alpha=alpha, beta=beta, in_domain=False)
    cone = KnotCone(n, alpha) if kind == "knot" else LinkCone(n, alpha, beta)
    try:
        return build_report(cone, parameters, schlafli=schlafli)
    except ConeManifoldError as error:
        info(f"{kind} n={n} at ({alpha}, {beta}) failed: {error}")
        return ReportRecord(kind=kind, n=n, alpha=alpha, beta=beta, in_domain=True, passed=False)


def scan(grid: ScanGrid, parameters=None, schlafli: bool = True) -> list[ReportRecord]:
    """One record per grid point in grid order; out-of-domain points carry no values."""
    parameters = _params.resolve(parameters)
    tasks = [
        (grid.kind, grid.n, alpha, beta, grid.contains(alpha, beta), parameters, schlafli)
        for alpha, beta in grid.points()
    ]
    records = parallel_map(_scan_point, tasks, parameters, desc=f"scan {grid.kind} n={grid.n}")
    inside = sum(record.in_domain for record in records)
    info(f"Scanned {len(records)} points, {inside} inside the domain")
    return records


def write_scan_csv(records, path) -> Path:
    path = Path(path)
    with open(path, "w", newline="") as csv_file:
        csv_file.write(CSV_VERSION_LINE + "\n")
        writer = csv.writer(csv_file, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for record in records:
            writer.writerow(record.row())
    info(f"Wrote {len(records)} rows to {path}")
    return path
