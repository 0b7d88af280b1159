# Copyright(C) 2024 Torus Cones Developers
# Licensed under the MIT License

"""Verification suites run by `torus-cones verify`.

Random-sample suites (generator isometries, relator factorizations,
relation residuals) run in the calling process; grid suites evaluate one
cone per task through parallel_map.
"""

import math
from collections import OrderedDict
from dataclasses import dataclass

import numpy as np

from torus_cones import parameters as _params
from torus_cones.errors import ConeManifoldError
from torus_cones.geometry.cones import (
    KnotCone,
    LinkCone,
    knot_domain_violation,
    knot_lambda,
    knot_root_lambdas,
    knot_sphericity_interval,
    link_domain_violation,
    link_lambda,
    structure,
)
from torus_cones.geometry.holonomy import (
    knot_generators,
    knot_relation_residual,
    lemma2_factorization_check,
    lemma3_factorization_check,
    link_generators,
    link_prefactor_gap,
    link_relation_residual,
    orbifold_relation_residual,
)
from torus_cones.geometry.model import is_isometry
from torus_cones.geometry.polyhedron import (
    FAN_CLAIMS,
    build_polyhedron,
    geometric_length,
    gram_delta_closed_form,
    gram_delta_direct,
    schlafli_volume,
    swap_symmetry_residual,
    verify_properness,
)
from torus_cones.logging import info, warning
from torus_cones.reports.runner import parallel_map

SCOPES = ("all", "knot", "link")
LAMBDA_SAMPLE_BOUND = 0.999
ORBIFOLD_MAX_ORDER = 12
TWO_PI = 2.0 * math.pi


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: int = 0
    max_residual: float = 0.0

    @property
    def passed(self) -> bool:
        return self.checks > 0 and self.failures == 0

    def add(self, residual: float, tolerance: float, passed: bool = None):
        residual = float(residual)
        if math.isnan(residual):
            residual = math.inf
        if passed is None:
            passed = residual <= tolerance
        self.checks += 1
        if not passed:
            self.failures += 1
        self.max_residual = max(self.max_residual, residual)


class SuiteCollector:
    def __init__(self):
        self.suites = OrderedDict()

    def add(self, name, residual, tolerance, passed=None):
        self.suites.setdefault(name, SuiteResult(name)).add(residual, tolerance, passed)

    def extend(self, outcomes):
        for outcome in outcomes:
            self.add(*outcome)

    def results(self) -> list[SuiteResult]:
        return list(self.suites.values())


def _perturbed(lam, parameters):
    return lam + parameters["lambda_perturbation"]


def _isometry_suite(collector, rng, scope, parameters, samples=500):
    tol = parameters["isometry_tolerance"]
    for _ in range(samples):
        alpha, beta = rng.uniform(0.0, 2.0 * math.pi, size=2)
        if alpha == 0.0 or beta == 0.0:
            continue
        lam = rng.uniform(-LAMBDA_SAMPLE_BOUND, LAMBDA_SAMPLE_BOUND)
        pairs = []
        if scope in ("all", "knot"):
            pairs.append(knot_generators(alpha, lam))
        if scope in ("all", "link"):
            pairs.append(link_generators(alpha, beta, lam))
        for pair in pairs:
            for generator in (pair.A, pair.B):
                collector.add("generator_isometry", is_isometry(generator, lam, tol).residual, tol)


def _knot_algebra_suites(collector, rng, max_n, parameters, samples=200):
    tol = parameters["factorization_tolerance"]
    relation_tol = parameters["relation_tolerance"]
    for n in range(1, max_n + 1):
        for _ in range(samples):
            alpha = rng.uniform(1e-6, 2.0 * math.pi - 1e-6)
            lam = rng.uniform(-LAMBDA_SAMPLE_BOUND, LAMBDA_SAMPLE_BOUND)
            collector.add("knot_factorization", lemma2_factorization_check(n, alpha, lam), tol)
            for choice in knot_root_lambdas(n, alpha):
                lam_root = _perturbed(choice.value, parameters)
                if abs(lam_root) < LAMBDA_SAMPLE_BOUND:
                    pair = knot_generators(alpha, lam_root)
                    collector.add("knot_relation", knot_relation_residual(pair, n), relation_tol)


def _link_algebra_suites(collector, rng, max_n, parameters, samples=200):
    tol = parameters["factorization_tolerance"]
    prefactor_tol = parameters["prefactor_tolerance"]
    for n in range(2, max_n + 1):
        for _ in range(samples):
            alpha, beta = rng.uniform(1e-6, 2.0 * math.pi - 1e-6, size=2)
            lam = rng.uniform(-LAMBDA_SAMPLE_BOUND, LAMBDA_SAMPLE_BOUND)
            collector.add("link_factorization", lemma3_factorization_check(n, alpha, beta, lam), tol)
            collector.add("link_factorization", link_prefactor_gap(n, alpha, beta, lam), prefactor_tol)


def knot_grid(n: int, grid: int) -> list[float]:
    """grid points strictly inside the sphericity interval, evenly spaced."""
    lo, hi = knot_sphericity_interval(n)
    return [lo + (hi - lo) * (i + 1) / (grid + 1) for i in range(grid)]


def rhombus_point(n: int, u: float, v: float) -> tuple[float, float]:
    """(alpha, beta) with alpha + beta = 2pi + u 2pi/n and alpha - beta = v 2pi(1 - 1/n).

    The link domain is |u| < 1, |v| < 1.
    """
    total = 2.0 * math.pi + u * 2.0 * math.pi / n
    diff = v * 2.0 * math.pi * (1.0 - 1.0 / n)
    return (total + diff) / 2.0, (total - diff) / 2.0


def link_grid(n: int, side: int, extent: float = 0.9) -> list[tuple[float, float]]:
    """side x side points of the rhombus, evenly spaced in u and v."""
    axis = np.linspace(-extent, extent, side)
    return [rhombus_point(n, float(u), float(v)) for u in axis for v in axis]


def _cone_outcomes(cone, parameters, tol, prefix):
    """Grid checks for one cone as (suite, residual, tolerance, passed) tuples,
    together with the polyhedron (None if it could not be built)."""
    outcomes = []
    try:
        poly = build_polyhedron(cone, parameters)
    except ConeManifoldError as error:
        warning(f"{prefix} n={cone.n} angles={cone.cone_angles}: {error}")
        return [(f"{prefix}_properness", math.inf, tol, False)], None

    for claim in verify_properness(poly, tol=tol, parameters=parameters):
        if poly.fan_proper or claim.claim not in FAN_CLAIMS:
            outcomes.append((f"{prefix}_properness", claim.max_residual, claim.tolerance, claim.passed))
        elif claim.claim == "e":
            # Past the fan region the orientations must really be mixed
            outcomes.append(("link_fan_boundary", claim.max_residual, claim.tolerance, not claim.passed))

    closed = structure(cone, parameters)
    try:
        lengths = geometric_length(poly, parameters)
        gap = max(abs(a - b) for a, b in zip(lengths, closed.lengths))
    except ConeManifoldError:
        gap = math.inf
    outcomes.append((f"{prefix}_lengths", gap, parameters["length_tolerance"], None))

    try:
        gap = abs(schlafli_volume(cone, parameters) - closed.volume)
    except ConeManifoldError:
        gap = math.inf
    outcomes.append((f"{prefix}_volumes", gap, parameters["volume_tolerance"], None))
    return outcomes, poly


def _knot_task(task):
    n, alpha, parameters, tol = task
    outcomes, poly = _cone_outcomes(KnotCone(n, alpha), parameters, tol, "knot")
    if poly is None:
        return outcomes

    gram_tol = parameters["gram_closed_form_tolerance"]
    beta_shift = alpha - math.pi
    for j, ks in ((1, range(0, n + 1)), (2, range(1, n + 1))):
        for k in ks:
            gap = abs(gram_delta_closed_form(j, k, n, beta_shift) - gram_delta_direct(poly, j, k))
            outcomes.append(("gram_closed_forms", gap, gram_tol, None))

    outcomes.append(("swap_symmetry", swap_symmetry_residual(poly), parameters["symmetry_tolerance"], None))
    return outcomes


def _link_task(task):
    n, alpha, beta, parameters, tol = task
    outcomes, poly = _cone_outcomes(LinkCone(n, alpha, beta), parameters, tol, "link")
    if poly is None:
        return outcomes
    lam = link_lambda(n, alpha, beta, parameters) + parameters["lambda_perturbation"]
    pair = link_generators(alpha, beta, lam)
    outcomes.append(("link_relation", link_relation_residual(pair, n), parameters["relation_tolerance"], None))
    return outcomes


def _gram_boundary_suite(collector, max_n, parameters):
    tol = parameters["gram_boundary_tolerance"]
    for n in range(1, max_n + 1):
        theta = math.pi / (2 * n + 1)
        for j, ks in ((1, range(0, n + 1)), (2, range(1, n + 1))):
            for k in ks:
                for shift in (-2.0 * theta, 2.0 * theta):
                    collector.add("gram_closed_forms", abs(gram_delta_closed_form(j, k, n, shift)), tol)


def _link_path_suite(collector, max_n, parameters):
    """Schlafli volume along two different paths to one asymmetric point per n."""
    tol = parameters["volume_tolerance"]
    for n in range(2, max_n + 1):
        alpha, beta = rhombus_point(n, 0.2, 0.35)
        cone = LinkCone(n, alpha, beta)
        try:
            gap = abs(schlafli_volume(cone, parameters, "direct") - schlafli_volume(cone, parameters, "diagonal"))
        except ConeManifoldError:
            gap = math.inf
        collector.add("link_volumes", gap, tol)


def _orbifold_suite(collector, scope, max_n, parameters):
    """A^m = B^m = identity, together with the torus relation, at every
    orbifold angle 2pi/m inside a domain (m <= ORBIFOLD_MAX_ORDER)."""
    tol = parameters["relation_tolerance"]
    margin = parameters["domain_margin"]
    orders = range(2, ORBIFOLD_MAX_ORDER + 1)
    if scope in ("all", "knot"):
        for n in range(1, max_n + 1):
            for m in orders:
                alpha = TWO_PI / m
                if knot_domain_violation(n, alpha, margin) is not None:
                    continue
                pair = knot_generators(alpha, _perturbed(knot_lambda(n, alpha, parameters), parameters))
                collector.add("orbifold_relations", orbifold_relation_residual(pair, m), tol)
                collector.add("orbifold_relations", knot_relation_residual(pair, n), tol)
    if scope in ("all", "link"):
        for n in range(2, max_n + 1):
            for m1 in orders:
                for m2 in orders:
                    alpha, beta = TWO_PI / m1, TWO_PI / m2
                    if link_domain_violation(n, alpha, beta, margin) is not None:
                        continue
                    lam = _perturbed(link_lambda(n, alpha, beta, parameters), parameters)
                    pair = link_generators(alpha, beta, lam)
                    collector.add("orbifold_relations", orbifold_relation_residual(pair, m1, m2), tol)
                    collector.add("orbifold_relations", link_relation_residual(pair, n), tol)


def link_side(grid: int) -> int:
    """Side of the link rhombus grid used for a given knot grid density."""
    return max(2, math.isqrt(grid) + 1)


def run_verification(scope: str = "all", max_n: int = 4, grid: int = 25, tol: float = None, parameters=None) -> list[SuiteResult]:
    """Run every suite in scope and return one result per suite.

    Args:
        scope (str): all, knot or link.
        max_n (int): Largest n; knots start at 1, links at 2.
        grid (int): Cone angles per knot interval; links use a link_side(grid)^2 rhombus grid.
        tol (float): Tolerance for the properness claims.
    """
    if scope not in SCOPES:
        raise ValueError(f"scope must be one of {SCOPES}, got {scope!r}")
    parameters = _params.resolve(parameters)
    if tol is None:
        tol = parameters["claim_tolerance"]
    if parameters["lambda_perturbation"]:
        warning(f"lambda perturbed by {parameters['lambda_perturbation']:g}; suites are expected to fail")
    rng = np.random.default_rng(parameters["seed"])
    collector = SuiteCollector()

    _isometry_suite(collector, rng, scope, parameters)
    _orbifold_suite(collector, scope, max_n, parameters)
    if scope in ("all", "knot"):
        _knot_algebra_suites(collector, rng, max_n, parameters)
        _gram_boundary_suite(collector, max_n, parameters)
        tasks = [(n, alpha, parameters, tol) for n in range(1, max_n + 1) for alpha in knot_grid(n, grid)]
        for outcomes in parallel_map(_knot_task, tasks, parameters, desc="knot grid"):
            collector.extend(outcomes)
    if scope in ("all", "link") and max_n >= 2:
        _link_algebra_suites(collector, rng, max_n, parameters)
        side = link_side(grid)
        tasks = [
            (n, alpha, beta, parameters, tol)
            for n in range(2, max_n + 1)
            for alpha, beta in link_grid(n, side)
        ]
        for outcomes in parallel_map(_link_task, tasks, parameters, desc="link grid"):
            collector.extend(outcomes)
        _link_path_suite(collector, max_n, parameters)

    results = collector.results()
    for result in results:
        status = "pass" if result.passed else "FAIL"
        info(f"suite {result.name}: {result.checks} checks, {result.failures} failures, {status}")
    return results
