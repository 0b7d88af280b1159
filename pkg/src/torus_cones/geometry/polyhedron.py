# Copyright(C) 2024 Torus Cones Developers
# Licensed under the MIT License

"""Fundamental polyhedra P_n (knots, 4n+2 vertices) and F_n (links, 4n
vertices), their properness claims and the geometric routes to length and
volume.

Vertices are generated from P1 = (1, 0) and P2 = (0, 1) by alternating
words in A and B. The two poles N and S sit on the fixed circles of A and B
and cut the polyhedron into the tetrahedra (S, N, P_i, P_{i+1}).
"""

import cmath
import math
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.integrate import quad

from torus_cones import parameters as _params
from torus_cones.errors import (
    AntipodalError,
    BranchAmbiguityError,
    ConeManifoldError,
    DegenerateTetrahedronError,
    IndexRangeError,
    OrbitConsistencyError,
    QuadratureError,
)
from torus_cones.geometry.chebyshev import eval_T, eval_U
from torus_cones.geometry.cones import (
    KnotCone,
    LinkCone,
    knot_domain_violation,
    knot_lambda,
    knot_sphericity_interval,
    link_domain_violation,
    link_fan_violation,
    link_lambda,
    require_knot_domain,
    require_link_domain,
)
from torus_cones.geometry.holonomy import (
    knot_generators,
    link_generators,
    rotation_angle,
    swap_isometry,
)
from torus_cones.geometry.model import (
    Isometry,
    LambdaLike,
    ModelParameter,
    ModelPoint,
    embed,
    gram_det,
    inner_product,
    lambda_norm,
    normalize,
)
from torus_cones.logging import debug, warning

TWO_PI = 2.0 * math.pi

# Positions inside a Tetrahedron
SOUTH, NORTH, FIRST, SECOND = range(4)
POLE_EDGE = (SOUTH, NORTH)
CYCLE_EDGE = (FIRST, SECOND)

# Claims that hold only where the NS fan is a decomposition
FAN_CLAIMS = ("c", "d", "e")


@dataclass(frozen=True)
class Tetrahedron:
    south: ModelPoint
    north: ModelPoint
    first: ModelPoint
    second: ModelPoint
    index: int = 0

    @property
    def points(self) -> tuple[ModelPoint, ...]:
        return (self.south, self.north, self.first, self.second)


@dataclass(frozen=True)
class FundamentalPolyhedron:
    kind: str
    n: int
    cone_angles: tuple[float, ...]
    lam: float
    vertices: tuple[ModelPoint, ...]
    north: ModelPoint
    south: ModelPoint
    verified: bool = True

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def model(self) -> ModelParameter:
        return ModelParameter(self.lam, strict=self.verified)

    def index(self, i: int) -> int:
        """Reduce a 1-based vertex index modulo the cycle length."""
        return (i - 1) % self.size + 1

    def vertex(self, i: int) -> ModelPoint:
        return self.vertices[self.index(i) - 1]

    def tetrahedra(self) -> list[Tetrahedron]:
        return [
            Tetrahedron(self.south, self.north, self.vertex(i), self.vertex(i + 1), i)
            for i in range(1, self.size + 1)
        ]

    def cone(self) -> Union[KnotCone, LinkCone]:
        if self.kind == "knot":
            return KnotCone(self.n, self.cone_angles[0])
        return LinkCone(self.n, *self.cone_angles)

    def generators(self):
        if self.kind == "knot":
            return knot_generators(self.cone_angles[0], self.model)
        return link_generators(self.cone_angles[0], self.cone_angles[1], self.model)

    def fan_violation(self):
        """Why the NS fan fails to decompose this polyhedron, or None."""
        if self.kind == "knot":
            return None
        return link_fan_violation(self.n, *self.cone_angles)

    @property
    def fan_proper(self) -> bool:
        return self.fan_violation() is None

    def axes(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Vertex indices of the axis edges of A and of B."""
        if self.kind == "knot":
            return (1, 2 * self.n + 2), (2, 2 * self.n + 3)
        return (1, 2 * self.n + 1), (2, 2 * self.n + 2)


@dataclass(frozen=True)
class ClaimReport:
    claim: str
    passed: bool
    residuals: tuple[float, ...]
    tolerance: float
    details: str = ""

    @property
    def max_residual(self) -> float:
        return max(self.residuals) if self.residuals else 0.0


def _powers(word: Isometry, count: int) -> list[Isometry]:
    powers = [Isometry.identity()]
    for _ in range(count):
        powers.append(powers[-1] @ word)
    return powers


def _check_orbit(points, alternatives, tolerance):
    problems = []
    for index, point in alternatives.items():
        gap = points[index].distance_to(point)
        debug(f"orbit overlap at P{index}: {gap:.3e}")
        if gap > tolerance:
            problems.append(f"P{index} forward/backward gap {gap:.3e}")
    return problems


def _check_axis(point, coordinate, index, tolerance):
    off_axis = abs(point.z2) if coordinate == 1 else abs(point.z1)
    if off_axis > tolerance:
        return [f"P{index} misses the fixed circle by {off_axis:.3e}"]
    return []


def _finish(kind, n, angles, model, points, axis_a, axis_b, problems, force, verified, parameters):
    if problems:
        message = "; ".join(problems)
        if not force:
            raise OrbitConsistencyError(message)
        warning(f"forced {kind} polyhedron n={n}: {message}")
    north = axis_midpoint(points[axis_a[0]], points[axis_a[1]], parameters)
    south = axis_midpoint(points[axis_b[0]], points[axis_b[1]], parameters)
    vertices = tuple(points[i] for i in range(1, len(points) + 1))
    if not verified:
        warning(f"{kind} polyhedron n={n} at {angles} built outside the domain, marked unverified")
    return FundamentalPolyhedron(kind, n, angles, model.lam, vertices, north, south, verified)


def build_knot_polyhedron(n: int, alpha: float, parameters=None, force: bool = False) -> FundamentalPolyhedron:
    """Build P_n for the knot t(2n+1, 2) with cone angle alpha.

    Odd vertices P_{2k+1} = P1 (AB)^k and even vertices P_{2k} = P2 (AB)^{k-1}
    run forward up to P_{2n+2}; the rest come backward from P1 (BA)^{2n-k+1}
    and P2 (BA)^{2n-k+2}. Both schemes must agree on P_{2n+2} and P_{2n+3}.

    Raises:
        DomainError: Outside the sphericity interval unless forced.
        OrbitConsistencyError: If the schemes disagree or an axis vertex is
            off its fixed circle.
    """
    parameters = _params.resolve(parameters)
    KnotCone(n, alpha)
    violation = knot_domain_violation(n, alpha, parameters["domain_margin"])
    if violation is not None and not force:
        raise violation
    lam = knot_lambda(n, alpha, parameters, force=True) + parameters["lambda_perturbation"]
    verified = violation is None
    model = ModelParameter(lam, strict=verified, guard=parameters["lambda_guard"])
    pair = knot_generators(alpha, model)
    debug(f"knot polyhedron n={n}, alpha={alpha:.17g}, lambda={lam:.17g}")

    ab = _powers(pair.A @ pair.B, n + 1)
    ba = _powers(pair.B @ pair.A, n + 1)
    p1, p2 = ModelPoint(1 + 0j, 0j), ModelPoint(0j, 1 + 0j)
    points = {}
    for k in range(0, n + 1):
        points[2 * k + 1] = p1 @ ab[k]
    for k in range(1, n + 2):
        points[2 * k] = p2 @ ab[k - 1]
    for k in range(n + 1, 2 * n + 1):
        points[2 * k + 1] = p1 @ ba[2 * n - k + 1]
    for k in range(n + 2, 2 * n + 2):
        points[2 * k] = p2 @ ba[2 * n - k + 2]

    tolerance = parameters["orbit_tolerance"]
    problems = _check_orbit(points, {2 * n + 2: p2 @ ba[n + 1], 2 * n + 3: p1 @ ab[n + 1]}, tolerance)
    problems += _check_axis(points[2 * n + 2], 1, 2 * n + 2, tolerance)
    problems += _check_axis(points[2 * n + 3], 2, 2 * n + 3, tolerance)
    return _finish("knot", n, (alpha,), model, points, (1, 2 * n + 2), (2, 2 * n + 3), problems, force, verified, parameters)


def build_link_polyhedron(n: int, alpha: float, beta: float, parameters=None, force: bool = False) -> FundamentalPolyhedron:
    """Build F_n for the link t(2n, 2) with cone angles alpha and beta.

    Forward vertices P1 (AB)^k, P2 (AB)^{k-1} up to P_{2n+2}, backward
    vertices P1 (BA)^{2n-k}, P2 (BA)^{2n-k+1}; P_{2n+1} lands on the fixed
    circle of A and P_{2n+2} on that of B.

    The polyhedron exists on the whole domain, but for n >= 3 its NS fan is
    a decomposition only where link_fan_violation returns None.

    Raises:
        DomainError: Outside the domain unless forced, or when no real
            lambda exists.
        OrbitConsistencyError: On disagreeing schemes or a missed axis.
    """
    parameters = _params.resolve(parameters)
    LinkCone(n, alpha, beta)
    violation = link_domain_violation(n, alpha, beta, parameters["domain_margin"])
    if violation is not None and not force:
        raise violation
    lam = link_lambda(n, alpha, beta, parameters, force=True) + parameters["lambda_perturbation"]
    verified = violation is None
    model = ModelParameter(lam, strict=verified, guard=parameters["lambda_guard"])
    pair = link_generators(alpha, beta, model)
    debug(f"link polyhedron n={n}, alpha={alpha:.17g}, beta={beta:.17g}, lambda={lam:.17g}")

    ab = _powers(pair.A @ pair.B, n)
    ba = _powers(pair.B @ pair.A, n)
    p1, p2 = ModelPoint(1 + 0j, 0j), ModelPoint(0j, 1 + 0j)
    points = {}
    for k in range(0, n + 1):
        points[2 * k + 1] = p1 @ ab[k]
    for k in range(1, n + 2):
        points[2 * k] = p2 @ ab[k - 1]
    for k in range(n + 1, 2 * n):
        points[2 * k + 1] = p1 @ ba[2 * n - k]
    for k in range(n + 2, 2 * n + 1):
        points[2 * k] = p2 @ ba[2 * n - k + 1]

    tolerance = parameters["orbit_tolerance"]
    problems = _check_orbit(points, {2 * n + 1: p1 @ ba[n], 2 * n + 2: p2 @ ba[n]}, tolerance)
    problems += _check_axis(points[2 * n + 1], 1, 2 * n + 1, tolerance)
    problems += _check_axis(points[2 * n + 2], 2, 2 * n + 2, tolerance)
    poly = _finish("link", n, (alpha, beta), model, points, (1, 2 * n + 1), (2, 2 * n + 2), problems, force, verified, parameters)
    violation = poly.fan_violation()
    if violation is not None:
        debug(f"link polyhedron n={n} outside the NS-fan region: {violation}")
    return poly


def build_polyhedron(cone: Union[KnotCone, LinkCone], parameters=None, force: bool = False) -> FundamentalPolyhedron:
    if isinstance(cone, KnotCone):
        return build_knot_polyhedron(cone.n, cone.alpha, parameters, force)
    return build_link_polyhedron(cone.n, cone.alpha, cone.beta, parameters, force)


def axis_midpoint(p: ModelPoint, q: ModelPoint, parameters=None) -> ModelPoint:
    """Midpoint of the arc from p to q along their common fixed circle,
    traversed in the positive direction. Antipodal pairs are allowed.

    Raises:
        OrbitConsistencyError: If p and q do not share a coordinate circle.
    """
    tolerance = _params.resolve(parameters)["orbit_tolerance"]
    if abs(p.z2) <= tolerance and abs(q.z2) <= tolerance:
        phase = cmath.phase(q.z1 / p.z1) % TWO_PI
        return ModelPoint(p.z1 * cmath.exp(0.5j * phase), 0j)
    if abs(p.z1) <= tolerance and abs(q.z1) <= tolerance:
        phase = cmath.phase(q.z2 / p.z2) % TWO_PI
        return ModelPoint(0j, p.z2 * cmath.exp(0.5j * phase))
    raise OrbitConsistencyError(f"{p} and {q} do not lie on a common fixed circle")


def geodesic_midpoint(p: ModelPoint, q: ModelPoint, lam: LambdaLike) -> ModelPoint:
    """Midpoint of the minimal geodesic arc from p to q.

    Raises:
        AntipodalError: If p = -q, where the midpoint is not unique.
    """
    total = ModelPoint(p.z1 + q.z1, p.z2 + q.z2)
    if lambda_norm(total, lam) <= 1e-12:
        raise AntipodalError(f"{p} and {q} are antipodal")
    return normalize(total, lam)


def dihedral_angle(tetrahedron: Tetrahedron, edge: tuple[int, int], lam: LambdaLike, parameters=None) -> float:
    """Interior dihedral angle at an edge, in (0, pi).

    The four points are embedded in the round sphere; the two vertices off
    the edge are projected onto the orthogonal complement of the edge plane
    and the angle between the projections is returned.

    Args:
        tetrahedron (Tetrahedron): Ordered (S, N, P_i, P_{i+1}).
        edge (tuple): Two distinct positions, e.g. CYCLE_EDGE or POLE_EDGE.
        lam: Metric parameter.

    Raises:
        DegenerateTetrahedronError: If the points are linearly dependent or a
            projection vanishes.
    """
    floor = _params.resolve(parameters)["gram_floor"]
    i, j = edge
    if i == j:
        raise ValueError(f"edge endpoints must differ, got {edge}")
    vectors = np.array([embed(point, lam).vector for point in tetrahedron.points])
    if abs(np.linalg.det(vectors)) <= floor:
        raise DegenerateTetrahedronError(f"tetrahedron {tetrahedron.index} is degenerate")
    basis, triangle = np.linalg.qr(vectors[[i, j]].T)
    if np.min(np.abs(np.diag(triangle))) <= 1e-12:
        raise DegenerateTetrahedronError(f"edge {edge} of tetrahedron {tetrahedron.index} is degenerate")
    projections = []
    for k in range(4):
        if k in edge:
            continue
        projection = vectors[k] - basis @ (basis.T @ vectors[k])
        length = np.linalg.norm(projection)
        if length <= 1e-12:
            raise DegenerateTetrahedronError(f"vertex {k} of tetrahedron {tetrahedron.index} projects to zero")
        projections.append(projection / length)
    u, v = projections
    return float(2.0 * np.arctan2(np.linalg.norm(u - v), np.linalg.norm(u + v)))


def face_pairings(poly: FundamentalPolyhedron) -> dict[str, list[tuple[int, int]]]:
    """Vertex index maps j -> image under A and under B."""
    n, size = poly.n, poly.size
    if poly.kind == "knot":
        a_map = [(j, 4 * n + 4 - j) for j in range(1, 2 * n + 3)]
        b_sources = [2, 1] + list(range(4 * n + 2, 2 * n + 2, -1))
        b_map = [(j, 4 * n + 6 - j) for j in b_sources]
    else:
        a_map = [(j, 4 * n + 2 - j) for j in range(1, 2 * n + 2)]
        b_sources = [2, 1] + list(range(4 * n, 2 * n + 1, -1))
        b_map = [(j, 4 * n + 4 - j) for j in b_sources]
    reduce = poly.index
    return {
        "A": [(reduce(j), reduce(image)) for j, image in a_map],
        "B": [(reduce(j), reduce(image)) for j, image in b_map],
    }


def _wrapped(angle):
    return abs((angle + math.pi) % TWO_PI - math.pi)


def _claim_rotation(poly, generators, parameters):
    residuals = []
    angles = poly.cone_angles if poly.kind == "link" else poly.cone_angles * 2
    for generator, angle in ((generators.A, angles[0]), (generators.B, angles[1])):
        residuals.append(_wrapped(rotation_angle(generator) - angle))
    (a0, a1), (b0, b1) = poly.axes()
    for point in (poly.vertex(a0), poly.vertex(a1), poly.north):
        residuals.append(abs(point.z2))
        residuals.append((point @ generators.A).distance_to(point))
    for point in (poly.vertex(b0), poly.vertex(b1), poly.south):
        residuals.append(abs(point.z1))
        residuals.append((point @ generators.B).distance_to(point))
    return residuals, "rotation angles and axis points"


def _claim_faces(poly, generators, parameters):
    residuals = []
    worst = ""
    for name, pairs in face_pairings(poly).items():
        generator = getattr(generators, name)
        for j, image in pairs:
            gap = (poly.vertex(j) @ generator).distance_to(poly.vertex(image))
            if not residuals or gap > max(residuals):
                worst = f"worst {name}: P{j} -> P{image}"
            residuals.append(gap)
    residuals.append((poly.north @ generators.A).distance_to(poly.north))
    residuals.append((poly.south @ generators.B).distance_to(poly.south))
    return residuals, worst


def edge_angles(poly: FundamentalPolyhedron, parameters=None) -> tuple[list[float], list[float]]:
    """psi_i at the edges P_iP_{i+1} and phi_i at NS, one per tetrahedron."""
    lam = poly.model
    psi, phi = [], []
    for tetrahedron in poly.tetrahedra():
        psi.append(dihedral_angle(tetrahedron, CYCLE_EDGE, lam, parameters))
        phi.append(dihedral_angle(tetrahedron, POLE_EDGE, lam, parameters))
    return psi, phi


def tetrahedron_grams(poly: FundamentalPolyhedron) -> list[float]:
    return [gram_det(*tetrahedron.points) for tetrahedron in poly.tetrahedra()]


def verify_properness(poly: FundamentalPolyhedron, generators=None, tol: float = None, parameters=None) -> list[ClaimReport]:
    """Check claims (a) to (e) and return one report per claim.

    (a) generators rotate by the cone angles about circles containing the
        axis edges, (b) faces are paired vertex by vertex, (c) the psi_i sum
        to 2pi, (d) the phi_i sum to 2pi, (e) every tetrahedron
        (S, N, P_i, P_{i+1}) has a Gram determinant above gram_floor.

    Geometric failures never raise; they become failed reports. On a link
    polyhedron outside the NS-fan region the FAN_CLAIMS fail by geometry,
    and their details name the violated inequality.
    """
    parameters = _params.resolve(parameters)
    if tol is None:
        tol = parameters["claim_tolerance"]
    if generators is None:
        generators = poly.generators()
    angles = {}

    def angle_sums():
        if not angles:
            psi, phi = edge_angles(poly, parameters)
            angles["psi"], angles["phi"] = psi, phi
        return angles

    def claim_psi(poly, generators, parameters):
        psi = angle_sums()["psi"]
        return [abs(sum(psi) - TWO_PI)], f"sum psi = {sum(psi):.17g}"

    def claim_phi(poly, generators, parameters):
        phi = angle_sums()["phi"]
        return [abs(sum(phi) - TWO_PI)], f"sum phi = {sum(phi):.17g}"

    reports = [
        _run_claim("a", _claim_rotation, poly, generators, tol, parameters),
        _run_claim("b", _claim_faces, poly, generators, tol, parameters),
        _run_claim("c", claim_psi, poly, generators, tol, parameters),
        _run_claim("d", claim_phi, poly, generators, tol, parameters),
    ]

    def claim_gram(poly, generators, parameters):
        floor = parameters["gram_floor"]
        grams = tetrahedron_grams(poly)
        return [max(0.0, floor - value) for value in grams], f"min gram = {min(grams):.6e}"

    reports.append(_run_claim("e", claim_gram, poly, generators, 0.0, parameters))
    return reports


def _run_claim(claim, check, poly, generators, tol, parameters) -> ClaimReport:
    note = ""
    if claim in FAN_CLAIMS and not poly.fan_proper:
        note = f"outside the NS-fan region, {poly.fan_violation()}; "
    try:
        residuals, details = check(poly, generators, parameters)
    except ConeManifoldError as error:
        return ClaimReport(claim, False, (math.inf,), tol, f"{note}{type(error).__name__}: {error}")
    residuals = tuple(float(r) for r in residuals)
    passed = all(r <= tol for r in residuals)
    if not poly.verified:
        details = f"unverified; {details}"
    return ClaimReport(claim, passed, residuals, tol, note + details)


def swap_symmetry_residual(poly: FundamentalPolyhedron) -> float:
    """How far the swap C is from mapping P_i to P_{3-i} and N to S.

    Also compares pairwise inner products (so distances) of corresponding
    vertex pairs and the Gram determinants of tetrahedra i and 4n+4-i.
    Knot polyhedra only.
    """
    if poly.kind != "knot":
        raise ValueError("swap symmetry is defined for knot polyhedra")
    c = swap_isometry()
    lam = poly.model
    size = poly.size
    residuals = [(poly.north @ c).distance_to(poly.south)]
    for i in range(1, size + 1):
        residuals.append((poly.vertex(i) @ c).distance_to(poly.vertex(3 - i)))
    for i in range(1, size + 1):
        for j in range(i + 1, size + 1):
            before = inner_product(poly.vertex(i), poly.vertex(j), lam)
            after = inner_product(poly.vertex(3 - i), poly.vertex(3 - j), lam)
            residuals.append(abs(before - after))
    grams = tetrahedron_grams(poly)
    for i in range(1, size + 1):
        residuals.append(abs(grams[i - 1] - grams[poly.index(4 * poly.n + 4 - i) - 1]))
    return float(max(residuals))


def gram_delta_closed_form(j: int, k: int, n: int, beta_shift: float) -> float:
    """Closed form of the tetrahedron Gram determinants of P_n.

    With theta = pi/(2n+1) and beta_shift = alpha - pi:
    j = 1, k = 0..n:  T_L(cos b/4)^2 - U_{2k-1}(cos theta)^2 sin(b/2)^2, L = |2n-4k+1|,
    equal to gram(S, N, P_{2k+1}, P_{2k+2});
    j = 2, k = 1..n:  same with U_{2k-2} and L = |2n-4k+3|,
    equal to gram(S, N, P_{2k}, P_{2k+1}).
    """
    if j == 1 and 0 <= k <= n:
        order, degree = abs(2 * n - 4 * k + 1), 2 * k - 1
    elif j == 2 and 1 <= k <= n:
        order, degree = abs(2 * n - 4 * k + 3), 2 * k - 2
    else:
        raise IndexRangeError(f"no closed form for j={j}, k={k}, n={n}")
    theta = math.pi / (2 * n + 1)
    t = eval_T(order, math.cos(beta_shift / 4.0))
    u = eval_U(degree, math.cos(theta))
    return t * t - u * u * math.sin(beta_shift / 2.0) ** 2


def gram_delta_direct(poly: FundamentalPolyhedron, j: int, k: int) -> float:
    """The Gram determinant gram_delta_closed_form describes, from the vertices."""
    first = 2 * k + 1 if j == 1 else 2 * k
    return gram_det(poly.south, poly.north, poly.vertex(first), poly.vertex(first + 1))


def geometric_length(poly: FundamentalPolyhedron, parameters=None) -> list[float]:
    """Singular geodesic lengths read off the polyhedron.

    Knot: l = 4 arccos<P1, N>. The pole phase is eps(2n+1)/2 = l/4, which
    stays in (0, pi) for 0 < l < 4pi, so the principal branch is the right one.
    Link: l_alpha = 2 arccos<P1, N>, l_beta = 2 arccos<P2, S>.

    Raises:
        BranchAmbiguityError: At |<P, pole>| = 1, the collapse boundary.
    """
    branch = _params.resolve(parameters)["branch_tolerance"]
    lam = poly.model

    def half_angle(point, pole):
        c = inner_product(point, pole, lam)
        if abs(c) >= 1.0 - branch:
            raise BranchAmbiguityError(f"<P, pole> = {c:.17g} at the collapse boundary")
        return math.acos(c)

    p1, p2 = poly.vertex(1), poly.vertex(2)
    if poly.kind == "knot":
        return [4.0 * half_angle(p1, poly.north)]
    return [2.0 * half_angle(p1, poly.north), 2.0 * half_angle(p2, poly.south)]


def _integrate(integrand, lower, upper, parameters):
    value, estimate = quad(
        integrand,
        lower,
        upper,
        epsabs=parameters["quadrature_tolerance"],
        epsrel=1e-12,
        limit=50,
    )
    if estimate > parameters["quadrature_error_limit"]:
        raise QuadratureError(f"quadrature error estimate {estimate:.3e} exceeds limit")
    return value


def schlafli_volume(cone: Union[KnotCone, LinkCone], parameters=None, path: str = "direct") -> float:
    """Volume by integrating dV = l/2 d(angle) from the collapse point.

    Lengths come from geometric_length of polyhedra built along the path.
    Knots integrate over [(2n-1)pi/(2n+1), alpha]. Links start at the
    diagonal corner alpha = beta = pi(n-1)/n and follow either a straight
    line ("direct") or the diagonal up to (m, m), m = (alpha+beta)/2, then
    the anti-diagonal ("diagonal").

    Raises:
        DomainError: Outside the domain.
        QuadratureError: If the error estimate is above quadrature_error_limit.
    """
    parameters = _params.resolve(parameters)
    n = cone.n
    if isinstance(cone, KnotCone):
        require_knot_domain(n, cone.alpha, parameters)
        lower, _ = knot_sphericity_interval(n)

        def integrand(alpha):
            return geometric_length(build_knot_polyhedron(n, alpha, parameters), parameters)[0] / 2.0

        return _integrate(integrand, lower, cone.alpha, parameters)

    require_link_domain(n, cone.alpha, cone.beta, parameters)
    corner = math.pi * (n - 1) / n
    target = (cone.alpha, cone.beta)
    if path == "direct":
        waypoints = [(corner, corner), target]
    elif path == "diagonal":
        middle = (cone.alpha + cone.beta) / 2.0
        waypoints = [(corner, corner), (middle, middle), target]
    else:
        raise ValueError(f"unknown path {path!r}")

    volume = 0.0
    for (a0, b0), (a1, b1) in zip(waypoints, waypoints[1:]):
        da, db = a1 - a0, b1 - b0
        if da == 0.0 and db == 0.0:
            continue

        def integrand(t, a0=a0, b0=b0, da=da, db=db):
            poly = build_link_polyhedron(n, a0 + t * da, b0 + t * db, parameters)
            l_alpha, l_beta = geometric_length(poly, parameters)
            return l_alpha / 2.0 * da + l_beta / 2.0 * db

        volume += _integrate(integrand, 0.0, 1.0, parameters)
    return volume
