# Copyright(C) 2024 Torus Cones Developers
# Licensed under the MIT License

"""Closed-form spherical structures on torus knots t(2n+1, 2) and links t(2n, 2).

Knots: spherical for (2n-1)pi/(2n+1) < alpha < 2pi - (2n-1)pi/(2n+1), with
lambda = cos(pi/(2n+1)) / sin(alpha/2), singular length
l = (2n+1) alpha - (2n-1) pi and volume l^2 / (4(2n+1)).

Links: spherical on the rhombus |alpha - beta| < 2pi(1 - 1/n),
|alpha + beta - 2pi| < 2pi/n, with both components of length
l = n (alpha + beta)/2 - (n-1) pi and volume l^2 / (2n).
"""

import math
from dataclasses import dataclass
from typing import Optional

from torus_cones import parameters as _params
from torus_cones.angles import format_angle
from torus_cones.errors import DomainError
from torus_cones.geometry.chebyshev import roots_U

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class KnotCone:
    """The cone-manifold on t(2n+1, 2) with cone angle alpha."""

    n: int
    alpha: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise DomainError("n >= 1", self.n)
        _check_cone_angle("alpha", self.alpha)

    @property
    def kind(self) -> str:
        return "knot"

    @property
    def cone_angles(self) -> tuple[float, ...]:
        return (self.alpha,)

    @property
    def orbifold_order(self) -> Optional[int]:
        return orbifold_order(self.alpha)

    @property
    def is_orbifold(self) -> bool:
        return self.orbifold_order is not None


@dataclass(frozen=True)
class LinkCone:
    """The cone-manifold on t(2n, 2) with cone angles alpha and beta."""

    n: int
    alpha: float
    beta: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise DomainError("n >= 2", self.n)
        _check_cone_angle("alpha", self.alpha)
        _check_cone_angle("beta", self.beta)

    @property
    def kind(self) -> str:
        return "link"

    @property
    def cone_angles(self) -> tuple[float, ...]:
        return (self.alpha, self.beta)

    @property
    def orbifold_orders(self) -> Optional[tuple[int, int]]:
        """(m1, m2) when alpha = 2pi/m1 and beta = 2pi/m2, else None."""
        orders = (orbifold_order(self.alpha), orbifold_order(self.beta))
        if None in orders:
            return None
        return orders

    @property
    def is_orbifold(self) -> bool:
        return self.orbifold_orders is not None

    @property
    def fan_proper(self) -> bool:
        """Whether the NS fan of F_n is a decomposition at these angles."""
        return link_fan_contains(self.n, self.alpha, self.beta)


@dataclass(frozen=True)
class SphericalStructure:
    cone: object
    lam: float
    theta: float
    lengths: tuple[float, ...]
    volume: float
    verified: bool = True


@dataclass(frozen=True)
class RootChoice:
    """Metric parameter obtained from the k-th Chebyshev root.

    For knots value is lambda; for links value is lambda squared.
    """

    k: int
    root: float
    value: float
    admissible: bool
    selected: bool


def _check_cone_angle(name, value):
    if not (math.isfinite(value) and 0.0 < value < TWO_PI):
        raise DomainError(f"0 < {name} < 2pi", value)


def _margin(parameters):
    return _params.resolve(parameters)["domain_margin"]


def orbifold_order(angle: float) -> Optional[int]:
    """m when angle = 2pi/m for an integer m >= 2, else None."""
    ratio = TWO_PI / angle
    m = round(ratio)
    if m >= 2 and abs(ratio - m) <= 1e-12 * ratio:
        return m
    return None


# Knots


def knot_sphericity_interval(n: int) -> tuple[float, float]:
    lo = (2 * n - 1) * math.pi / (2 * n + 1)
    return lo, TWO_PI - lo


def knot_domain_violation(n: int, alpha: float, margin: float = 0.0) -> Optional[DomainError]:
    lo, hi = knot_sphericity_interval(n)
    if not alpha > lo + margin:
        return DomainError(f"alpha > (2n-1)pi/(2n+1) = {format_angle(lo, exact=False)}", alpha)
    if not alpha < hi - margin:
        return DomainError(f"alpha < 2pi - (2n-1)pi/(2n+1) = {format_angle(hi, exact=False)}", alpha)
    return None


def require_knot_domain(n: int, alpha: float, parameters=None):
    violation = knot_domain_violation(n, alpha, _margin(parameters))
    if violation is not None:
        raise violation


def knot_lambda(n: int, alpha: float, parameters=None, force: bool = False) -> float:
    """lambda = cos(pi/(2n+1)) / sin(alpha/2), the k = 1 root selection."""
    if not force:
        require_knot_domain(n, alpha, parameters)
    return math.cos(math.pi / (2 * n + 1)) / math.sin(alpha / 2.0)


def knot_root_lambdas(n: int, alpha: float) -> list[RootChoice]:
    """Every root of U_{2n} turned into a lambda candidate."""
    s = math.sin(alpha / 2.0)
    choices = []
    for k, root in enumerate(roots_U(2 * n), start=1):
        lam = root / s
        choices.append(RootChoice(k, root, lam, abs(lam) < 1.0, k == 1))
    return choices


def knot_length(n: int, alpha: float, parameters=None, force: bool = False) -> float:
    if not force:
        require_knot_domain(n, alpha, parameters)
    return (2 * n + 1) * alpha - (2 * n - 1) * math.pi


def knot_volume(n: int, alpha: float, parameters=None, force: bool = False) -> float:
    length = knot_length(n, alpha, parameters, force)
    return length * length / (4 * (2 * n + 1))


def epsilon_aux(m: int, n: int, alpha: float) -> float:
    """Phase function m alpha/2 - (4n - m) pi/2."""
    return m * alpha / 2.0 - (4 * n - m) * math.pi / 2.0


def knot_structure(cone: KnotCone, parameters=None, force: bool = False) -> SphericalStructure:
    n, alpha = cone.n, cone.alpha
    verified = not force or knot_domain_violation(n, alpha, _margin(parameters)) is None
    return SphericalStructure(
        cone=cone,
        lam=knot_lambda(n, alpha, parameters, force),
        theta=math.pi / (2 * n + 1),
        lengths=(knot_length(n, alpha, parameters, force),),
        volume=knot_volume(n, alpha, parameters, force),
        verified=verified,
    )


# Links


def _sum_difference(alpha, beta):
    return (alpha + beta) / 2.0, (alpha - beta) / 2.0


def link_domain_violation(n: int, alpha: float, beta: float, margin: float = 0.0) -> Optional[DomainError]:
    total = alpha + beta
    diff = alpha - beta
    lower = TWO_PI * (1.0 - 1.0 / n)
    upper = TWO_PI * (1.0 + 1.0 / n)
    if not total > lower + margin:
        return DomainError(f"alpha + beta > 2pi(1 - 1/n) = {format_angle(lower, exact=False)}", total)
    if not total < upper - margin:
        return DomainError(f"alpha + beta < 2pi(1 + 1/n) = {format_angle(upper, exact=False)}", total)
    if not abs(diff) < lower - margin:
        return DomainError(f"|alpha - beta| < 2pi(1 - 1/n) = {format_angle(lower, exact=False)}", diff)
    return None


def link_sphericity_contains(n: int, alpha: float, beta: float, margin: float = 0.0) -> bool:
    return link_domain_violation(n, alpha, beta, margin) is None


def require_link_domain(n: int, alpha: float, beta: float, parameters=None):
    violation = link_domain_violation(n, alpha, beta, _margin(parameters))
    if violation is not None:
        raise violation


def link_argument(alpha: float, beta: float, lam: float) -> float:
    """Lambda = (1 - lam^2) cos((alpha-beta)/2) + lam^2 cos((alpha+beta)/2)."""
    s, d = _sum_difference(alpha, beta)
    lam2 = lam * lam
    return (1.0 - lam2) * math.cos(d) + lam2 * math.cos(s)


def _link_lambda_squared(n, alpha, beta, k):
    s, d = _sum_difference(alpha, beta)
    denominator = math.cos(d) - math.cos(s)
    if denominator == 0.0:
        raise DomainError("cos((alpha-beta)/2) != cos((alpha+beta)/2)", 0.0)
    return (math.cos(d) - math.cos(k * math.pi / n)) / denominator


def link_lambda(n: int, alpha: float, beta: float, parameters=None, force: bool = False) -> float:
    """Positive root of lambda^2 from the k = n-1 root cos((n-1)pi/n).

    Raises:
        DomainError: Outside the domain unless forced; also when forced and
            lambda^2 <= 0, where no real metric parameter exists.
    """
    if not force:
        require_link_domain(n, alpha, beta, parameters)
    lam2 = _link_lambda_squared(n, alpha, beta, n - 1)
    if lam2 <= 0.0:
        raise DomainError("lambda^2 > 0", lam2)
    return math.sqrt(lam2)


def link_root_lambdas(n: int, alpha: float, beta: float) -> list[RootChoice]:
    """Every root of U_{n-1} turned into a lambda^2 candidate."""
    choices = []
    for k, root in enumerate(roots_U(n - 1), start=1):
        lam2 = _link_lambda_squared(n, alpha, beta, k)
        choices.append(RootChoice(k, root, lam2, 0.0 < lam2 < 1.0, k == n - 1))
    return choices


def link_length(n: int, alpha: float, beta: float, parameters=None, force: bool = False) -> float:
    if not force:
        require_link_domain(n, alpha, beta, parameters)
    return (alpha + beta) / 2.0 * n - math.pi * (n - 1)


def link_volume(n: int, alpha: float, beta: float, parameters=None, force: bool = False) -> float:
    length = link_length(n, alpha, beta, parameters, force)
    return length * length / (2 * n)


def link_fan_violation(n: int, alpha: float, beta: float, margin: float = 0.0) -> Optional[DomainError]:
    """Where the NS fan of F_n stops being a decomposition.

    The poles sit at angle l/2 around the opposite axis, while the faces
    meeting at the axis of B span [0, beta] next to P2 and [l - beta, l]
    next to P_{2n+2}. The tetrahedra (S, N, P_i, P_{i+1}) are coherently
    oriented iff 0 < alpha - l/2 < pi and 0 < beta - l/2 < pi. In rhombus
    coordinates this is |(n-2)u - 2(n-1)v| < n and |(n-2)u + 2(n-1)v| < n:
    the whole rhombus for n = 2, the rhombus without its acute corners for
    n >= 3.
    """
    half = link_length(n, alpha, beta, force=True) / 2.0
    for name, angle in (("alpha", alpha), ("beta", beta)):
        room = angle - half
        if not room > margin:
            return DomainError(f"{name} - l/2 > 0", room)
        if not room < math.pi - margin:
            return DomainError(f"{name} - l/2 < pi", room)
    return None


def link_fan_contains(n: int, alpha: float, beta: float, margin: float = 0.0) -> bool:
    return link_fan_violation(n, alpha, beta, margin) is None


def link_structure(cone: LinkCone, parameters=None, force: bool = False) -> SphericalStructure:
    n, alpha, beta = cone.n, cone.alpha, cone.beta
    verified = not force or link_domain_violation(n, alpha, beta, _margin(parameters)) is None
    length = link_length(n, alpha, beta, parameters, force)
    return SphericalStructure(
        cone=cone,
        lam=link_lambda(n, alpha, beta, parameters, force),
        theta=(n - 1) * math.pi / n,
        lengths=(length, length),
        volume=link_volume(n, alpha, beta, parameters, force),
        verified=verified,
    )


def structure(cone, parameters=None, force: bool = False) -> SphericalStructure:
    if isinstance(cone, KnotCone):
        return knot_structure(cone, parameters, force)
    return link_structure(cone, parameters, force)
