# Copyright(C) 2024 Torus Cones Developers
# Licensed under the MIT License

"""Holonomy generators A, B and the swap C, relation residuals and the two
Chebyshev factorizations of the relator."""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from torus_cones import parameters as _params
from torus_cones.errors import DomainError, NotRotationError
from torus_cones.geometry.chebyshev import eval_U
from torus_cones.geometry.cones import epsilon_aux, link_argument, require_knot_domain
from torus_cones.geometry.model import Isometry, LambdaLike, ModelParameter, as_parameter

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class KnotGeneratorPair:
    A: Isometry
    B: Isometry
    alpha: float
    model: ModelParameter

    @property
    def lam(self) -> float:
        return self.model.lam

    @property
    def cone_angles(self) -> tuple[float, ...]:
        return (self.alpha,)


@dataclass(frozen=True)
class LinkGeneratorPair:
    A: Isometry
    B: Isometry
    alpha: float
    beta: float
    model: ModelParameter

    @property
    def lam(self) -> float:
        return self.model.lam

    @property
    def cone_angles(self) -> tuple[float, ...]:
        return (self.alpha, self.beta)


def _check_angle(name, value):
    if not (math.isfinite(value) and 0.0 < value < TWO_PI):
        raise DomainError(f"0 < {name} < 2pi", value)


def _off_diagonal(angle, lam):
    # -2i e^{i angle/2} lam sin(angle/2)
    return -2j * cmath.exp(0.5j * angle) * lam * math.sin(angle / 2.0)


def _rotation_A(alpha, lam):
    return Isometry(1 + 0j, 0j, _off_diagonal(alpha, lam), cmath.exp(1j * alpha))


def _rotation_B(beta, lam):
    return Isometry(cmath.exp(1j * beta), _off_diagonal(beta, lam), 0j, 1 + 0j)


def knot_generators(alpha: float, lam: LambdaLike) -> KnotGeneratorPair:
    _check_angle("alpha", alpha)
    model = as_parameter(lam)
    return KnotGeneratorPair(_rotation_A(alpha, model.lam), _rotation_B(alpha, model.lam), alpha, model)


def link_generators(alpha: float, beta: float, lam: LambdaLike) -> LinkGeneratorPair:
    _check_angle("alpha", alpha)
    _check_angle("beta", beta)
    model = as_parameter(lam)
    return LinkGeneratorPair(_rotation_A(alpha, model.lam), _rotation_B(beta, model.lam), alpha, beta, model)


def swap_isometry() -> Isometry:
    """C = [[0, 1], [1, 0]], exchanging the fixed circles of A and B."""
    return Isometry(0j, 1 + 0j, 1 + 0j, 0j)


def knot_relation_residual(pair: KnotGeneratorPair, n: int) -> float:
    """Max entry of (AB)^n A - B (AB)^n."""
    word = (pair.A @ pair.B).power(n)
    return (word @ pair.A).distance_to(pair.B @ word)


def link_relation_residual(pair: LinkGeneratorPair, n: int) -> float:
    """Max entry of (AB)^n - (BA)^n."""
    return (pair.A @ pair.B).power(n).distance_to((pair.B @ pair.A).power(n))


def orbifold_relation_residual(pair, m1: int, m2: int = None) -> float:
    """Max entry of A^m1 - I and B^m2 - I; m2 defaults to m1.

    Both vanish when the cone angles are 2pi/m1 and 2pi/m2, whatever lambda.
    """
    if m2 is None:
        m2 = m1
    identity = Isometry.identity()
    return max(pair.A.power(m1).distance_to(identity), pair.B.power(m2).distance_to(identity))


def knot_factor_matrix(lam: float) -> np.ndarray:
    return np.array([[-1.0, lam], [-lam, 1.0]], dtype=complex)


def lemma2_factorization_check(n: int, alpha: float, lam: float) -> float:
    """Residual of (AB)^n A - B (AB)^n = 2 U_2n(L) e^{i(2n+1)(pi+alpha)/2} sin(alpha/2) M,
    where L = lam sin(alpha/2)."""
    pair = knot_generators(alpha, lam)
    word = (pair.A @ pair.B).power(n)
    lhs = (word @ pair.A).matrix - (pair.B @ word).matrix
    s = math.sin(alpha / 2.0)
    scalar = 2.0 * eval_U(2 * n, lam * s) * cmath.exp(0.5j * (2 * n + 1) * (math.pi + alpha)) * s
    return float(np.max(np.abs(lhs - scalar * knot_factor_matrix(lam))))


def _link_commutator(n, alpha, beta, lam):
    pair = link_generators(alpha, beta, lam)
    return (pair.A @ pair.B).power(n).matrix - (pair.B @ pair.A).power(n).matrix


def link_prefactor(n: int, alpha: float, beta: float, lam: float) -> complex:
    """4 U_{n-1}(L) lam e^{i((alpha+beta)/2 + pi) n} sin(alpha/2) sin(beta/2)."""
    argument = link_argument(alpha, beta, lam)
    phase = cmath.exp(1j * ((alpha + beta) / 2.0 + math.pi) * n)
    return 4.0 * eval_U(n - 1, argument) * lam * phase * math.sin(alpha / 2.0) * math.sin(beta / 2.0)


def link_factor_matrix(n: int, lam: float) -> np.ndarray:
    """(-1)^n [[lam, -1], [1, -lam]], the matrix completing the link factorization."""
    return (-1) ** n * np.array([[lam, -1.0], [1.0, -lam]], dtype=complex)


def calibrate_link_factor_matrix(n: int, alpha: float, beta: float, lam: float) -> np.ndarray:
    """Recover the factor matrix numerically as commutator / prefactor.

    Raises:
        ZeroDivisionError: At a vanishing prefactor, where the quotient is undefined.
    """
    scalar = link_prefactor(n, alpha, beta, lam)
    if abs(scalar) < 1e-12:
        raise ZeroDivisionError(f"link prefactor vanishes at n={n}, alpha={alpha}, beta={beta}, lambda={lam}")
    return _link_commutator(n, alpha, beta, lam) / scalar


def lemma3_factorization_check(n: int, alpha: float, beta: float, lam: float, factor=None) -> float:
    """Residual of (AB)^n - (BA)^n = prefactor * M for the recorded factor matrix."""
    if factor is None:
        factor = link_factor_matrix(n, lam)
    lhs = _link_commutator(n, alpha, beta, lam)
    return float(np.max(np.abs(lhs - link_prefactor(n, alpha, beta, lam) * factor)))


def link_prefactor_gap(n: int, alpha: float, beta: float, lam: float) -> float:
    """|sigma_max(commutator) / sigma_max(M) - |prefactor||, independent of the sign of M."""
    lhs = _link_commutator(n, alpha, beta, lam)
    ratio = np.linalg.norm(lhs, 2) / np.linalg.norm(link_factor_matrix(n, lam), 2)
    return float(abs(ratio - abs(link_prefactor(n, alpha, beta, lam))))


def power_AB_closed_form(k: int, n: int, alpha: float, parameters=None) -> Isometry:
    """(AB)^k at the selected lambda, entries in sin(j theta)/sin(theta) and
    phases e^{i eps(m)}, theta = pi/(2n+1)."""
    require_knot_domain(n, alpha, parameters)
    if k < 0:
        raise ValueError(f"power must be non-negative, got {k}")
    if k == 0:
        return Isometry.identity()
    theta = math.pi / (2 * n + 1)
    sin_theta = math.sin(theta)

    def ratio(j):
        return math.sin(j * theta) / sin_theta

    def phase(m):
        return cmath.exp(1j * epsilon_aux(m, n, alpha))

    return Isometry(
        -ratio(2 * k - 1) * phase(2 * k),
        -ratio(2 * k) * phase(2 * k - 1),
        ratio(2 * k) * phase(2 * k + 1),
        ratio(2 * k + 1) * phase(2 * k),
    )


def rotation_angle(m: Isometry, tol: float = None) -> float:
    """Angle in (0, 2pi) of the non-unit eigenvalue relative to the unit one.

    Raises:
        NotRotationError: If no eigenvalue is 1, or both are.
    """
    if tol is None:
        tol = 1e3 * _params.default()["tolerance"]
    eigenvalues = np.linalg.eigvals(m.matrix)
    unit_index = int(np.argmin(np.abs(eigenvalues - 1.0)))
    unit = eigenvalues[unit_index]
    other = eigenvalues[1 - unit_index]
    if abs(unit - 1.0) > tol:
        raise NotRotationError(f"no unit eigenvalue among {eigenvalues}")
    if abs(other - unit) <= tol:
        raise NotRotationError(f"eigenvalues coincide: {eigenvalues}")
    return float(np.angle(other / unit) % TWO_PI)
