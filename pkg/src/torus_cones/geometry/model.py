# Copyright(C) 2024 Torus Cones Developers
# Licensed under the MIT License

"""The projective model S^3_lambda.

Points are pairs (z1, z2) of complex numbers, normalized with respect to the
Hermitian form with matrix [[1, lambda], [lambda, 1]]. Matrices act on row
vectors from the right, P -> P.M, so composite words read left to right.
"""

from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from torus_cones import parameters as _params
from torus_cones.errors import ModelParameterError, NormalizationError


@dataclass(frozen=True)
class ModelParameter:
    """The metric parameter lambda of S^3_lambda.

    A strict parameter satisfies |lambda| < 1 - guard, where the form is
    positive definite. guard defaults to the lambda_guard parameter.
    Non-strict parameters exist only for forced constructions outside a
    sphericity domain.
    """

    lam: float
    strict: bool = True
    guard: Optional[float] = field(default=None, compare=False)

    def __post_init__(self):
        if not np.isfinite(self.lam):
            raise ModelParameterError(f"lambda must be finite, got {self.lam}")
        if self.guard is None:
            object.__setattr__(self, "guard", _params.default()["lambda_guard"])
        if self.strict and abs(self.lam) >= 1.0 - self.guard:
            raise ModelParameterError(
                f"lambda must satisfy |lambda| < 1 - {self.guard:g}, got {self.lam:.17g}"
            )

    @property
    def definite(self) -> bool:
        return abs(self.lam) < 1.0

    @property
    def form(self) -> np.ndarray:
        return np.array([[1.0, self.lam], [self.lam, 1.0]], dtype=complex)


LambdaLike = Union[float, ModelParameter]


def as_parameter(lam: LambdaLike, parameters=None) -> ModelParameter:
    if isinstance(lam, ModelParameter):
        return lam
    guard = None if parameters is None else _params.resolve(parameters)["lambda_guard"]
    return ModelParameter(float(lam), guard=guard)


@dataclass(frozen=True)
class Isometry:
    m11: complex
    m12: complex
    m21: complex
    m22: complex

    @classmethod
    def from_matrix(cls, matrix) -> "Isometry":
        m = np.asarray(matrix, dtype=complex)
        return cls(complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0]), complex(m[1, 1]))

    @classmethod
    def identity(cls) -> "Isometry":
        return cls(1 + 0j, 0j, 0j, 1 + 0j)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.m11, self.m12], [self.m21, self.m22]], dtype=complex)

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return Isometry(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def power(self, k: int) -> "Isometry":
        """k-th power by repeated multiplication, k >= 0."""
        if k < 0:
            raise ValueError(f"power must be non-negative, got {k}")
        result = Isometry.identity()
        for _ in range(k):
            result = result @ self
        return result

    def inverse(self) -> "Isometry":
        det = self.m11 * self.m22 - self.m12 * self.m21
        return Isometry(self.m22 / det, -self.m12 / det, -self.m21 / det, self.m11 / det)

    def distance_to(self, other: "Isometry") -> float:
        """Max entry magnitude of the difference."""
        return float(np.max(np.abs(self.matrix - other.matrix)))


@dataclass(frozen=True)
class ModelPoint:
    z1: complex
    z2: complex

    def __matmul__(self, m: Isometry) -> "ModelPoint":
        return ModelPoint(self.z1 * m.m11 + self.z2 * m.m21, self.z1 * m.m12 + self.z2 * m.m22)

    def scaled(self, factor: complex) -> "ModelPoint":
        return ModelPoint(self.z1 * factor, self.z2 * factor)

    @property
    def real_row(self) -> np.ndarray:
        return np.array([self.z1.real, self.z1.imag, self.z2.real, self.z2.imag])

    def distance_to(self, other: "ModelPoint") -> float:
        """Max coordinate difference in C^2, for tolerance checks."""
        return float(max(abs(self.z1 - other.z1), abs(self.z2 - other.z2)))


@dataclass(frozen=True)
class EmbeddedPoint:
    """A point of the round unit sphere in C^2 = R^4."""

    xi1: complex
    xi2: complex

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.xi1.real, self.xi1.imag, self.xi2.real, self.xi2.imag])

    def angle_to(self, other: "EmbeddedPoint") -> float:
        """Round-sphere angle between two unit vectors."""
        c = float(np.dot(self.vector, other.vector))
        return float(np.arccos(np.clip(c, -1.0, 1.0)))


@dataclass(frozen=True)
class IsometryCheck:
    ok: bool
    residual: float

    def __bool__(self):
        return self.ok


def hermitian_product(p: ModelPoint, q: ModelPoint, lam: LambdaLike) -> complex:
    """P H conj(Q)^T."""
    lam = as_parameter(lam).lam
    w1, w2 = q.z1.conjugate(), q.z2.conjugate()
    return p.z1 * w1 + p.z2 * w2 + lam * (p.z1 * w2 + p.z2 * w1)


def inner_product(p: ModelPoint, q: ModelPoint, lam: LambdaLike) -> float:
    return float(hermitian_product(p, q, lam).real)


def lambda_norm(p: ModelPoint, lam: LambdaLike) -> float:
    """Squared norm |z1|^2 + |z2|^2 + 2 lambda Re(z1 conj z2)."""
    return inner_product(p, p, lam)


def distance(p: ModelPoint, q: ModelPoint, lam: LambdaLike, parameters=None) -> float:
    """Spherical distance in [0, pi].

    Raises:
        NormalizationError: If either point is off the unit sphere, or the
            cosine leaves [-1, 1] by more than the clamp slack.
    """
    parameters = _params.resolve(parameters)
    lam = as_parameter(lam)
    tol = parameters["normalization_tolerance"]
    for point in (p, q):
        deviation = abs(lambda_norm(point, lam) - 1.0)
        if deviation > tol:
            raise NormalizationError(f"point {point} has norm deviation {deviation:.3e}")
    c = inner_product(p, q, lam)
    if abs(c) > 1.0 + parameters["clamp_slack"]:
        raise NormalizationError(f"cosine {c:.17g} outside [-1, 1]")
    return float(np.arccos(np.clip(c, -1.0, 1.0)))


def is_isometry(m: Isometry, lam: LambdaLike, tol: float = None) -> IsometryCheck:
    """Test M H conj(M)^T = H by max-entry residual."""
    if tol is None:
        tol = _params.default()["tolerance"]
    h = as_parameter(lam).form
    mat = m.matrix
    residual = float(np.max(np.abs(mat @ h @ mat.conj().T - h)))
    return IsometryCheck(residual <= tol, residual)


def embed(p: ModelPoint, lam: LambdaLike) -> EmbeddedPoint:
    """Map into the round sphere; preserves inner products.

    Raises:
        ModelParameterError: If the form is not positive definite.
    """
    lam = as_parameter(lam)
    if not lam.definite:
        raise ModelParameterError(f"cannot embed with indefinite form, lambda = {lam.lam:.17g}")
    a = np.sqrt((1.0 + lam.lam) / 2.0)
    b = np.sqrt((1.0 - lam.lam) / 2.0)
    return EmbeddedPoint(complex(a * (p.z1 + p.z2)), complex(b * (p.z1 - p.z2)))


def gram_det(a: ModelPoint, b: ModelPoint, c: ModelPoint, d: ModelPoint) -> float:
    """Determinant of the real coordinate rows (Re z1, Im z1, Re z2, Im z2)."""
    return float(np.linalg.det(np.vstack([a.real_row, b.real_row, c.real_row, d.real_row])))


def normalize(p: ModelPoint, lam: LambdaLike) -> ModelPoint:
    norm = lambda_norm(p, lam)
    if not norm > 0.0:
        raise NormalizationError(f"cannot normalize {p}: norm {norm:.3e}")
    return p.scaled(1.0 / np.sqrt(norm))
