# Copyright(C) 2024 Torus Cones Developers
# Licensed under the MIT License


class ConeManifoldError(Exception):
    """Base class for all errors raised by torus-cones."""


class ModelParameterError(ConeManifoldError, ValueError):
    """The metric parameter lambda is outside the positive definite range."""


class NormalizationError(ConeManifoldError, ValueError):
    """A point is not normalized, or cannot be."""


class DomainError(ConeManifoldError, ValueError):
    """Cone parameters lie outside a sphericity domain.

    Attributes:
        inequality (str): The violated inequality, written with pi-forms.
        value (float): The offending value of the constrained expression.
    """

    def __init__(self, inequality, value=None):
        self.inequality = inequality
        self.value = value
        message = f"violates {inequality}"
        if value is not None:
            message += f" (got {value:.17g})"
        super().__init__(message)


class NotRotationError(ConeManifoldError):
    pass


class AntipodalError(ConeManifoldError):
    pass


class OrbitConsistencyError(ConeManifoldError):
    """Vertex orbit formulas disagree, or an axis vertex misses its circle."""


class DegenerateTetrahedronError(ConeManifoldError):
    pass


class BranchAmbiguityError(ConeManifoldError):
    pass


class QuadratureError(ConeManifoldError):
    pass


class IndexRangeError(ConeManifoldError, IndexError):
    pass
