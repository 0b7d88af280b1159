# Parameters for numerical tolerances and verification runs
# All tolerances are absolute unless stated otherwise

import os

_parameters = {}

_parameters["tolerance"] = 1e-10
_parameters["normalization_tolerance"] = 1e-10
_parameters["clamp_slack"] = 1e-9
_parameters["lambda_guard"] = 1e-12
_parameters["domain_margin"] = 1e-9
_parameters["orbit_tolerance"] = 1e-9
_parameters["claim_tolerance"] = 1e-8
_parameters["gram_floor"] = 1e-12
_parameters["branch_tolerance"] = 1e-14
_parameters["quadrature_tolerance"] = 1e-9
_parameters["quadrature_error_limit"] = 1e-7

# Cross-route and suite tolerances
_parameters["isometry_tolerance"] = 1e-12
_parameters["factorization_tolerance"] = 1e-9
_parameters["prefactor_tolerance"] = 1e-8
_parameters["relation_tolerance"] = 1e-10
_parameters["length_tolerance"] = 1e-9
_parameters["volume_tolerance"] = 1e-7
_parameters["gram_closed_form_tolerance"] = 1e-9
_parameters["gram_boundary_tolerance"] = 1e-8
_parameters["symmetry_tolerance"] = 1e-10

# Added to every selected lambda, used to check that the suites catch faults
_parameters["lambda_perturbation"] = 0.0

_parameters["max_workers"] = 1
_parameters["seed"] = 20240917


def default():
    return _parameters.copy()


def resolve(parameters=None):
    """Return a full parameter dict, filling missing keys with defaults."""
    merged = default()
    if parameters:
        merged.update(parameters)
    return merged


def worker_count(parameters=None):
    """Number of worker processes, capped by TORUS_CONES_MAX_WORKERS."""
    requested = int(resolve(parameters)["max_workers"])
    cap = os.environ.get("TORUS_CONES_MAX_WORKERS")
    if cap:
        try:
            requested = min(requested, int(cap))
        except ValueError:
            pass
    return max(1, requested)
