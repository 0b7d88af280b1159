from .model import (
  ModelParameter,
  ModelPoint,
  Isometry,
  EmbeddedPoint,
  hermitian_product,
  inner_product,
  distance,
  is_isometry,
  embed,
  gram_det,
  normalize,
)
from .chebyshev import ChebyshevKind, eval_T, eval_U, roots_U
from .cones import (
  KnotCone,
  LinkCone,
  SphericalStructure,
  knot_sphericity_interval,
  knot_lambda,
  knot_length,
  knot_volume,
  link_sphericity_contains,
  link_lambda,
  link_length,
  link_volume,
  epsilon_aux,
)
from .holonomy import (
  knot_generators,
  link_generators,
  swap_isometry,
  knot_relation_residual,
  link_relation_residual,
  lemma2_factorization_check,
  lemma3_factorization_check,
  power_AB_closed_form,
  rotation_angle,
)
from .polyhedron import (
  FundamentalPolyhedron,
  Tetrahedron,
  ClaimReport,
  build_knot_polyhedron,
  build_link_polyhedron,
  geodesic_midpoint,
  dihedral_angle,
  verify_properness,
  gram_delta_closed_form,
  geometric_length,
  schlafli_volume,
)
from .export import load_polyhedron, save_polyhedron
