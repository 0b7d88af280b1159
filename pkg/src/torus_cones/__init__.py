from . import parameters
from .geometry import (
  KnotCone,
  LinkCone,
  build_knot_polyhedron,
  build_link_polyhedron,
  verify_properness,
  geometric_length,
  schlafli_volume,
  load_polyhedron,
  save_polyhedron,
)

__all__ = [
  "parameters",
  "KnotCone",
  "LinkCone",
  "build_knot_polyhedron",
  "build_link_polyhedron",
  "verify_properness",
  "geometric_length",
  "schlafli_volume",
  "load_polyhedron",
  "save_polyhedron",
]
