# Copyright(C) 2024 Torus Cones Developers
# Licensed under the MIT License

"""JSON layout of fundamental polyhedra.

The field layout is described by schemas/polyhedron.json. Finite reals are
written with 17 significant digits ("%.17g"), so reading a file back gives
bit-identical vertices.
"""

import json
import math
import re
from importlib import resources
from pathlib import Path

from torus_cones.errors import ConeManifoldError
from torus_cones.geometry.model import ModelPoint, gram_det
from torus_cones.geometry.polyhedron import (
    CYCLE_EDGE,
    POLE_EDGE,
    FundamentalPolyhedron,
    dihedral_angle,
)
from torus_cones.logging import info


class PolyhedronFormatError(ConeManifoldError, ValueError):
    pass


def load_schema() -> dict:
    text = resources.files("torus_cones.geometry.schemas").joinpath("polyhedron.json").read_text()
    return json.loads(text)


def _complex(value: complex) -> dict:
    value = complex(value)
    return {"re": value.real, "im": value.imag}


def _point(index, point: ModelPoint) -> dict:
    return {"index": index, "z1": _complex(point.z1), "z2": _complex(point.z2)}


def polyhedron_to_dict(poly: FundamentalPolyhedron, parameters=None) -> dict:
    schema = load_schema()
    lam = poly.model
    edges, tetrahedra = [], []
    for tetrahedron in poly.tetrahedra():
        i = tetrahedron.index
        j = poly.index(i + 1)
        try:
            psi = dihedral_angle(tetrahedron, CYCLE_EDGE, lam, parameters)
            phi = dihedral_angle(tetrahedron, POLE_EDGE, lam, parameters)
        except ConeManifoldError:
            psi = phi = None
        edges.append({"from": i, "to": j, "dihedral_angle": psi})
        tetrahedra.append(
            {
                "index": i,
                "vertices": ["S", "N", f"P{i}", f"P{j}"],
                "pole_dihedral_angle": phi,
                "gram_det": gram_det(*tetrahedron.points),
            }
        )
    return {
        "format": schema["format"],
        "version": schema["version"],
        "kind": poly.kind,
        "n": poly.n,
        "cone_angles": list(poly.cone_angles),
        "lambda": poly.lam,
        "verified": poly.verified,
        "vertices": [_point(i, p) for i, p in enumerate(poly.vertices, start=1)],
        "north": _point("N", poly.north),
        "south": _point("S", poly.south),
        "edges": edges,
        "tetrahedra": tetrahedra,
    }


_REAL = re.compile(r'"@real:([^"]+)"')


def _tag_reals(value):
    if isinstance(value, dict):
        return {key: _tag_reals(item) for key, item in value.items()}
    if isinstance(value, list):
        return [_tag_reals(item) for item in value]
    if isinstance(value, float) and math.isfinite(value):
        return "@real:%.17g" % value
    return value


def polyhedron_to_json(poly: FundamentalPolyhedron, parameters=None) -> str:
    text = json.dumps(_tag_reals(polyhedron_to_dict(poly, parameters)), indent=4)
    return _REAL.sub(r"\1", text)


def _require(record: dict, keys, where: str):
    missing = [key for key in keys if key not in record]
    if missing:
        raise PolyhedronFormatError(f"{where}: missing fields {missing}")


def _read_point(record: dict, schema: dict, where: str) -> ModelPoint:
    _require(record, schema["point"], where)
    values = []
    for name in ("z1", "z2"):
        _require(record[name], schema["complex"], f"{where}.{name}")
        values.append(complex(float(record[name]["re"]), float(record[name]["im"])))
    return ModelPoint(*values)


def polyhedron_from_dict(data: dict) -> FundamentalPolyhedron:
    """Rebuild a polyhedron; generators follow from its angles and lambda."""
    schema = load_schema()
    _require(data, schema["required"], "polyhedron")
    if data["format"] != schema["format"] or data["version"] != schema["version"]:
        raise PolyhedronFormatError(f"unsupported format {data['format']!r} version {data['version']!r}")
    if data["kind"] not in ("knot", "link"):
        raise PolyhedronFormatError(f"unknown kind {data['kind']!r}")
    vertices = tuple(
        _read_point(record, schema, f"vertices[{i}]") for i, record in enumerate(data["vertices"])
    )
    return FundamentalPolyhedron(
        kind=data["kind"],
        n=int(data["n"]),
        cone_angles=tuple(float(a) for a in data["cone_angles"]),
        lam=float(data["lambda"]),
        vertices=vertices,
        north=_read_point(data["north"], schema, "north"),
        south=_read_point(data["south"], schema, "south"),
        verified=bool(data["verified"]),
    )


def save_polyhedron(poly: FundamentalPolyhedron, path, parameters=None) -> Path:
    path = Path(path)
    with open(path, "w") as json_file:
        json_file.write(polyhedron_to_json(poly, parameters))
    info(f"Wrote {poly.kind} polyhedron with {poly.size} vertices to {path}")
    return path


def load_polyhedron(path) -> FundamentalPolyhedron:
    with open(path, "r") as json_file:
        try:
            data = json.load(json_file)
        except json.JSONDecodeError as error:
            raise PolyhedronFormatError(f"{path}: {error}") from None
    return polyhedron_from_dict(data)
