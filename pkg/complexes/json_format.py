#!/usr/bin/env python3
"""
Complex JSON Format
Reading and writing {"vertices": [...], "maximal_faces": [[...], ...]}
"""

import json
from pathlib import Path
from typing import Any, Dict, Union

from common.errors import ComplexError
from complexes.complex import SimplicialComplex


def complex_from_dict(data: Dict[str, Any]) -> SimplicialComplex:
    try:
        vertices = [str(v) for v in data["vertices"]]
        faces = [[str(v) for v in face] for face in data["maximal_faces"]]
    except (KeyError, TypeError) as e:
        raise ComplexError(
            f"Malformed complex JSON ({e}). Please provide 'vertices' and 'maximal_faces'."
        )
    return SimplicialComplex.from_faces(vertices, faces)


def complex_to_dict(K: SimplicialComplex) -> Dict[str, Any]:
    return K.to_json()


def load_complex(path: Union[str, Path]) -> SimplicialComplex:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as e:
        raise ComplexError(f"Cannot read complex from {path}: {e}")
    return complex_from_dict(data)


def dump_complex(K: SimplicialComplex, path: Union[str, Path]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(complex_to_dict(K), handle, indent=2)
