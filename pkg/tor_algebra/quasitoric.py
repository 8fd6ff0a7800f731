#!/usr/bin/env python3
"""
Quasitoric Presentation
Graded pieces of k[K]/(θ_1, ..., θ_n) for a characteristic matrix, by exact elimination per degree
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Any, Dict, List, Sequence, Tuple

import sympy

from common.algebra.elimination import EchelonBasis
from common.algebra.fields import RATIONALS, FieldSpec
from common.errors import PolytopeError
from complexes.complex import SimplicialComplex, bits, require_sphere

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]


@dataclass
class QuasitoricRing:
    """Graded dimensions (polynomial degree d sits in cohomological degree 2d) and square report"""

    ground: Tuple[str, ...]
    field: FieldSpec
    linear_forms: List[Dict[str, int]]
    dimensions: List[int]
    squares: Dict[str, bool] = field(default_factory=dict)

    @property
    def vanishing_squares(self) -> List[str]:
        return [v for v, vanishes in self.squares.items() if vanishes]

    def to_json(self) -> Dict[str, Any]:
        return {
            "field": self.field.name,
            "linear_forms": self.linear_forms,
            "dimensions": {str(2 * d): dim for d, dim in enumerate(self.dimensions)},
            "squares": {v: ("zero" if vanishes else "nonzero") for v, vanishes in self.squares.items()},
        }


def check_characteristic(K: SimplicialComplex, matrix: Sequence[Sequence[int]]) -> None:
    """Rows of every maximal face form a unimodular n × n matrix"""
    require_sphere(K)
    n = K.dimension + 1
    if len(matrix) != K.m or any(len(row) != n for row in matrix):
        raise PolytopeError(
            f"Characteristic matrix must be {K.m} × {n}. Please pass one row of length {n} per vertex."
        )
    for face in sorted(K.maximal_faces):
        block = sympy.Matrix([list(matrix[v]) for v in bits(face)])
        if abs(block.det()) != 1:
            raise PolytopeError(
                f"Rows of face {list(K.labels(face))} have determinant {block.det()}. "
                f"Please pass a characteristic matrix with unimodular rows at every vertex."
            )


def _face_monomials(K: SimplicialComplex, degree: int) -> List[Exponents]:
    """Exponent vectors of degree d whose support is a face"""
    faces = K.faces
    found = []
    for chosen in combinations_with_replacement(range(K.m), degree):
        support = 0
        for v in chosen:
            support |= 1 << v
        if support in faces:
            exponents = [0] * K.m
            for v in chosen:
                exponents[v] += 1
            found.append(tuple(exponents))
    return found


def _support(exponents: Exponents) -> int:
    mask = 0
    for v, e in enumerate(exponents):
        if e:
            mask |= 1 << v
    return mask


def quasitoric_presentation(
    K: SimplicialComplex, matrix: Sequence[Sequence[int]], fieldspec: FieldSpec = RATIONALS
) -> QuasitoricRing:
    """Dimensions of k[K]/J_Λ by degree, θ_j = Σ_i Λ_ij v_i, and which v_i² vanish"""
    check_characteristic(K, matrix)
    n = K.dimension + 1
    faces = K.faces
    top = max(n, 2)
    dimensions = []
    squares: Dict[str, bool] = {}
    for degree in range(top + 1):
        monomials = _face_monomials(K, degree)
        index = {mono: k for k, mono in enumerate(monomials)}
        ideal = EchelonBasis(fieldspec)
        if degree > 0:
            for lower in _face_monomials(K, degree - 1):
                for j in range(n):
                    vector: Dict[int, Any] = {}
                    for v in range(K.m):
                        coefficient = matrix[v][j]
                        if not coefficient:
                            continue
                        raised = list(lower)
                        raised[v] += 1
                        raised = tuple(raised)
                        if _support(raised) not in faces:
                            continue
                        key = index[raised]
                        vector[key] = fieldspec.add(vector.get(key, fieldspec.zero()), fieldspec.coerce(coefficient))
                    ideal.add(vector)
        dimensions.append(len(monomials) - ideal.rank)
        if degree == 2:
            for v in range(K.m):
                square = tuple(2 if w == v else 0 for w in range(K.m))
                squares[K.ground[v]] = ideal.contains({index[square]: fieldspec.one()})
    forms = [{K.ground[v]: int(matrix[v][j]) for v in range(K.m) if matrix[v][j]} for j in range(n)]
    logger.info(f"Quasitoric ring over {fieldspec.name}: graded dimensions {dimensions}")
    return QuasitoricRing(K.ground, fieldspec, forms, dimensions, squares)
