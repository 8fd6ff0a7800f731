#!/usr/bin/env python3
"""
Reduced Simplicial Cohomology
Coboundary matrices of full subcomplexes, ranks and representative cocycles
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from common.algebra.elimination import EchelonBasis, integer_rank, nullspace
from common.algebra.fields import FieldSpec, Scalar
from complexes.complex import SimplicialComplex, VertexSpec, bits

logger = logging.getLogger(__name__)


@dataclass
class CohomologyGroup:
    """H̃^degree with its rank and representative cocycles"""

    degree: int
    rank: int
    cocycles: List[Dict[Tuple[str, ...], Scalar]] = field(default_factory=list)


def _faces_within(K: SimplicialComplex, support: int) -> Dict[int, List[int]]:
    grouped: Dict[int, List[int]] = {}
    for face in K.faces:
        if face & ~support == 0:
            grouped.setdefault(face.bit_count(), []).append(face)
    for group in grouped.values():
        group.sort()
    return grouped


def _sign(face: int, vertex: int) -> int:
    """(-1)^(position of vertex inside face)"""
    return -1 if (face & ((1 << vertex) - 1)).bit_count() % 2 else 1


def coboundary_rows(lower: List[int], upper: List[int]) -> List[List[int]]:
    """Integer matrix of δ from faces of size s (columns) to size s + 1 (rows)"""
    column = {face: index for index, face in enumerate(lower)}
    rows = []
    for tau in upper:
        row = [0] * len(lower)
        for v in bits(tau):
            row[column[tau & ~(1 << v)]] = _sign(tau, v)
        rows.append(row)
    return rows


def cohomology_ranks(K: SimplicialComplex, support: int, field: FieldSpec) -> Dict[int, int]:
    """Nonzero ranks of H̃^p(K_support), keyed by p (augmented at p = -1)"""
    grouped = _faces_within(K, support)
    top = max(grouped)
    ranks = {}
    for size in range(top + 1):
        lower, upper = grouped.get(size, []), grouped.get(size + 1, [])
        ranks[size] = integer_rank(coboundary_rows(lower, upper), field) if lower and upper else 0
    result = {}
    for size in range(top + 1):
        dimension = len(grouped.get(size, []))
        rank = dimension - ranks[size] - (ranks[size - 1] if size > 0 else 0)
        if rank:
            result[size - 1] = rank
    return result


def _column_vectors(lower: List[int], upper: List[int], field: FieldSpec) -> List[Dict[int, Scalar]]:
    row_index = {face: index for index, face in enumerate(upper)}
    columns: List[Dict[int, Scalar]] = [{} for _ in lower]
    position = {face: index for index, face in enumerate(lower)}
    for tau in upper:
        for v in bits(tau):
            sigma = tau & ~(1 << v)
            if sigma in position:
                columns[position[sigma]][row_index[tau]] = field.coerce(_sign(tau, v))
    return columns


def reduced_cohomology(
    K: SimplicialComplex, field: FieldSpec, vertices: Optional[VertexSpec] = None
) -> List[CohomologyGroup]:
    """Ranks and representative cocycles of H̃^p(K_I) for -1 <= p <= dim"""
    support = K.full_mask if vertices is None else K.mask(vertices)
    grouped = _faces_within(K, support)
    top = max(grouped)
    groups = []
    for size in range(top + 1):
        current = grouped.get(size, [])
        upper = grouped.get(size + 1, [])
        lower = grouped.get(size - 1, []) if size > 0 else []
        kernel = nullspace(_column_vectors(current, upper, field), field) if upper else [
            {i: field.one()} for i in range(len(current))
        ]
        image = EchelonBasis(field)
        for column in _column_vectors(lower, current, field):
            image.add(column)
        cocycles = []
        for vector in kernel:
            if image.add(vector) is None:
                cocycles.append({K.labels(current[i]): c for i, c in sorted(vector.items())})
        groups.append(CohomologyGroup(size - 1, len(cocycles), cocycles))
    return groups
