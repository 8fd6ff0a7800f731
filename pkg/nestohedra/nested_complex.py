#!/usr/bin/env python3
"""
Nested Set Complexes
Nerve complexes of nestohedra, boundary terms and the restriction identifications
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence

from common.errors import BuildingSetError
from complexes.complex import SimplicialComplex, full_subcomplex, point_nerve
from complexes.constructions import join_all
from nestohedra.building_set import (BuildingSet, components, contraction, format_set,
                                     require_valid, restriction)

logger = logging.getLogger(__name__)


def _compatible(B: BuildingSet, chosen: List[int], candidate: int) -> bool:
    """Adding candidate keeps the family nested and union-free"""
    disjoint = []
    for S in chosen:
        overlap = S & candidate
        if overlap and overlap != S and overlap != candidate:
            return False
        if not overlap:
            disjoint.append(S)
    for size in range(1, len(disjoint) + 1):
        for group in combinations(disjoint, size):
            union = candidate
            separate = True
            for S in group:
                if union & S:
                    separate = False
                    break
                union |= S
            if separate and union in B.sets:
                return False
    return True


def nested_set_complex(B: BuildingSet) -> SimplicialComplex:
    """N_B: vertices B ∖ {[n+1]}, faces the nested families"""
    require_valid(B, connected=True)
    vertices = [S for S in B.ordered if S != B.full_mask]
    if not vertices:
        return point_nerve()
    faces: List[int] = []
    stack = [([], 0, 0)]
    while stack:
        chosen, face, start = stack.pop()
        extended = False
        for index in range(len(vertices)):
            if face >> index & 1:
                continue
            if _compatible(B, chosen, vertices[index]):
                extended = True
                if index >= start:
                    stack.append((chosen + [vertices[index]], face | (1 << index), index + 1))
        if not extended:
            faces.append(face)
    labels = [B.label(S) for S in vertices]
    logger.debug(f"Nested set complex: {len(vertices)} vertices, {len(faces)} facets")
    return SimplicialComplex(labels, faces)


def nestohedron_nerve(B: BuildingSet) -> SimplicialComplex:
    """Nerve of P_B; a disconnected B gives the join over its components"""
    require_valid(B)
    if B.is_connected():
        return nested_set_complex(B)
    return join_all(nested_set_complex(restriction(B, S)) for S in components(B))


@dataclass
class BoundaryTerm:
    """One facet P_{B|S} × P_{B/S} of a nestohedron"""

    element: int
    restricted: BuildingSet
    contracted: BuildingSet

    def to_json(self, B: BuildingSet) -> Dict[str, Any]:
        return {
            "S": list(B.elements(self.element)),
            "restriction": self.restricted.to_json(),
            "contraction": self.contracted.to_json(),
        }


def boundary_terms(B: BuildingSet) -> List[BoundaryTerm]:
    """(S, B|_S, B/S) for every S ∈ B ∖ {[n+1]}"""
    require_valid(B, connected=True)
    return [
        BoundaryTerm(S, restriction(B, S), contraction(B, S))
        for S in B.ordered
        if S != B.full_mask
    ]


def restriction_vertices(B: BuildingSet, S: Any) -> List[str]:
    """Vertices of N_B lying in B|_S, the top element S excluded"""
    support = B.mask(S)
    return [B.label(T) for T in B.ordered if T & ~support == 0 and T != support]


def cube_facet_vertices(n: int) -> List[str]:
    """Vertices of N_{B(P,n)} matched with facets F_1..F_2n of the cube: F_a = {1..a}, F_{n+b} = {b+1}"""
    if n < 2:
        raise BuildingSetError("The cube identification needs n ≥ 2")
    lower = [format_set(range(1, a + 1)) for a in range(1, n + 1)]
    upper = [format_set([b + 1]) for b in range(1, n + 1)]
    return lower + upper


def q_copy_vertices(n: int, r: int) -> List[str]:
    """Vertices {1..r−1, n, n+1..n+r−1, 2n} of K_{Q^n} carrying a copy of (K_{Q^r})_[2r]"""
    if not 2 <= r <= n:
        raise BuildingSetError(f"Need 2 ≤ r ≤ n, got r={r}, n={n}")
    return [str(v) for v in list(range(1, r)) + [n] + list(range(n + 1, n + r)) + [2 * n]]


def contraction_intersection_report(
    B: BuildingSet, S: Sequence[int], members: Optional[Sequence[Sequence[int]]] = None
) -> Dict[str, Any]:
    """Compare the full subcomplex of N_B on members of (B/S) ∩ B with the same vertices inside N_{B/S}"""
    contracted = contraction(B, S)
    shared = sorted(
        (contracted.elements(T) for T in contracted.sets if B.mask(contracted.elements(T)) in B.sets),
        key=lambda e: (len(e), e),
    )
    if members is not None:
        chosen = [tuple(sorted(e)) for e in members]
        outside = [e for e in chosen if e not in shared]
        if outside:
            raise BuildingSetError(f"{outside} do not lie in both B and B/S")
        shared = chosen
    labels = [
        format_set(e) for e in shared
        if B.mask(e) != B.full_mask and contracted.mask(e) != contracted.full_mask
    ]
    inside_whole = full_subcomplex(nested_set_complex(B), labels)
    inside_contracted = full_subcomplex(nestohedron_nerve(contracted), labels)
    return {
        "S": list(S),
        "shared": [list(e) for e in shared],
        "in_nested_complex": inside_whole.to_json(),
        "in_contraction": inside_contracted.to_json(),
        "dimension_in_nested_complex": inside_whole.dimension,
        "dimension_in_contraction": inside_contracted.dimension,
    }

