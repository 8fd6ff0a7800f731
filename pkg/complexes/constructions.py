#!/usr/bin/env python3
"""
Complex Constructions
Joins, multiwedges, stellar subdivisions, join decomposition and the face retraction test
"""

import logging
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

import networkx as nx

from common.errors import ComplexError
from complexes.complex import (SimplicialComplex, VertexSpec, bits,
                               complex_from_nonface_masks, full_subcomplex,
                               link, star_vertices)

logger = logging.getLogger(__name__)


def relabel(K: SimplicialComplex, mapping: Mapping[str, str]) -> SimplicialComplex:
    """Rename vertices; the ground order is kept"""
    ground = [str(mapping.get(v, v)) for v in K.ground]
    return SimplicialComplex(ground, K.maximal_faces)


def permute(K: SimplicialComplex, order: Sequence[int]) -> SimplicialComplex:
    """Reorder the ground: new position i holds old position order[i]"""
    new_position = {old: new for new, old in enumerate(order)}
    faces = []
    for face in K.maximal_faces:
        mask = 0
        for v in bits(face):
            mask |= 1 << new_position[v]
        faces.append(mask)
    return SimplicialComplex([K.ground[i] for i in order], faces)


def join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """K1 * K2 on the concatenated ground"""
    clash = set(K1.ground) & set(K2.ground)
    if clash:
        raise ComplexError(f"Label clash {sorted(clash)} in join. Please relabel one factor.")
    shift = K1.m
    faces = [f1 | (f2 << shift) for f1 in K1.maximal_faces for f2 in K2.maximal_faces]
    return SimplicialComplex(K1.ground + K2.ground, faces)


def join_all(complexes: Iterable[SimplicialComplex]) -> SimplicialComplex:
    result = SimplicialComplex([], [0])
    for K in complexes:
        result = join(result, K)
    return result


def cone(K: SimplicialComplex, apex: str = "c") -> SimplicialComplex:
    return join(K, SimplicialComplex([apex], [1]))


def multiwedge(K: SimplicialComplex, J: Sequence[int]) -> SimplicialComplex:
    """The J-construction K(J): each minimal non-face I becomes I(J)"""
    if len(J) != K.m:
        raise ComplexError(f"Multiwedge vector has {len(J)} entries for {K.m} vertices")
    if any(j < 1 for j in J):
        raise ComplexError("Multiwedge entries must be positive")
    if all(j == 1 for j in J):
        return K
    labels = [f"{v}{t}" for v, j in zip(K.ground, J) for t in range(1, j + 1)]
    if len(set(labels)) != len(labels):
        labels = [f"{v}.{t}" for v, j in zip(K.ground, J) for t in range(1, j + 1)]
    offsets = []
    total = 0
    for j in J:
        offsets.append(total)
        total += j
    blocks = [((1 << j) - 1) << offset for j, offset in zip(J, offsets)]
    nonfaces = []
    for mask in K.minimal_nonfaces:
        inflated = 0
        for v in bits(mask):
            inflated |= blocks[v]
        nonfaces.append(inflated)
    logger.debug(f"Multiwedge {list(J)}: {K.m} -> {total} vertices")
    return complex_from_nonface_masks(labels, nonfaces)


def stellar_subdivision(K: SimplicialComplex, face: VertexSpec, label: Optional[str] = None) -> SimplicialComplex:
    """Replace the star of σ by the cone from a new vertex over ∂σ * link(σ)"""
    sigma = K.mask(face)
    if sigma == 0 or not K.is_face(sigma):
        raise ComplexError(f"{list(K.labels(sigma))} is not a nonempty face")
    label = label or f"w{K.m + 1}"
    if label in K.ground:
        raise ComplexError(f"Label '{label}' already used")
    w = 1 << K.m
    faces = []
    for f in K.maximal_faces:
        if sigma & ~f:
            faces.append(f)
        else:
            faces.extend((f & ~(1 << v)) | w for v in bits(sigma))
    used = 0
    for f in faces:
        used |= f
    ground = list(K.ground) + [label]
    kept = [i for i in range(K.m + 1) if used >> i & 1]
    if len(kept) == K.m + 1:
        return SimplicialComplex(ground, faces)
    reindex = {old: new for new, old in enumerate(kept)}
    compact = []
    for f in faces:
        mask = 0
        for v in bits(f):
            mask |= 1 << reindex[v]
        compact.append(mask)
    return SimplicialComplex([ground[i] for i in kept], compact)


def join_decompose(K: SimplicialComplex) -> List[SimplicialComplex]:
    """Join-irreducible factors: vertices linked by chains of minimal non-faces"""
    graph = nx.Graph()
    graph.add_nodes_from(range(K.m))
    for mask in K.minimal_nonfaces:
        members = list(bits(mask))
        graph.add_edges_from(zip(members, members[1:]))
    classes = sorted((sorted(component) for component in nx.connected_components(graph)), key=min)
    factors = []
    for component in classes:
        support = 0
        for v in component:
            support |= 1 << v
        factors.append(full_subcomplex(K, support))
    return factors


def face_retraction_test(K: SimplicialComplex, face: VertexSpec) -> bool:
    """Link of σ equals the full subcomplex on the link's vertex support"""
    sigma = K.mask(face)
    return link(K, sigma) == full_subcomplex(K, star_vertices(K, sigma))


def retraction_report(K: SimplicialComplex, max_size: Optional[int] = None) -> Dict[str, List[List[str]]]:
    """Faces passing and failing the retraction test (nonempty faces up to max_size)"""
    passed: List[List[str]] = []
    failed: List[List[str]] = []
    for size, faces in K.faces_by_size.items():
        if size == 0 or (max_size is not None and size > max_size):
            continue
        for face in faces:
            target = passed if face_retraction_test(K, face) else failed
            target.append(list(K.labels(face)))
    return {"passed": passed, "failed": failed}
