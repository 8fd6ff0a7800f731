#!/usr/bin/env python3
"""
Simplicial Complexes
Labeled simplicial complexes stored as bitset maximal faces
"""

import logging
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple, Union

import networkx as nx

from common.errors import ComplexError

logger = logging.getLogger(__name__)

VertexSpec = Union[int, Iterable[str]]


def bits(mask: int) -> Iterator[int]:
    """Positions of the set bits of mask, ascending"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximalize(masks: Iterable[int]) -> FrozenSet[int]:
    """Inclusion-maximal members of a family of bitsets"""
    kept: List[int] = []
    for mask in sorted(set(masks), key=lambda x: (-x.bit_count(), x)):
        if not any(mask & ~other == 0 for other in kept):
            kept.append(mask)
    return frozenset(kept)


def compress(mask: int, support: int) -> int:
    """Re-index the bits of mask lying in support to consecutive positions"""
    result = 0
    for index, position in enumerate(bits(support)):
        if mask >> position & 1:
            result |= 1 << index
    return result


def expand(mask: int, support: int) -> int:
    """Inverse of compress: spread consecutive bits onto the positions of support"""
    result = 0
    for index, position in enumerate(bits(support)):
        if mask >> index & 1:
            result |= 1 << position
    return result


class SimplicialComplex:
    """Immutable simplicial complex on an ordered list of string labels.

    Faces are bitsets over ground positions; only maximal faces are stored.
    Every ground vertex must lie in some face. The complex on an empty ground
    is {∅}, the nerve of a point.
    """

    def __init__(self, ground: Sequence[str], maximal_faces: Iterable[int]):
        self.ground: Tuple[str, ...] = tuple(str(v) for v in ground)
        if len(set(self.ground)) != len(self.ground):
            raise ComplexError(f"Duplicate vertex labels in {list(self.ground)}")
        self._index: Dict[str, int] = {v: i for i, v in enumerate(self.ground)}
        full = (1 << len(self.ground)) - 1
        faces = maximalize(maximal_faces) or frozenset({0})
        for face in faces:
            if face & ~full:
                raise ComplexError(f"Face {face:b} uses positions outside the ground set")
        covered = 0
        for face in faces:
            covered |= face
        if covered != full:
            ghosts = [self.ground[i] for i in bits(full & ~covered)]
            raise ComplexError(
                f"Ghost vertices {ghosts} lie in no face. Please drop them from the ground set."
            )
        self.maximal_faces: FrozenSet[int] = faces

    @classmethod
    def from_faces(cls, ground: Sequence[str], faces: Iterable[Iterable[str]]) -> "SimplicialComplex":
        """Build from faces given as label collections"""
        labels = [str(v) for v in ground]
        index = {v: i for i, v in enumerate(labels)}
        masks = []
        for face in faces:
            mask = 0
            for label in face:
                if str(label) not in index:
                    raise ComplexError(f"Face vertex '{label}' is not in the ground set")
                mask |= 1 << index[str(label)]
            masks.append(mask)
        return cls(labels, masks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.ground == other.ground and self.maximal_faces == other.maximal_faces

    def __hash__(self) -> int:
        return hash((self.ground, self.maximal_faces))

    def __repr__(self) -> str:
        return f"SimplicialComplex(m={self.m}, dim={self.dimension}, facets={len(self.maximal_faces)})"

    @property
    def m(self) -> int:
        return len(self.ground)

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    @cached_property
    def dimension(self) -> int:
        return max(face.bit_count() for face in self.maximal_faces) - 1

    def position(self, label: str) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise ComplexError(f"Vertex '{label}' is not in the ground set")

    def mask(self, vertices: VertexSpec) -> int:
        """Bitset of a vertex set given as a mask or as labels"""
        if isinstance(vertices, int):
            if vertices & ~self.full_mask:
                raise ComplexError(f"Vertex set {vertices:b} exceeds the ground set")
            return vertices
        if isinstance(vertices, str):
            vertices = [vertices]
        result = 0
        for label in vertices:
            result |= 1 << self.position(label)
        return result

    def labels(self, mask: int) -> Tuple[str, ...]:
        return tuple(self.ground[i] for i in bits(mask))

    def is_face(self, vertices: VertexSpec) -> bool:
        mask = self.mask(vertices)
        return any(mask & ~face == 0 for face in self.maximal_faces)

    @cached_property
    def faces(self) -> FrozenSet[int]:
        """Every face, the empty face included"""
        result: Set[int] = set()
        for face in self.maximal_faces:
            sub = face
            while True:
                result.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & face
        return frozenset(result)

    @cached_property
    def faces_by_size(self) -> Dict[int, List[int]]:
        grouped: Dict[int, List[int]] = {}
        for face in self.faces:
            grouped.setdefault(face.bit_count(), []).append(face)
        return {size: sorted(group) for size, group in sorted(grouped.items())}

    @cached_property
    def minimal_nonfaces(self) -> FrozenSet[int]:
        faces = self.faces
        found: Set[int] = set()
        for face in faces:
            for v in bits(self.full_mask & ~face):
                candidate = face | (1 << v)
                if candidate in faces or candidate in found:
                    continue
                if all(candidate & ~(1 << w) in faces for w in bits(candidate)):
                    found.add(candidate)
        return frozenset(found)

    @cached_property
    def f_vector(self) -> Tuple[int, ...]:
        """(f_{-1}, f_0, f_1, ...) counting faces by dimension"""
        sizes = self.faces_by_size
        return tuple(len(sizes.get(k, [])) for k in range(self.dimension + 2))

    @cached_property
    def edge_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.m))
        graph.add_edges_from(tuple(bits(face)) for face in self.faces_by_size.get(2, []))
        return graph

    def to_json(self) -> Dict[str, List]:
        """Canonical JSON form: sorted labels, sorted faces"""
        faces = sorted(sorted(self.labels(face)) for face in self.maximal_faces)
        return {"vertices": sorted(self.ground), "maximal_faces": faces}


def minimal_nonfaces(K: SimplicialComplex) -> FrozenSet[int]:
    """All inclusion-minimal non-faces of K"""
    return K.minimal_nonfaces


def from_minimal_nonfaces(ground: Sequence[str], nonfaces: Iterable[Iterable[str]]) -> SimplicialComplex:
    """The complex whose minimal non-faces are the given vertex sets"""
    labels = [str(v) for v in ground]
    index = {v: i for i, v in enumerate(labels)}
    masks: List[int] = []
    for nonface in nonfaces:
        mask = 0
        for label in nonface:
            if str(label) not in index:
                raise ComplexError(f"Non-face vertex '{label}' is not in the ground set")
            mask |= 1 << index[str(label)]
        masks.append(mask)
    return complex_from_nonface_masks(labels, masks)


def complex_from_nonface_masks(ground: Sequence[str], nonfaces: Iterable[int]) -> SimplicialComplex:
    m = len(ground)
    nonfaces = [mask for mask in set(nonfaces)]
    by_vertex: Dict[int, List[int]] = {v: [] for v in range(m)}
    for mask in nonfaces:
        if mask.bit_count() <= 1:
            raise ComplexError("A non-face with fewer than two vertices creates a ghost vertex")
        for v in bits(mask):
            by_vertex[v].append(mask)

    def extendable(face: int, v: int) -> bool:
        candidate = face | (1 << v)
        return not any(mask & ~candidate == 0 for mask in by_vertex[v])

    maximal: List[int] = []
    stack = [(0, 0)]
    while stack:
        face, start = stack.pop()
        for v in range(start, m):
            if not face >> v & 1 and extendable(face, v):
                stack.append((face | (1 << v), v + 1))
        if not any(not face >> v & 1 and extendable(face, v) for v in range(m)):
            maximal.append(face)
    return SimplicialComplex(ground, maximal)


def flag_complex(ground: Sequence[str], edges: Iterable[Tuple[str, str]]) -> SimplicialComplex:
    """Clique complex of a graph on the given vertices"""
    labels = [str(v) for v in ground]
    graph = nx.Graph()
    graph.add_nodes_from(labels)
    graph.add_edges_from((str(a), str(b)) for a, b in edges)
    return SimplicialComplex.from_faces(labels, nx.find_cliques(graph))


def full_subcomplex(K: SimplicialComplex, vertices: VertexSpec) -> SimplicialComplex:
    """K_I: all faces of K inside I, on the ground I"""
    support = K.mask(vertices)
    faces = {compress(face & support, support) for face in K.maximal_faces}
    return SimplicialComplex(K.labels(support), faces)


def link(K: SimplicialComplex, face: VertexSpec) -> SimplicialComplex:
    """Link of a face: {τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}"""
    sigma = K.mask(face)
    if not K.is_face(sigma):
        raise ComplexError(f"{list(K.labels(sigma))} is not a face")
    rests = [f & ~sigma for f in K.maximal_faces if sigma & ~f == 0]
    support = 0
    for rest in rests:
        support |= rest
    return SimplicialComplex(K.labels(support), {compress(rest, support) for rest in rests})


def star_vertices(K: SimplicialComplex, face: VertexSpec) -> int:
    """Vertex support of the link of a face"""
    sigma = K.mask(face)
    support = 0
    for f in K.maximal_faces:
        if sigma & ~f == 0:
            support |= f & ~sigma
    return support


def is_flag(K: SimplicialComplex) -> bool:
    """Every minimal non-face has exactly two vertices"""
    return all(mask.bit_count() == 2 for mask in K.minimal_nonfaces)


def q_connectivity(K: SimplicialComplex) -> int:
    """Largest q with every minimal non-face of size at least q + 1 (m for a simplex)"""
    if not K.minimal_nonfaces:
        return K.m
    return min(mask.bit_count() for mask in K.minimal_nonfaces) - 1


def stanley_reisner_ideal(K: SimplicialComplex) -> List[Tuple[str, ...]]:
    """Square-free generators, one per minimal non-face, sorted canonically"""
    ordered = sorted(K.minimal_nonfaces, key=lambda mask: (mask.bit_count(), tuple(bits(mask))))
    return [K.labels(mask) for mask in ordered]


def format_monomial(labels: Sequence[str], variable: str = "v") -> str:
    return "".join(f"{variable}{label}" if len(label) == 1 else f"{variable}[{label}]" for label in labels)


def is_pseudomanifold_sphere(K: SimplicialComplex) -> bool:
    """Pure, every ridge in exactly two facets, connected facet adjacency"""
    if K.m == 0:
        return True
    size = K.dimension + 1
    facets = sorted(K.maximal_faces)
    if any(face.bit_count() != size for face in facets):
        return False
    ridges: Dict[int, List[int]] = {}
    for index, face in enumerate(facets):
        for v in bits(face):
            ridges.setdefault(face & ~(1 << v), []).append(index)
    if any(len(owners) != 2 for owners in ridges.values()):
        return False
    adjacency = nx.Graph()
    adjacency.add_nodes_from(range(len(facets)))
    adjacency.add_edges_from(tuple(owners) for owners in ridges.values())
    return nx.is_connected(adjacency)


def require_sphere(K: SimplicialComplex) -> None:
    if not is_pseudomanifold_sphere(K):
        raise ComplexError(
            f"{K!r} fails the pseudomanifold sphere check. Please pass the nerve of a simple polytope."
        )


def boundary_of_simplex(n: int, labels: Optional[Sequence[str]] = None) -> SimplicialComplex:
    """∂Δ^n on n + 1 vertices"""
    if n < 1:
        raise ComplexError("∂Δ^n needs n ≥ 1")
    labels = list(labels or [str(i) for i in range(1, n + 2)])
    full = (1 << (n + 1)) - 1
    return SimplicialComplex(labels, [full & ~(1 << i) for i in range(n + 1)])


def simplex(n: int, labels: Optional[Sequence[str]] = None) -> SimplicialComplex:
    labels = list(labels or [str(i) for i in range(1, n + 2)])
    return SimplicialComplex(labels, [(1 << (n + 1)) - 1])


def point_nerve() -> SimplicialComplex:
    """{∅}: the nerve of the point P^0"""
    return SimplicialComplex([], [0])


def polygon(k: int) -> SimplicialComplex:
    """Boundary of a k-gon, vertices 1..k in cyclic order"""
    if k < 3:
        raise ComplexError("A polygon needs at least three sides")
    labels = [str(i) for i in range(1, k + 1)]
    return SimplicialComplex(labels, [(1 << i) | (1 << ((i + 1) % k)) for i in range(k)])


def triangular_prism() -> SimplicialComplex:
    """Nerve of the triangular prism: facets 1 and 5 are the triangles"""
    return from_minimal_nonfaces([str(i) for i in range(1, 6)], [("1", "5"), ("2", "3", "4")])
