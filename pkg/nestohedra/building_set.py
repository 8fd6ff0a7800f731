#!/usr/bin/env python3
"""
Building Sets
Validation, graphical building sets, restriction, contraction, substitution and sums
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from common.errors import BuildingSetError
from complexes.canonical import canonical_graph_form
from complexes.complex import bits

logger = logging.getLogger(__name__)


def format_set(elements: Iterable[int]) -> str:
    return "{" + ",".join(str(e) for e in sorted(elements)) + "}"


class BuildingSet:
    """Collection of subsets of an ordered integer ground set, stored as position bitsets"""

    def __init__(self, ground: Sequence[int], sets: Iterable[int]):
        self.ground: Tuple[int, ...] = tuple(int(e) for e in ground)
        if len(set(self.ground)) != len(self.ground):
            raise BuildingSetError(f"Duplicate ground elements in {list(self.ground)}")
        self._index: Dict[int, int] = {e: i for i, e in enumerate(self.ground)}
        full = (1 << len(self.ground)) - 1
        self.sets: FrozenSet[int] = frozenset(mask for mask in sets if mask)
        if any(mask & ~full for mask in self.sets):
            raise BuildingSetError("Building set member uses elements outside the ground set")

    @classmethod
    def from_sets(cls, ground: Sequence[int], sets: Iterable[Iterable[int]]) -> "BuildingSet":
        index = {int(e): i for i, e in enumerate(ground)}
        masks = []
        for members in sets:
            mask = 0
            for e in members:
                if int(e) not in index:
                    raise BuildingSetError(f"Element {e} is not in the ground set {list(ground)}")
                mask |= 1 << index[int(e)]
            masks.append(mask)
        return cls(ground, masks)

    @classmethod
    def on_range(cls, size: int, sets: Iterable[Iterable[int]]) -> "BuildingSet":
        """Building set on [size] = {1, ..., size}"""
        return cls.from_sets(range(1, size + 1), sets)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BuildingSet):
            return NotImplemented
        return self.ground == other.ground and self.sets == other.sets

    def __hash__(self) -> int:
        return hash((self.ground, self.sets))

    def __len__(self) -> int:
        return len(self.sets)

    def __contains__(self, members: Any) -> bool:
        return self.mask(members) in self.sets

    def __repr__(self) -> str:
        return f"BuildingSet(ground={list(self.ground)}, size={len(self.sets)})"

    @property
    def size(self) -> int:
        return len(self.ground)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.ground)) - 1

    def mask(self, members: Any) -> int:
        if isinstance(members, int):
            return members
        result = 0
        for e in members:
            if int(e) not in self._index:
                raise BuildingSetError(f"Element {e} is not in the ground set {list(self.ground)}")
            result |= 1 << self._index[int(e)]
        return result

    def elements(self, mask: int) -> Tuple[int, ...]:
        return tuple(sorted(self.ground[i] for i in bits(mask)))

    def label(self, mask: int) -> str:
        return format_set(self.elements(mask))

    @cached_property
    def ordered(self) -> List[int]:
        """Members sorted by size, then by their sorted elements"""
        return sorted(self.sets, key=lambda mask: (mask.bit_count(), self.elements(mask)))

    def is_connected(self) -> bool:
        return self.full_mask in self.sets

    def to_json(self) -> Dict[str, Any]:
        return {
            "ground": list(self.ground),
            "sets": [list(self.elements(mask)) for mask in self.ordered],
        }


@dataclass
class ValidationReport:
    ok: bool
    missing_singletons: List[int] = field(default_factory=list)
    union_failures: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = field(default_factory=list)

    def to_json(self) -> Dict[str, Any]:
        return {
            "ok": self.ok,
            "missing_singletons": self.missing_singletons,
            "union_failures": [[list(a), list(b)] for a, b in self.union_failures],
        }


def validate(B: BuildingSet) -> ValidationReport:
    """Singletons present and intersecting members closed under union"""
    missing = [B.ground[i] for i in range(B.size) if (1 << i) not in B.sets]
    failures = []
    members = B.ordered
    for index, first in enumerate(members):
        for second in members[index + 1:]:
            if first & second and (first | second) not in B.sets:
                failures.append((B.elements(first), B.elements(second)))
    report = ValidationReport(not missing and not failures, missing, failures)
    if not report.ok:
        logger.debug(f"Building set violations: {len(missing)} singletons, {len(failures)} unions")
    return report


def is_connected(B: BuildingSet) -> bool:
    return B.is_connected()


def require_valid(B: BuildingSet, connected: bool = False) -> BuildingSet:
    report = validate(B)
    if not report.ok:
        raise BuildingSetError(
            f"Not a building set: missing singletons {report.missing_singletons}, "
            f"non-closed unions {report.union_failures[:3]}"
        )
    if connected and not B.is_connected():
        raise BuildingSetError(f"{B!r} is disconnected. Please pass a connected building set.")
    return B


@dataclass(frozen=True)
class GraphSpec:
    """Simple graph on vertices 1..vertices"""

    vertices: int
    edges: Tuple[Tuple[int, int], ...]

    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.vertices + 1))
        for a, b in self.edges:
            if a == b:
                raise BuildingSetError(f"Loop at {a}: graphs must be simple")
            if not (1 <= a <= self.vertices and 1 <= b <= self.vertices):
                raise BuildingSetError(f"Edge ({a}, {b}) leaves the vertex set [{self.vertices}]")
            graph.add_edge(a, b)
        return graph


def graphical(spec: GraphSpec) -> BuildingSet:
    """All S whose induced subgraph is connected"""
    graph = spec.graph()
    neighbours = {v: 0 for v in graph.nodes}
    for v in graph.nodes:
        for w in graph.neighbors(v):
            neighbours[v] |= 1 << (w - 1)
    found = {1 << (v - 1) for v in graph.nodes}
    frontier = list(found)
    while frontier:
        current = frontier.pop()
        reach = 0
        for i in bits(current):
            reach |= neighbours[i + 1]
        for i in bits(reach & ~current):
            grown = current | (1 << i)
            if grown not in found:
                found.add(grown)
                frontier.append(grown)
    return BuildingSet(range(1, spec.vertices + 1), found)


def restriction(B: BuildingSet, S: Any) -> BuildingSet:
    """B|_S = {T ∈ B : T ⊆ S} on the ground S"""
    support = B.mask(S)
    if support not in B.sets:
        raise BuildingSetError(f"{B.label(support)} is not an element of the building set")
    ground = [B.ground[i] for i in bits(support)]
    return BuildingSet.from_sets(ground, [B.elements(T) for T in B.sets if T & ~support == 0])


def contraction(B: BuildingSet, S: Any) -> BuildingSet:
    """B/S = {T ⊆ [n+1] ∖ S : T ∈ B or T ⊔ S ∈ B} on the ground [n+1] ∖ S"""
    support = B.mask(S)
    if support not in B.sets:
        raise BuildingSetError(f"{B.label(support)} is not an element of the building set")
    rest = B.full_mask & ~support
    members = set()
    for T in B.sets:
        if T & support == 0:
            members.add(T)
        elif T & support == support and T != support:
            members.add(T & ~support)
    ground = [B.ground[i] for i in bits(rest)]
    return BuildingSet.from_sets(ground, [B.elements(T) for T in members])


def substitution(B: BuildingSet, parts: Sequence[BuildingSet]) -> BuildingSet:
    """B(B_1, ..., B_{n+1}) on [k_1 + ... + k_{n+1}]"""
    if len(parts) != B.size:
        raise BuildingSetError(f"Substitution needs {B.size} building sets, got {len(parts)}")
    require_valid(B, connected=True)
    offsets = []
    total = 0
    for part in parts:
        require_valid(part, connected=True)
        offsets.append(total)
        total += part.size
    blocks = [((1 << part.size) - 1) << offset for part, offset in zip(parts, offsets)]
    members = set()
    for part, offset in zip(parts, offsets):
        members.update(mask << offset for mask in part.sets)
    for S in B.sets:
        union = 0
        for i in bits(S):
            union |= blocks[i]
        members.add(union)
    return BuildingSet(range(1, total + 1), members)


def disjoint_union(first: BuildingSet, second: BuildingSet) -> BuildingSet:
    """B_1 ⊔ B_2 with the second ground shifted past the first"""
    shift = max(first.ground, default=0)
    ground = list(first.ground) + [e + shift for e in second.ground]
    return BuildingSet(ground, list(first.sets) + [mask << first.size for mask in second.sets])


def simplex_building_set(ground: Sequence[int]) -> BuildingSet:
    size = len(ground)
    return BuildingSet(ground, [1 << i for i in range(size)] + [(1 << size) - 1])


@dataclass
class SumResult:
    """Outcome of B_1 + B_2: the union when it is a building set, else a witness pair"""

    defined: bool
    result: Optional[BuildingSet]
    witness: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]
    sufficient_condition: bool

    def to_json(self) -> Dict[str, Any]:
        return {
            "defined": self.defined,
            "witness": [list(w) for w in self.witness] if self.witness else None,
            "sufficient_condition": self.sufficient_condition,
            "result": self.result.to_json() if self.result is not None else None,
        }


def building_set_sum(first: BuildingSet, second: BuildingSet) -> SumResult:
    """B_1 + B_2 for connected building sets meeting exactly in B_Δ"""
    if first.ground != second.ground:
        raise BuildingSetError("Summands must share one ground set")
    require_valid(first, connected=True)
    require_valid(second, connected=True)
    common = first.sets & second.sets
    trivial = simplex_building_set(first.ground).sets
    if common != trivial:
        extra = sorted(first.elements(mask) for mask in common - trivial)
        raise BuildingSetError(f"Summands share {extra} beyond B_Δ. Please pass summands meeting in B_Δ.")
    union = first.sets | second.sets
    sufficient = all(
        (S1 | S2) in union for S1 in first.sets for S2 in second.sets if S1 & S2
    )
    candidate = BuildingSet(first.ground, union)
    report = validate(candidate)
    if report.ok:
        return SumResult(True, candidate, None, sufficient)
    return SumResult(False, None, report.union_failures[0], sufficient)


def components(B: BuildingSet) -> List[int]:
    """Inclusion-maximal members; they partition the ground of a building set"""
    members = B.ordered
    return [
        S for S in members
        if not any(S != T and S & ~T == 0 for T in members)
    ]


def building_set_certificate(B: BuildingSet) -> Tuple:
    """Isomorphism invariant of B: canonical form of the element / member incidence graph"""
    larger = [S for S in B.ordered if S.bit_count() > 1]
    adjacency: List[List[int]] = [[] for _ in range(B.size + len(larger))]
    for index, S in enumerate(larger):
        node = B.size + index
        for i in bits(S):
            adjacency[i].append(node)
            adjacency[node].append(i)
    initial = [0] * B.size + [S.bit_count() for S in larger]
    certificate, _ = canonical_graph_form(adjacency, initial)
    return ("building", B.size, certificate)

