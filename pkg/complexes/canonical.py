#!/usr/bin/env python3
"""
Canonical Labeling
Colour refinement with individualization backtracking and automorphism pruning
"""

import logging
from dataclasses import dataclass
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from complexes.complex import SimplicialComplex, bits, is_flag

logger = logging.getLogger(__name__)

Certificate = Tuple


def _refine(adjacency: Sequence[Sequence[int]], colors: List[int]) -> List[int]:
    """Coarsest equitable refinement; cell order depends only on colours"""
    cells = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in adjacency[v])))
            for v in range(len(adjacency))
        ]
        ranking = {s: i for i, s in enumerate(sorted(set(signatures)))}
        refined = [ranking[s] for s in signatures]
        if len(ranking) == cells:
            return refined
        colors, cells = refined, len(ranking)


def _individualize(colors: List[int], node: int) -> List[int]:
    target = colors[node]
    raised = [2 * c + (1 if c == target and v != node else 0) for v, c in enumerate(colors)]
    ranking = {c: i for i, c in enumerate(sorted(set(raised)))}
    return [ranking[c] for c in raised]


class _Orbits:
    """Union-find over nodes"""

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


class _Search:
    def __init__(self, adjacency: Sequence[Sequence[int]], initial: Sequence[int]):
        self.adjacency = adjacency
        self.initial = list(initial)
        self.n = len(adjacency)
        self.first: Optional[Tuple[Certificate, List[int]]] = None
        self.best: Optional[Tuple[Certificate, List[int]]] = None
        self.automorphisms: List[List[int]] = []
        self.leaves = 0

    def certificate(self, position: List[int]) -> Certificate:
        order = sorted(range(self.n), key=lambda v: position[v])
        edges = sorted(
            (min(position[v], position[w]), max(position[v], position[w]))
            for v in range(self.n)
            for w in self.adjacency[v]
            if v < w
        )
        return (tuple(self.initial[v] for v in order), tuple(edges))

    def _record(self, reference: List[int], position: List[int]) -> None:
        inverse = [0] * self.n
        for v, p in enumerate(reference):
            inverse[p] = v
        mapping = [inverse[position[v]] for v in range(self.n)]
        if any(mapping[v] != v for v in range(self.n)):
            self.automorphisms.append(mapping)

    def _leaf(self, position: List[int]) -> None:
        self.leaves += 1
        cert = self.certificate(position)
        if self.first is None:
            self.first = (cert, position)
            self.best = (cert, position)
            return
        if cert == self.first[0]:
            self._record(self.first[1], position)
        elif cert == self.best[0]:
            self._record(self.best[1], position)
        elif cert < self.best[0]:
            self.best = (cert, position)

    def _same_orbit(self, prefix: List[int], a: int, b: int) -> bool:
        orbits = _Orbits(self.n)
        for gamma in self.automorphisms:
            if all(gamma[p] == p for p in prefix):
                for v in range(self.n):
                    orbits.union(v, gamma[v])
        return orbits.find(a) == orbits.find(b)

    def visit(self, colors: List[int], prefix: List[int]) -> None:
        sizes: Dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        open_cells = [c for c, size in sizes.items() if size > 1]
        if not open_cells:
            self._leaf(colors)
            return
        target = min(open_cells)
        explored: List[int] = []
        for node in (v for v in range(self.n) if colors[v] == target):
            if any(self._same_orbit(prefix, node, done) for done in explored):
                continue
            explored.append(node)
            self.visit(_refine(self.adjacency, _individualize(colors, node)), prefix + [node])

    def run(self) -> Tuple[Certificate, List[int]]:
        ranking = {c: i for i, c in enumerate(sorted(set(self.initial)))}
        self.visit(_refine(self.adjacency, [ranking[c] for c in self.initial]), [])
        return self.best


def canonical_graph_form(
    adjacency: Sequence[Sequence[int]], initial: Sequence[Hashable]
) -> Tuple[Certificate, List[int]]:
    """Certificate and node -> canonical position map of a vertex-coloured graph"""
    if not adjacency:
        return ((), ()), []
    search = _Search(adjacency, initial)
    certificate, position = search.run()
    logger.debug(
        f"Canonical form: {len(adjacency)} nodes, {search.leaves} leaves, "
        f"{len(search.automorphisms)} automorphisms"
    )
    return certificate, position


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-invariant certificate plus the labels in canonical order"""

    certificate: Certificate
    order: Tuple[str, ...]


def canonical_form(K: SimplicialComplex) -> CanonicalForm:
    """Canonical labeling of K.

    Flag complexes are determined by their 1-skeleton and are refined on the
    vertex graph; all others on the vertex / maximal-face incidence graph.
    """
    if K.m == 0:
        return CanonicalForm(("point",), ())
    if is_flag(K):
        adjacency = [sorted(K.edge_graph.neighbors(v)) for v in range(K.m)]
        certificate, position = canonical_graph_form(adjacency, [0] * K.m)
        tagged = ("flag", K.m, certificate)
    else:
        facets = sorted(K.maximal_faces)
        adjacency: List[List[int]] = [[] for _ in range(K.m + len(facets))]
        for index, face in enumerate(facets):
            node = K.m + index
            for v in bits(face):
                adjacency[v].append(node)
                adjacency[node].append(v)
        initial = [0] * K.m + [1] * len(facets)
        certificate, position = canonical_graph_form(adjacency, initial)
        tagged = ("incidence", K.m, certificate)
    order = sorted(range(K.m), key=lambda v: position[v])
    return CanonicalForm(tagged, tuple(K.ground[v] for v in order))


def is_isomorphic(K1: SimplicialComplex, K2: SimplicialComplex) -> bool:
    if K1.m != K2.m or len(K1.maximal_faces) != len(K2.maximal_faces):
        return False
    return canonical_form(K1).certificate == canonical_form(K2).certificate
