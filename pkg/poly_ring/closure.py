#!/usr/bin/env python3
"""
Closure and Direct Families
d-closure with observed complexity, the flag truncation fc and geometric direct family checks
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Optional, Set, Tuple

from common.errors import LimitExceededError, PolytopeError
from complexes.canonical import is_isomorphic
from complexes.complex import SimplicialComplex, full_subcomplex, is_flag, link
from complexes.constructions import join, stellar_subdivision
from nestohedra.building_set import building_set_certificate, restriction
from nestohedra.families import FAMILIES, get_family, two_truncated_cube_Q
from nestohedra.nested_complex import nestohedron_nerve, q_copy_vertices, restriction_vertices
from poly_ring.identities import family_element
from poly_ring.ring import PolytopeClass, PolytopeRegistry, default_registry

logger = logging.getLogger(__name__)


@dataclass
class ClosureReport:
    """Classes reached from a family by taking factors of facets, grouped into named families"""

    family: str
    up_to: int
    classes: List[PolytopeClass]
    families: List[str]
    unmatched: List[int] = field(default_factory=list)

    @property
    def complexity(self) -> int:
        return len(self.families) + len(self.unmatched)

    def to_json(self) -> Dict[str, Any]:
        return {
            "family": self.family,
            "up_to": self.up_to,
            "classes": [polytope.to_json() for polytope in self.classes],
            "families": self.families,
            "unmatched": self.unmatched,
            "observed_complexity": self.complexity,
        }


def family_members(registry: PolytopeRegistry, family: str, up_to: int) -> Set[int]:
    """Ids of the join-irreducible members P^1..P^N"""
    members = set()
    for n in range(1, up_to + 1):
        element = family_element(registry, family, n)
        for monomial in element.terms:
            if len(monomial) == 1:
                members.add(monomial[0])
    return members


def _minimal_cover(
    targets: Set[int], catalog: Dict[str, Set[int]], preferred: str, tagged: Optional[Dict[int, str]] = None
) -> Tuple[List[str], Set[int]]:
    """Smallest set of families covering the targets

    Ties go to covers holding the generating family, then to covers naming more
    of the targets by registry provenance, then alphabetically.
    """
    tagged = tagged or {}
    coverable = set().union(*catalog.values()) & targets if catalog else set()
    names = sorted(catalog)
    for size in range(0, len(names) + 1):
        covers = [
            list(chosen) for chosen in combinations(names, size)
            if coverable <= set().union(*(catalog[name] for name in chosen))
        ]
        if covers:
            covers.sort(key=lambda chosen: (
                preferred not in chosen,
                -sum(1 for i in targets if tagged.get(i) in chosen),
                chosen,
            ))
            return covers[0], targets - coverable
    return names, targets - coverable


def d_closure(
    family: str, up_to: int, cap: int = 6, registry: Optional[PolytopeRegistry] = None
) -> ClosureReport:
    """Minimal d-stable extension of {P^1..P^N} restricted to dimension N"""
    if up_to > cap:
        raise LimitExceededError(
            f"Closure up to dimension {up_to} exceeds the cap {cap}. Please raise MAC_CLOSURE_CAP or lower --dim."
        )
    registry = registry or default_registry()
    get_family(family)
    seeds = family_members(registry, family, up_to)
    reached: Set[int] = set(seeds)
    queue = deque(sorted(seeds))
    while queue:
        polytope = registry[queue.popleft()]
        for monomial in registry.generator_boundary(polytope).terms:
            for class_id in monomial:
                if class_id not in reached:
                    reached.add(class_id)
                    queue.append(class_id)
    catalog = {name: family_members(registry, name, up_to) & reached for name in FAMILIES}
    catalog = {name: members for name, members in catalog.items() if members}
    tagged = {i: registry[i].provenance.partition(":")[0] for i in reached}
    families, unmatched = _minimal_cover(reached, catalog, family, tagged)
    classes = sorted((registry[i] for i in reached), key=lambda p: (p.dimension, p.facets, p.id))
    report = ClosureReport(family, up_to, classes, families, sorted(unmatched))
    logger.info(
        f"d-closure of {family} up to dimension {up_to}: {len(classes)} classes, "
        f"families {families}, observed complexity {report.complexity}"
    )
    return report


def _fresh(K: SimplicialComplex, stem: str) -> str:
    label, index = stem, 1
    while label in K.ground:
        label, index = f"{stem}{index}", index + 1
    return label


def fc_complex(K: SimplicialComplex, facet: str) -> SimplicialComplex:
    """Nerve of P × I truncated at the codim-2 face F × {top}"""
    if not is_flag(K):
        raise PolytopeError("fc needs a flag polytope. Please pass a flag nerve.")
    if facet not in K.ground:
        raise PolytopeError(f"'{facet}' is not a facet of P. Please pick one of {list(K.ground)}.")
    top = _fresh(K, "top")
    bottom = _fresh(K, "bottom")
    prism = join(K, SimplicialComplex([top, bottom], [1, 2]))
    result = stellar_subdivision(prism, [facet, top], _fresh(prism, "cut"))
    logger.debug(f"fc at {facet}: {K.m} -> {result.m} facets")
    return result


def fc(polytope: PolytopeClass, facet: Optional[str] = None, registry: Optional[PolytopeRegistry] = None) -> PolytopeClass:
    registry = registry or default_registry()
    K = polytope.nerve
    return registry.intern(fc_complex(K, facet if facet is not None else K.ground[0]), "derived")


@dataclass
class GdfpWitness:
    r: int
    n: int
    vertices: Optional[List[str]]
    isomorphic: bool

    def to_json(self) -> Dict[str, Any]:
        return {"r": self.r, "n": self.n, "vertices": self.vertices, "isomorphic": self.isomorphic}


@dataclass
class GdfpReport:
    """Full subcomplexes of K_{P^n} equivalent to K_{P^r} for every r < n ≤ bound"""

    family: str
    bound: int
    witnesses: List[GdfpWitness]
    copies: List[GdfpWitness] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(w.isomorphic for w in self.witnesses) and all(c.isomorphic for c in self.copies)

    def to_json(self) -> Dict[str, Any]:
        return {
            "family": self.family,
            "bound": self.bound,
            "holds": self.holds,
            "witnesses": [w.to_json() for w in self.witnesses],
            "vertex_set_copies": [c.to_json() for c in self.copies],
        }


def _building_witness(name: str, r: int, n: int) -> GdfpWitness:
    """An element S of B(n) with B(n)|_S ≅ B(r), checked on the matching full subcomplex"""
    family = get_family(name)
    B = family.building(n)
    small = family.building(r)
    target = building_set_certificate(small)
    for S in B.ordered:
        if S.bit_count() != r + 1 or building_set_certificate(restriction(B, S)) != target:
            continue
        vertices = restriction_vertices(B, S)
        K = nestohedron_nerve(B)
        ok = is_isomorphic(full_subcomplex(K, vertices), nestohedron_nerve(small))
        return GdfpWitness(r, n, vertices, ok)
    return GdfpWitness(r, n, None, False)


def _q_witness(r: int, n: int) -> GdfpWitness:
    """A face of K_{Q^n} whose link, a full subcomplex by flagness, is K_{Q^r}"""
    K = two_truncated_cube_Q(n)
    small = two_truncated_cube_Q(r)
    preferred = K.mask([str(v) for v in range(r, n)])
    candidates = [preferred] + sorted(K.faces_by_size.get(n - r, []))
    for face in candidates:
        if not K.is_face(face):
            continue
        neighbourhood = link(K, face)
        if neighbourhood.m != small.m or len(neighbourhood.maximal_faces) != len(small.maximal_faces):
            continue
        vertices = list(neighbourhood.ground)
        if is_isomorphic(full_subcomplex(K, vertices), small):
            return GdfpWitness(r, n, vertices, True)
    return GdfpWitness(r, n, None, False)


def _q_vertex_set_copy(r: int, n: int) -> GdfpWitness:
    """(K_{Q^n}) on {1..r−1, n, n+1..n+r−1, 2n} against (K_{Q^r}) on [2r]"""
    vertices = q_copy_vertices(n, r)
    inside = full_subcomplex(two_truncated_cube_Q(n), vertices)
    reference = full_subcomplex(two_truncated_cube_Q(r), [str(v) for v in range(1, 2 * r + 1)])
    return GdfpWitness(r, n, vertices, is_isomorphic(inside, reference))


def gdfp_check(family: str, bound: int) -> GdfpReport:
    spec = get_family(family)
    witnesses, copies = [], []
    for n in range(2, bound + 1):
        for r in range(1, n):
            if spec.building is not None:
                witnesses.append(_building_witness(spec.name, r, n))
            else:
                witnesses.append(_q_witness(r, n))
                if r >= 2:
                    copies.append(_q_vertex_set_copy(r, n))
    report = GdfpReport(spec.name, bound, witnesses, copies)
    symbol = "✅" if report.holds else "❌"
    logger.info(f"{symbol} Geometric direct family check for {spec.name} up to n={bound}")
    return report
