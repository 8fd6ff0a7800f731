#!/usr/bin/env python3
"""
Polytope Families
Building sets of simplices, cubes, graph-associahedra, P_Mas and P_Γ, and the 2-truncated cubes Q^n
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from common.errors import BuildingSetError, InputError
from complexes.complex import (SimplicialComplex, complex_from_nonface_masks, from_minimal_nonfaces,
                               point_nerve, q_connectivity)
from complexes.constructions import multiwedge, stellar_subdivision
from nestohedra.building_set import (BuildingSet, GraphSpec, building_set_sum, disjoint_union,
                                     graphical, require_valid, simplex_building_set, substitution)
from nestohedra.nested_complex import nestohedron_nerve

logger = logging.getLogger(__name__)


def _require(n: int, minimum: int, family: str) -> None:
    if n < minimum:
        raise InputError(f"{family} needs n ≥ {minimum}, got n={n}. Please pass a larger dimension.")


def _subsets(elements: Sequence[int], low: int, high: int) -> List[Tuple[int, ...]]:
    return [chosen for size in range(low, high + 1) for chosen in combinations(elements, size)]


def simplex_B(n: int) -> BuildingSet:
    """B_Δ on [n+1]: singletons and the whole set"""
    _require(n, 0, "simplex")
    return simplex_building_set(range(1, n + 2))


def cube_B(n: int) -> BuildingSet:
    """B_□ on [n+1]: singletons and the initial segments {1..i}"""
    _require(n, 0, "cube")
    sets = [[i] for i in range(1, n + 2)] + [list(range(1, i + 1)) for i in range(2, n + 2)]
    return BuildingSet.on_range(n + 1, sets)


def _graph_B(n: int, edges: Sequence[Tuple[int, int]]) -> BuildingSet:
    return graphical(GraphSpec(n + 1, tuple(edges)))


def permutohedron_B(n: int) -> BuildingSet:
    """Complete graph on [n+1]"""
    _require(n, 0, "permutohedron")
    return _graph_B(n, list(combinations(range(1, n + 2), 2)))


def stellahedron_B(n: int) -> BuildingSet:
    """Star graph on [n+1] with center 1"""
    _require(n, 0, "stellahedron")
    return _graph_B(n, [(1, j) for j in range(2, n + 2)])


def associahedron_B(n: int) -> BuildingSet:
    """Path 1 – 2 – ... – (n+1)"""
    _require(n, 0, "associahedron")
    return _graph_B(n, [(j, j + 1) for j in range(1, n + 1)])


def cyclohedron_B(n: int) -> BuildingSet:
    """Cycle on [n+1]; for n ≤ 1 the cycle degenerates to a path"""
    _require(n, 0, "cyclohedron")
    edges = [(j, j + 1) for j in range(1, n + 1)]
    if n >= 2:
        edges.append((1, n + 1))
    return _graph_B(n, edges)


def pmas_summands(n: int) -> Tuple[BuildingSet, BuildingSet]:
    """B_1 ∪ B_2 and B_1 ∪ B_3 ∪ {[n+1]} whose sum is B(P, n)"""
    _require(n, 2, "P_Mas summands")
    singletons = [[i] for i in range(1, n + 2)]
    second_block = [[1, 2, *rest] for rest in _subsets(range(3, n + 2), 0, n - 1)]
    third_block = [[1, *rest] for rest in _subsets(range(3, n + 1), 1, n - 2)]
    first = BuildingSet.on_range(n + 1, singletons + second_block)
    second = BuildingSet.on_range(n + 1, singletons + third_block + [list(range(1, n + 2))])
    return first, second


def pmas_B(n: int) -> BuildingSet:
    """B(P, n); P_Mas^0 is a point and P_Mas^1 a segment"""
    _require(n, 0, "P_Mas")
    if n == 0:
        return BuildingSet.on_range(1, [[1]])
    if n == 1:
        return simplex_B(1)
    outcome = building_set_sum(*pmas_summands(n))
    if not outcome.defined:
        raise BuildingSetError(f"B(P, {n}) sum is undefined at {outcome.witness}")
    return outcome.result


def pgamma_summands(n: int) -> Tuple[BuildingSet, BuildingSet]:
    """B_1 ∪ B_2 ∪ {[n+1]} and B_1 ∪ B_3 whose sum is B(Γ, n)"""
    _require(n, 1, "P_Γ summands")
    singletons = [[i] for i in range(1, n + 2)]
    second_block = [list(chosen) for chosen in _subsets(range(1, n + 1), 2, n)]
    third_block = [[1, *middle, n + 1] for middle in _subsets(range(2, n + 1), 0, n - 1)]
    first = BuildingSet.on_range(n + 1, singletons + second_block + [list(range(1, n + 2))])
    second = BuildingSet.on_range(n + 1, singletons + third_block)
    return first, second


def pgamma_B(n: int) -> BuildingSet:
    """B(Γ, n); P_Γ^0 is a point"""
    _require(n, 0, "P_Γ")
    if n == 0:
        return BuildingSet.on_range(1, [[1]])
    outcome = building_set_sum(*pgamma_summands(n))
    if not outcome.defined:
        raise BuildingSetError(f"B(Γ, {n}) sum is undefined at {outcome.witness}")
    return outcome.result


def pgamma_graph_B(n: int) -> BuildingSet:
    """Graphical building set of K_n on [n] with the extra edge {n, n+1}"""
    _require(n, 1, "P_Γ graph")
    edges = list(combinations(range(1, n + 1), 2)) + [(n, n + 1)]
    return _graph_B(n, edges)


def truncation_pairs(n: int) -> List[Tuple[int, int]]:
    """(a, b) with 1 ≤ a < b ≤ n and b − a ≤ n − 2, ordered by (b − a, a)"""
    return sorted(
        ((a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if b - a <= n - 2),
        key=lambda pair: (pair[1] - pair[0], pair[0]),
    )


def q_labels(n: int) -> List[str]:
    """Vertex labels of K_{Q^n}: 1..2n, then "a,n+b" for each truncated face F_a ∩ F_{n+b}"""
    return [str(v) for v in range(1, 2 * n + 1)] + [f"{a},{n + b}" for a, b in truncation_pairs(n)]


def _truncations_meet(earlier: Tuple[int, int], later: Tuple[int, int]) -> bool:
    c, d = earlier
    a, b = later
    return not ((a != c and c < a <= d) or (b != d and c <= b < d))


def two_truncated_cube_Q(n: int) -> SimplicialComplex:
    """K_{Q^n} from the minimal non-faces of its face ring

    Every minimal non-face has two vertices. With w = w(a, n+b) the vertex of the
    truncation F_a ∩ F_{n+b}, they are:

    - {a, n+b} for a ≤ b with b − a ≤ n − 2;
    - {w, c} for a < c ≤ b and {w, n+d} for a ≤ d < b;
    - {w, w'} when the truncation w' cuts a face not meeting F_a ∩ F_{n+b}.
      This covers crossing pairs as well as touching ones.

    Pairing every v_p with w, or pairing only touching truncations, gives a ring
    whose complex is not a sphere. The list above is the one the sequence of
    edge subdivisions in q_by_subdivision produces.
    """
    _require(n, 0, "Q")
    if n == 0:
        return point_nerve()
    if n == 1:
        return SimplicialComplex(["1", "2"], [1, 2])
    labels = q_labels(n)
    pairs = truncation_pairs(n)
    position = {label: k for k, label in enumerate(labels)}

    def vertex(label: Any) -> int:
        return 1 << position[str(label)]

    nonfaces = []
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            if b - a <= n - 2:
                nonfaces.append(vertex(a) | vertex(n + b))
    for a, b in pairs:
        w = vertex(f"{a},{n + b}")
        nonfaces.extend(w | vertex(c) for c in range(a + 1, b + 1))
        nonfaces.extend(w | vertex(n + d) for d in range(a, b))
    for index, earlier in enumerate(pairs):
        for later in pairs[index + 1:]:
            if not _truncations_meet(earlier, later):
                nonfaces.append(vertex(f"{earlier[0]},{n + earlier[1]}") | vertex(f"{later[0]},{n + later[1]}"))
    K = complex_from_nonface_masks(labels, nonfaces)
    logger.debug(f"Q^{n}: {K.m} facets, {len(K.maximal_faces)} vertices")
    return K


def cross_polytope_nerve(n: int) -> SimplicialComplex:
    """K_{I^n}: vertices 1..2n, minimal non-faces {t, n+t}"""
    _require(n, 1, "cube nerve")
    return from_minimal_nonfaces([str(v) for v in range(1, 2 * n + 1)], [[t, n + t] for t in range(1, n + 1)])


def q_by_subdivision(n: int) -> SimplicialComplex:
    """K_{Q^n} by subdividing the edges {a, n+b} of the cube nerve in truncation order"""
    _require(n, 2, "Q by subdivision")
    K = cross_polytope_nerve(n)
    for a, b in truncation_pairs(n):
        K = stellar_subdivision(K, [str(a), str(n + b)], label=f"{a},{n + b}")
    return K


def q_subdivision_agrees(n: int) -> bool:
    """The ideal and the truncation sequence give the same complex"""
    agrees = two_truncated_cube_Q(n) == q_by_subdivision(n)
    if not agrees:
        logger.warning(f"⚠️ Q^{n}: face ring and truncation sequence disagree")
    return agrees


def expected_q_facets(n: int) -> int:
    return n * (n + 3) // 2 - 1


def expected_pmas_facets(n: int) -> int:
    return 3 * 2 ** (n - 2) + n - 1


@dataclass
class FmasConstruction:
    """Substituted building set, its nerve, and the multiwedge used for higher connectivity"""

    sizes: Tuple[int, ...]
    connectivity: int
    building_set: BuildingSet
    nerve: SimplicialComplex
    wedge: Optional[SimplicialComplex]
    wedge_parameter: int
    wedge_q_connectivity: Optional[int]

    @property
    def connectivity_ok(self) -> bool:
        return self.wedge is None or self.wedge_q_connectivity >= self.wedge_parameter

    def to_json(self) -> Dict[str, Any]:
        return {
            "sizes": list(self.sizes),
            "l": self.connectivity,
            "building_set": self.building_set.to_json(),
            "vertices": self.nerve.m,
            "flag": all(mask.bit_count() == 2 for mask in self.nerve.minimal_nonfaces),
            "wedge_parameter": self.wedge_parameter,
            "wedge_vertices": self.wedge.m if self.wedge is not None else None,
            "wedge_q_connectivity": self.wedge_q_connectivity,
            "connectivity_ok": self.connectivity_ok,
        }


def fmas_construction(sizes: Sequence[int], l: int) -> FmasConstruction:
    """B(P, r−1)(B(P, n_1), ..., B(P, n_r)); for l ≥ 3 also the multiwedge of ⊔ B(P, n_i) with J = (s, ..., s)"""
    sizes = tuple(int(n) for n in sizes)
    if not sizes or any(n < 2 for n in sizes):
        raise InputError(f"Sizes must be a nonempty list of integers ≥ 2, got {list(sizes)}")
    if l < 2:
        raise InputError(f"Connectivity l must be ≥ 2, got {l}")
    parts = [pmas_B(n) for n in sizes]
    substituted = substitution(pmas_B(len(sizes) - 1), parts)
    require_valid(substituted, connected=True)
    nerve = nestohedron_nerve(substituted)
    s = (l + 1) // 2
    wedge = None
    wedge_q = None
    if l >= 3:
        product = parts[0]
        for part in parts[1:]:
            product = disjoint_union(product, part)
        base = nestohedron_nerve(product)
        wedge = multiwedge(base, [s] * base.m)
        wedge_q = q_connectivity(wedge)
    logger.info(f"F_Mas construction for {list(sizes)}: {nerve.m} facets, wedge parameter {s}")
    return FmasConstruction(sizes, l, substituted, nerve, wedge, s, wedge_q)


@dataclass(frozen=True)
class Family:
    """Named polytope family; building is None when the family is not given by building sets"""

    name: str
    title: str
    minimum: int
    building: Optional[Callable[[int], BuildingSet]]
    nerve: Callable[[int], SimplicialComplex]


def _nerve_of(constructor: Callable[[int], BuildingSet]) -> Callable[[int], SimplicialComplex]:
    def build(n: int) -> SimplicialComplex:
        return nestohedron_nerve(constructor(n))

    return build


FAMILIES: Dict[str, Family] = {
    "simplex": Family("simplex", "Δ", 0, simplex_B, _nerve_of(simplex_B)),
    "cube": Family("cube", "I", 0, cube_B, _nerve_of(cube_B)),
    "pe": Family("pe", "Pe", 0, permutohedron_B, _nerve_of(permutohedron_B)),
    "st": Family("st", "St", 0, stellahedron_B, _nerve_of(stellahedron_B)),
    "cy": Family("cy", "Cy", 0, cyclohedron_B, _nerve_of(cyclohedron_B)),
    "as": Family("as", "As", 0, associahedron_B, _nerve_of(associahedron_B)),
    "pmas": Family("pmas", "P_Mas", 0, pmas_B, _nerve_of(pmas_B)),
    "pgamma": Family("pgamma", "P_Γ", 0, pgamma_B, _nerve_of(pgamma_B)),
    "q": Family("q", "Q", 0, None, two_truncated_cube_Q),
}


def get_family(name: str) -> Family:
    try:
        return FAMILIES[name.lower()]
    except KeyError:
        raise InputError(f"Unknown family '{name}'. Please use one of {sorted(FAMILIES)}.") from None


def family_building_set(name: str, n: int) -> BuildingSet:
    family = get_family(name)
    if family.building is None:
        raise InputError(f"Family '{name}' is not given by a building set. Please pass a nestohedron family.")
    return family.building(n)


def family_complex(name: str, n: int) -> SimplicialComplex:
    family = get_family(name)
    _require(n, family.minimum, family.title)
    return family.nerve(n)
