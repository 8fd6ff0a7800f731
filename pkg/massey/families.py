#!/usr/bin/env python3
"""
Massey Classes of Polytope Families
Canonical 3-classes on Q^n and P_Mas^n, cup-length classes, transfer along embeddings and triple-product search
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

from common.algebra.fields import GF2, RATIONALS, FieldSpec
from common.errors import InputError, VerificationError
from complexes.complex import SimplicialComplex, full_subcomplex
from complexes.canonical import is_isomorphic
from hochster.cohomology import cohomology_ranks
from massey.products import MasseyReport, massey_product, restriction_report
from nestohedra.building_set import format_set
from nestohedra.families import pmas_B, two_truncated_cube_Q
from nestohedra.nested_complex import nestohedron_nerve, restriction_vertices
from tor_algebra.classes import CohomologyClass
from tor_algebra.dga import monomial

logger = logging.getLogger(__name__)


def word_class(K: SimplicialComplex, fieldspec: FieldSpec, v: Sequence[str], u: Sequence[str]) -> CohomologyClass:
    """[v_τ u_σ] for a monomial cocycle"""
    element = monomial(K, fieldspec, u=list(u), v=list(v))
    if element.is_zero():
        raise InputError(f"v{list(v)} u{list(u)} vanishes in R(K)")
    return CohomologyClass(element)


def _nonzero(classes: List[CohomologyClass], family: str) -> List[CohomologyClass]:
    for index, alpha in enumerate(classes, 1):
        if alpha.is_zero():
            raise VerificationError(f"{family}: class α_{index} = {alpha!r} is zero")
    return classes


def canonical_Q_classes(n: int, fieldspec: FieldSpec = RATIONALS, K: Optional[SimplicialComplex] = None) -> List[CohomologyClass]:
    """α_i = [v_i u_{n+i}] in R(Q^n)"""
    if n < 2:
        raise InputError(f"Q^n classes need n ≥ 2, got {n}")
    K = K or two_truncated_cube_Q(n)
    classes = [word_class(K, fieldspec, [str(i)], [str(n + i)]) for i in range(1, n + 1)]
    return _nonzero(classes, f"Q^{n}")


def q_product_classes(n: int, k: int, fieldspec: FieldSpec = RATIONALS, K: Optional[SimplicialComplex] = None) -> List[CohomologyClass]:
    """[v_i u_{n+i}] for i < k and [v_n u_{2n}]: the k-fold product carried by the copy of (K_{Q^k})_[2k]"""
    if not 2 <= k <= n:
        raise InputError(f"Need 2 ≤ k ≤ n, got k={k}, n={n}")
    K = K or two_truncated_cube_Q(n)
    pairs = [(i, n + i) for i in range(1, k)] + [(n, 2 * n)]
    classes = [word_class(K, fieldspec, [str(v)], [str(u)]) for v, u in pairs]
    return _nonzero(classes, f"Q^{n} {k}-fold")


def cup_length_classes_Q(n: int, fieldspec: FieldSpec = RATIONALS, K: Optional[SimplicialComplex] = None) -> List[CohomologyClass]:
    """n classes whose product is the top class of Z_{Q^n}"""
    if n < 2:
        raise InputError(f"Q^n classes need n ≥ 2, got {n}")
    K = K or two_truncated_cube_Q(n)

    def w(a: int, b: int) -> str:
        return f"{a},{n + b}"

    words: List[Tuple[List[str], List[str]]] = [([str(1)], [str(n + 1)])]
    second = [str(n + b) for b in range(2, n + 1)]
    if n >= 3:
        second.append(w(1, 2))
    words.append(([str(2)], second))
    for k in range(3, n):
        words.append(([str(k)], [w(a, k) for a in range(1, k)]))
    if n >= 3:
        words.append(([str(n)], [w(a, n) for a in range(2, n)]))
    classes = [word_class(K, fieldspec, v, u) for v, u in words]
    return _nonzero(classes, f"Q^{n} cup-length")


def pmas_Q_classes(n: int, fieldspec: FieldSpec = RATIONALS, K: Optional[SimplicialComplex] = None) -> List[CohomologyClass]:
    """α_i = [v_{1..i} u_{i+1}] in R(P_Mas^n): the Q^n classes under F_a = {1..a}, F_{n+b} = {b+1}"""
    if n < 2:
        raise InputError(f"P_Mas^n classes need n ≥ 2, got {n}")
    K = K or nestohedron_nerve(pmas_B(n))
    classes = [
        word_class(K, fieldspec, [format_set(range(1, i + 1))], [format_set([i + 1])])
        for i in range(1, n + 1)
    ]
    return _nonzero(classes, f"P_Mas^{n}")


def embedded_pmas_element(r: int, s: int) -> List[int]:
    """S_r = {1, 2, s+1, 3..r} ∈ B(P, s) with B(P, s)|_{S_r} ≅ B(P, r)"""
    if not 2 <= r <= s:
        raise InputError(f"Need 2 ≤ r ≤ s, got r={r}, s={s}")
    return sorted({1, 2, s + 1, *range(3, r + 1)})


def transported_classes(
    r: int, s: int, k: int, fieldspec: FieldSpec = RATIONALS, K: Optional[SimplicialComplex] = None
) -> List[CohomologyClass]:
    """Classes of R(P_Mas^s) supported on the copy of N_{B(P, r)}; they restrict to α_1^r, ..., α_k^r"""
    if not 2 <= k <= r:
        raise InputError(f"Need 2 ≤ k ≤ r, got k={k}, r={r}")
    K = K or nestohedron_nerve(pmas_B(s))
    classes = []
    for i in range(1, k + 1):
        partner = i + 1 if i < r else s + 1
        classes.append(word_class(K, fieldspec, [format_set(range(1, i + 1))], [format_set([partner])]))
    return _nonzero(classes, f"P_Mas^{s} transported")


@dataclass
class TransferCheck:
    """Massey product on P_Mas^s restricted to the embedded N_{B(P, r)}"""

    r: int
    s: int
    k: int
    vertices: List[str]
    isomorphic: bool
    restriction: Any
    holds: bool

    def to_json(self) -> Dict[str, Any]:
        return {
            "r": self.r,
            "s": self.s,
            "k": self.k,
            "vertices": self.vertices,
            "embedded_copy_isomorphic": self.isomorphic,
            "restriction": self.restriction.to_json(),
            "holds": self.holds,
        }


def transfer_check(r: int, s: int, k: Optional[int] = None, fieldspec: FieldSpec = RATIONALS) -> TransferCheck:
    """(j_r^s)* ⟨α_1^s, ..., α_k^s⟩ = ⟨α_1^r, ..., α_k^r⟩ on the full subcomplex of B(P, s)|_{S_r}"""
    k = k or r
    B = pmas_B(s)
    K = nestohedron_nerve(B)
    vertices = restriction_vertices(B, embedded_pmas_element(r, s))
    isomorphic = is_isomorphic(full_subcomplex(K, vertices), nestohedron_nerve(pmas_B(r)))
    classes = transported_classes(r, s, k, fieldspec, K)
    report = restriction_report(K, vertices, classes)
    holds = isomorphic and report.holds
    logger.info(f"{'✅' if holds else '❌'} Massey transfer P_Mas^{r} → P_Mas^{s} for k={k}")
    return TransferCheck(r, s, k, vertices, isomorphic, report, holds)


@dataclass
class TripleSearch:
    """First nontrivial triple product found on a 6-vertex full subcomplex"""

    vertices: Optional[List[str]]
    pairs: Optional[List[Tuple[str, str]]]
    report: Optional[MasseyReport]
    candidates: int

    @property
    def found(self) -> bool:
        return self.report is not None and self.report.nontrivial

    def to_json(self) -> Dict[str, Any]:
        return {
            "found": self.found,
            "vertices": self.vertices,
            "pairs": [list(p) for p in self.pairs] if self.pairs else None,
            "candidates": self.candidates,
            "report": self.report.to_json() if self.report is not None else None,
        }


def _matchings(items: Tuple[int, ...]) -> List[List[Tuple[int, int]]]:
    if not items:
        return [[]]
    first, rest = items[0], items[1:]
    found = []
    for index, partner in enumerate(rest):
        remaining = rest[:index] + rest[index + 1:]
        for tail in _matchings(remaining):
            found.append([(first, partner)] + tail)
    return found


def find_nontrivial_triple(K: SimplicialComplex, fieldspec: FieldSpec = GF2, budget: int = 16) -> TripleSearch:
    """Search 6-vertex full subcomplexes with H̃¹ ≠ 0 for ⟨[v_a u_b], [v_c u_d], [v_e u_f]⟩ over disjoint non-edges"""
    candidates = 0
    for chosen in combinations(range(K.m), 6):
        support = sum(1 << v for v in chosen)
        if not cohomology_ranks(K, support, fieldspec).get(1):
            continue
        candidates += 1
        local = full_subcomplex(K, support)
        nonedges = {mask for mask in local.minimal_nonfaces if mask.bit_count() == 2}
        for matching in _matchings(tuple(range(6))):
            masks = [(1 << a) | (1 << b) for a, b in matching]
            if any(mask not in nonedges for mask in masks):
                continue
            for middle in range(3):
                ordered = [matching[(middle + 1) % 3], matching[middle], matching[(middle + 2) % 3]]
                classes = [word_class(local, fieldspec, [local.ground[a]], [local.ground[b]]) for a, b in ordered]
                report = massey_product(local, classes, "auto", budget)
                if report.nontrivial and report.strictly_defined:
                    pairs = [(local.ground[a], local.ground[b]) for a, b in ordered]
                    logger.info(f"✅ Nontrivial triple Massey product on {list(local.ground)}: {pairs}")
                    return TripleSearch(list(local.ground), pairs, report, candidates)
    logger.info(f"No nontrivial triple product among {candidates} candidate subsets")
    return TripleSearch(None, None, None, candidates)


def eilenberg_moore_bound(report: MasseyReport) -> Optional[int]:
    """l_EM ≥ k − 1 once a strictly defined nontrivial k-fold product is found"""
    if report.nontrivial and report.strictly_defined:
        return report.k - 1
    return None
