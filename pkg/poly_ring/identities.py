#!/usr/bin/env python3
"""
Ring Identities
Brute-force boundaries of the polytope families checked against their closed formulas and invariants
"""

import logging
from dataclasses import dataclass
from functools import partial
from math import comb
from typing import Any, Callable, Dict, Optional, Sequence

from common.errors import InputError, PolytopeError
from complexes.complex import SimplicialComplex
from complexes.constructions import multiwedge
from nestohedra.families import get_family
from poly_ring.polynomials import dehn_sommerville, f_derivative_check, h_derivative_check
from poly_ring.ring import PolytopeRegistry, RingElement, check_facet_bidegrees, default_registry

logger = logging.getLogger(__name__)


def family_element(registry: PolytopeRegistry, family: str, n: int) -> RingElement:
    """Ring element of the n-th member; the point for n = 0"""
    spec = get_family(family)
    if n < 0:
        raise InputError(f"Dimension must be non-negative, got {n}")
    if n == 0:
        return registry.one()
    source = spec.building(n) if spec.building is not None else spec.nerve(n)
    return registry.polytope(source, f"{spec.name}:{n}")


def dsimplex_formula(registry: PolytopeRegistry, n: int) -> RingElement:
    """dΔ^n = (n+1) Δ^{n−1}"""
    return family_element(registry, "simplex", n - 1).scale(n + 1)


def dpe_formula(registry: PolytopeRegistry, n: int) -> RingElement:
    """dPe^n = Σ C(n+1, s+1) Pe^s Pe^{n−s−1}"""
    P = partial(family_element, registry)
    total = registry.zero()
    for s in range(n):
        total = total + (P("pe", s) * P("pe", n - s - 1)).scale(comb(n + 1, s + 1))
    return total


def dst_formula(registry: PolytopeRegistry, n: int) -> RingElement:
    """dSt^n = n St^{n−1} + Σ C(n, s) St^s Pe^{n−s−1}"""
    P = partial(family_element, registry)
    total = P("st", n - 1).scale(n)
    for s in range(n):
        total = total + (P("st", s) * P("pe", n - s - 1)).scale(comb(n, s))
    return total


def pgamma_formula(registry: PolytopeRegistry, n: int) -> RingElement:
    """dP_Γ^n in terms of Pe and P_Γ"""
    P = partial(family_element, registry)
    total = P("pe", n - 1)
    for s in range(n - 1):
        total = total + (P("pe", s) * P("pgamma", n - s - 1)).scale(comb(n - 1, s + 1))
    for s in range(n):
        total = total + (P("pe", s) * P("pe", n - s - 1)).scale(comb(n - 1, s))
    for s in range(n - 1):
        total = total + (P("pgamma", s + 1) * P("pe", n - s - 2)).scale(comb(n - 1, s))
    return total


def pmas_formula(registry: PolytopeRegistry, n: int) -> RingElement:
    """dP_Mas^n in terms of St, P_Γ, Pe and P_Mas"""
    P = partial(family_element, registry)
    total = P("st", n - 1).scale(2) + P("pmas", n - 1).scale(n - 2)
    for s in range(n - 1):
        total = total + (P("st", s) * P("pgamma", n - s - 1)).scale(comb(n - 2, s))
        total = total + (P("st", s + 1) * P("pe", n - s - 2)).scale(comb(n - 2, s))
    for s in range(n - 2):
        total = total + (P("pmas", s + 2) * P("pe", n - s - 3)).scale(comb(n - 2, s))
    return total


@dataclass(frozen=True)
class Formula:
    family: str
    minimum: int
    build: Callable[[PolytopeRegistry, int], RingElement]


FORMULAS: Dict[str, Formula] = {
    "dsimplex": Formula("simplex", 1, dsimplex_formula),
    "dpe": Formula("pe", 1, dpe_formula),
    "dst": Formula("st", 1, dst_formula),
    "lemma4.9": Formula("pgamma", 1, pgamma_formula),
    "thm4.10": Formula("pmas", 2, pmas_formula),
}

PROPERTY_CHECKS = ("dehn-sommerville", "f-derivative", "h-derivative", "boundary-agreement")


@dataclass
class IdentityReport:
    """Outcome of one ring identity at one dimension"""

    identity: str
    family: str
    n: int
    holds: bool
    lhs: Optional[RingElement] = None
    rhs: Optional[RingElement] = None
    detail: str = ""

    def to_json(self) -> Dict[str, Any]:
        report: Dict[str, Any] = {
            "identity": self.identity,
            "family": self.family,
            "n": self.n,
            "holds": self.holds,
        }
        if self.lhs is not None:
            report["lhs"] = self.lhs.format()
        if self.rhs is not None:
            report["rhs"] = self.rhs.format()
            report["difference"] = (self.lhs - self.rhs).format()
        if self.detail:
            report["detail"] = self.detail
        return report


def verify_formula(identity: str, n: int, registry: Optional[PolytopeRegistry] = None) -> IdentityReport:
    """Brute-force d of the family member against the closed formula"""
    registry = registry or default_registry()
    formula = FORMULAS[identity]
    if n < formula.minimum:
        raise InputError(f"'{identity}' needs n ≥ {formula.minimum}, got {n}")
    lhs = family_element(registry, formula.family, n).d()
    rhs = formula.build(registry, n)
    holds = lhs == rhs
    symbol = "✅" if holds else "❌"
    logger.info(f"{symbol} {identity} at n={n}: d = {lhs.format()}")
    return IdentityReport(identity, formula.family, n, holds, lhs, rhs)


def boundary_agreement(element: RingElement) -> bool:
    """Building-set facets and nerve links give the same dP on every class carrying a building set"""
    registry = element.registry
    compared = 0
    for monomial in element.terms:
        for class_id in monomial:
            polytope = registry[class_id]
            if polytope.building is None:
                continue
            compared += 1
            via_building = registry.generator_boundary(polytope, "building")
            via_nerve = registry.generator_boundary(polytope, "nerve")
            if via_building != via_nerve:
                logger.warning(
                    f"⚠️ Boundary routes disagree on P{class_id}: {via_building.format()} vs {via_nerve.format()}"
                )
                return False
    if not compared:
        raise PolytopeError("No class of this element carries a building set. Please pick a nestohedron family.")
    return True


def verify_property(
    identity: str, family: str, n: int, registry: Optional[PolytopeRegistry] = None
) -> IdentityReport:
    registry = registry or default_registry()
    element = family_element(registry, family, n)
    if identity == "dehn-sommerville":
        holds = dehn_sommerville(element)
    elif identity == "f-derivative":
        holds = f_derivative_check(element)
    elif identity == "h-derivative":
        holds = h_derivative_check(element)
    elif identity == "boundary-agreement":
        holds = boundary_agreement(element)
    else:
        raise InputError(f"Unknown identity '{identity}'. Please use one of {identity_ids()}.")
    if holds:
        holds = all(
            check_facet_bidegrees(registry, registry[class_id])
            for monomial in element.terms for class_id in monomial
        )
    logger.info(f"{'✅' if holds else '❌'} {identity} for {family} n={n}")
    return IdentityReport(identity, family, n, holds, element)


def verify_identity(
    identity: str, n: int, family: Optional[str] = None, registry: Optional[PolytopeRegistry] = None
) -> IdentityReport:
    """Dispatch by identity id; property checks need a family"""
    if identity in FORMULAS:
        return verify_formula(identity, n, registry)
    if identity in PROPERTY_CHECKS:
        if family is None:
            raise InputError(f"'{identity}' needs a family. Please pass --family.")
        return verify_property(identity, family, n, registry)
    raise InputError(f"Unknown identity '{identity}'. Please use one of {identity_ids()}.")


def identity_ids() -> Sequence[str]:
    return sorted(FORMULAS) + list(PROPERTY_CHECKS)


def multiwedge_bigrading_check(K: SimplicialComplex, J: Sequence[int]) -> bool:
    """m − n of the polytope is unchanged by the J-construction"""
    wedge = multiwedge(K, J)
    before = K.m - (K.dimension + 1)
    after = wedge.m - (wedge.dimension + 1)
    if before != after:
        logger.warning(f"⚠️ Multiwedge {list(J)} moved m − n from {before} to {after}")
    return before == after
