#!/usr/bin/env python3
"""
Face Polynomials
F(α, t) and H(s, t) of ring elements, Dehn–Sommerville and the derivative identities for d
"""

import logging
from typing import Dict

import sympy as sp

from poly_ring.ring import PolytopeClass, RingElement

logger = logging.getLogger(__name__)

alpha, s, t = sp.symbols("alpha s t")


def class_f_polynomial(polytope: PolytopeClass) -> sp.Expr:
    """Σ over simplices σ of K_P (∅ included) of α^{n−|σ|} t^{|σ|}"""
    if polytope.is_unit:
        return sp.Integer(1)
    n = polytope.dimension
    sizes = polytope.nerve.faces_by_size
    return sp.expand(sum(len(faces) * alpha ** (n - size) * t ** size for size, faces in sizes.items()))


def f_polynomial(element: RingElement) -> sp.Expr:
    """F extended additively and multiplicatively"""
    cache: Dict[int, sp.Expr] = {}
    total = sp.Integer(0)
    for monomial, coefficient in element.terms.items():
        term = sp.Rational(coefficient)
        for class_id in monomial:
            if class_id not in cache:
                cache[class_id] = class_f_polynomial(element.registry[class_id])
            term *= cache[class_id]
        total += term
    return sp.expand(total)


def h_polynomial(element: RingElement) -> sp.Expr:
    """H(s, t) = F(s − t, t)"""
    return sp.expand(f_polynomial(element).subs(alpha, s - t))


def dehn_sommerville(element: RingElement) -> bool:
    """H(s, t) = H(t, s)"""
    H = h_polynomial(element)
    swapped = H.subs({s: t, t: s}, simultaneous=True)
    holds = sp.expand(H - swapped) == 0
    if not holds:
        logger.warning(f"⚠️ Dehn–Sommerville fails for {element.format()}: H = {H}")
    return holds


def f_derivative_check(element: RingElement) -> bool:
    """F(dP) = ∂F(P)/∂t"""
    holds = sp.expand(f_polynomial(element.d()) - sp.diff(f_polynomial(element), t)) == 0
    if not holds:
        logger.warning(f"⚠️ F(dP) ≠ ∂F/∂t for {element.format()}")
    return holds


def h_derivative_check(element: RingElement) -> bool:
    """H(dP) = (∂/∂s + ∂/∂t) H(P)"""
    H = h_polynomial(element)
    holds = sp.expand(h_polynomial(element.d()) - sp.diff(H, s) - sp.diff(H, t)) == 0
    if not holds:
        logger.warning(f"⚠️ H(dP) ≠ ∂H for {element.format()}")
    return holds


def polynomial_json(expression: sp.Expr) -> str:
    return str(sp.expand(expression))
