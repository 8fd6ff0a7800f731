#!/usr/bin/env python3
"""
Koszul DGA of a Complex
Elements of R(K) = Λ[u] ⊗ k[K] / (v_i² = u_i v_i = 0) with du_i = v_i
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Any, Dict, Iterable, List, Optional, Tuple

from common.algebra.fields import FieldSpec, Scalar
from common.errors import InputError
from complexes.complex import SimplicialComplex, bits

logger = logging.getLogger(__name__)

BASIS_CACHE_SIZE = 8192

Monomial = Tuple[int, int]


@dataclass(frozen=True)
class Bidegree:
    """Exterior count i and multidegree J"""

    i: int
    J: int

    def __post_init__(self):
        if self.i < 0 or self.i > self.J.bit_count():
            raise InputError(f"Invalid bidegree (i={self.i}, |J|={self.J.bit_count()})")

    @property
    def total_degree(self) -> int:
        return 2 * self.J.bit_count() - self.i


def monomial_bidegree(monomial: Monomial) -> Bidegree:
    sigma, tau = monomial
    return Bidegree(sigma.bit_count(), sigma | tau)


def koszul_sign(first: int, second: int) -> int:
    """Sign of the shuffle putting u_first · u_second into ascending order"""
    count = 0
    for b in bits(second):
        count += (first >> (b + 1)).bit_count()
    return -1 if count % 2 else 1


class DGAElement:
    """Homogeneous element of R(K) in the monomial basis u_σ v_τ"""

    __slots__ = ("complex", "field", "terms", "bidegree")

    def __init__(
        self,
        K: SimplicialComplex,
        field: FieldSpec,
        terms: Optional[Dict[Monomial, Scalar]] = None,
        bidegree: Optional[Bidegree] = None,
    ):
        self.complex = K
        self.field = field
        self.terms: Dict[Monomial, Scalar] = {
            mon: field.coerce(c) for mon, c in (terms or {}).items() if not field.is_zero(field.coerce(c))
        }
        degrees = {monomial_bidegree(mon) for mon in self.terms}
        if len(degrees) > 1:
            raise InputError("Inhomogeneous element: all monomials must share one bidegree")
        if degrees:
            inferred = degrees.pop()
            if bidegree is not None and bidegree != inferred:
                raise InputError(f"Element declared in {bidegree} has terms in {inferred}")
            bidegree = inferred
        self.bidegree = bidegree

    def _like(self, terms: Dict[Monomial, Scalar], bidegree: Optional[Bidegree]) -> "DGAElement":
        return DGAElement(self.complex, self.field, terms, bidegree)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> int:
        if self.bidegree is None:
            raise InputError("The zero element without bidegree has no degree")
        return self.bidegree.total_degree

    def _merge_bidegree(self, other: "DGAElement") -> Optional[Bidegree]:
        if self.bidegree is None:
            return other.bidegree
        if other.bidegree is None or other.bidegree == self.bidegree:
            return self.bidegree
        if self.is_zero():
            return other.bidegree
        if other.is_zero():
            return self.bidegree
        raise InputError(f"Cannot add elements of bidegrees {self.bidegree} and {other.bidegree}")

    def __add__(self, other: "DGAElement") -> "DGAElement":
        field = self.field
        terms = dict(self.terms)
        for mon, c in other.terms.items():
            terms[mon] = field.add(terms.get(mon, field.zero()), c)
        return self._like(terms, self._merge_bidegree(other))

    def __neg__(self) -> "DGAElement":
        return self._like({mon: self.field.neg(c) for mon, c in self.terms.items()}, self.bidegree)

    def __sub__(self, other: "DGAElement") -> "DGAElement":
        return self + (-other)

    def scale(self, factor: Any) -> "DGAElement":
        factor = self.field.coerce(factor)
        return self._like({mon: self.field.mul(factor, c) for mon, c in self.terms.items()}, self.bidegree)

    def __mul__(self, other: "DGAElement") -> "DGAElement":
        return product(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DGAElement):
            return NotImplemented
        return self.complex == other.complex and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def d(self) -> "DGAElement":
        return differential(self)

    def bar(self) -> "DGAElement":
        """(−1)^{deg} x"""
        if self.is_zero() or self.total_degree % 2 == 0:
            return self
        return -self

    def __repr__(self) -> str:
        return f"DGAElement({self.format()})"

    def format(self) -> str:
        if not self.terms:
            return "0"
        K = self.complex
        parts = []
        for (sigma, tau), c in sorted(self.terms.items()):
            word = "".join(f"v{K.ground[v]}" for v in bits(tau)) + "".join(f"u{K.ground[u]}" for u in bits(sigma))
            parts.append(f"({self.field.format(c)}){word or '1'}")
        return " + ".join(parts)

    def to_json(self) -> List[Dict[str, Any]]:
        K = self.complex
        return [
            {"u": list(K.labels(sigma)), "v": list(K.labels(tau)), "c": self.field.format(c)}
            for (sigma, tau), c in sorted(self.terms.items())
        ]


def monomial(
    K: SimplicialComplex,
    field: FieldSpec,
    u: Iterable[str] = (),
    v: Iterable[str] = (),
    coefficient: Any = 1,
) -> DGAElement:
    """The element c · v_τ u_σ written with labels"""
    sigma, tau = K.mask(list(u)), K.mask(list(v))
    if sigma & tau:
        return zero(K, field)
    if not K.is_face(tau):
        return zero(K, field, Bidegree(sigma.bit_count(), sigma | tau))
    return DGAElement(K, field, {(sigma, tau): coefficient})


def unit(K: SimplicialComplex, field: FieldSpec) -> DGAElement:
    return DGAElement(K, field, {(0, 0): 1})


def zero(K: SimplicialComplex, field: FieldSpec, bidegree: Optional[Bidegree] = None) -> DGAElement:
    return DGAElement(K, field, {}, bidegree)


def differential(x: DGAElement) -> DGAElement:
    """du_k = v_k, dv_k = 0, acting on the u-factors left to right"""
    K, field = x.complex, x.field
    faces = K.faces
    terms: Dict[Monomial, Scalar] = {}
    for (sigma, tau), c in x.terms.items():
        for k in bits(sigma):
            new_tau = tau | (1 << k)
            if new_tau not in faces:
                continue
            sign = -1 if (sigma & ((1 << k) - 1)).bit_count() % 2 else 1
            key = (sigma & ~(1 << k), new_tau)
            terms[key] = field.add(terms.get(key, field.zero()), field.mul(field.coerce(sign), c))
    target = None
    if x.bidegree is not None and x.bidegree.i > 0:
        target = Bidegree(x.bidegree.i - 1, x.bidegree.J)
    return DGAElement(K, field, terms, target)


def product(x: DGAElement, y: DGAElement) -> DGAElement:
    """Multiplication in R(K); overlapping supports and non-face τ vanish"""
    if x.complex != y.complex:
        raise InputError("Cannot multiply elements of different complexes")
    K, field = x.complex, x.field
    faces = K.faces
    terms: Dict[Monomial, Scalar] = {}
    for (s1, t1), c1 in x.terms.items():
        for (s2, t2), c2 in y.terms.items():
            if (s1 | t1) & (s2 | t2):
                continue
            tau = t1 | t2
            if tau not in faces:
                continue
            key = (s1 | s2, tau)
            value = field.mul(field.coerce(koszul_sign(s1, s2)), field.mul(c1, c2))
            terms[key] = field.add(terms.get(key, field.zero()), value)
    target = None
    if x.bidegree is not None and y.bidegree is not None and not x.bidegree.J & y.bidegree.J:
        target = Bidegree(x.bidegree.i + y.bidegree.i, x.bidegree.J | y.bidegree.J)
    return DGAElement(K, field, terms, target)


@lru_cache(maxsize=BASIS_CACHE_SIZE)
def dga_basis(K: SimplicialComplex, i: int, J: int) -> Tuple[Monomial, ...]:
    """All u_σ v_τ with |σ| = i, σ ⊔ τ = J and τ ∈ K, ordered by σ"""
    faces = K.faces
    found = []
    for chosen in combinations(list(bits(J)), i):
        sigma = 0
        for v in chosen:
            sigma |= 1 << v
        if J & ~sigma in faces:
            found.append((sigma, J & ~sigma))
    return tuple(sorted(found))


@lru_cache(maxsize=BASIS_CACHE_SIZE)
def basis_index(K: SimplicialComplex, i: int, J: int) -> Dict[Monomial, int]:
    return {mon: index for index, mon in enumerate(dga_basis(K, i, J))}


def coordinates(x: DGAElement, bidegree: Bidegree) -> Dict[int, Scalar]:
    """Sparse coordinate vector in the monomial basis of the given bidegree"""
    index = basis_index(x.complex, bidegree.i, bidegree.J)
    return {index[mon]: c for mon, c in x.terms.items()}


def from_coordinates(
    K: SimplicialComplex, field: FieldSpec, bidegree: Bidegree, vector: Dict[int, Scalar]
) -> DGAElement:
    basis = dga_basis(K, bidegree.i, bidegree.J)
    return DGAElement(K, field, {basis[index]: c for index, c in vector.items()}, bidegree)
