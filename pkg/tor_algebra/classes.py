#!/usr/bin/env python3
"""
Cohomology Classes of R(K)
Cocycle and coboundary spaces per bidegree, coboundary solving, restriction maps and product certificates
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from common.algebra.elimination import EchelonBasis, SparseVector, nullspace
from common.algebra.fields import FieldSpec, Scalar
from common.errors import InputError
from complexes.complex import SimplicialComplex, VertexSpec, compress, full_subcomplex
from tor_algebra.dga import (Bidegree, DGAElement, coordinates, dga_basis, differential,
                             from_coordinates, unit)

logger = logging.getLogger(__name__)

CLASS_CACHE_SIZE = 2048


class ClassSpace:
    """Cocycles Z, coboundaries B and a basis of H = Z / B in one bidegree"""

    def __init__(self, K: SimplicialComplex, field: FieldSpec, bidegree: Bidegree):
        self.complex = K
        self.field = field
        self.bidegree = bidegree
        i, J = bidegree.i, bidegree.J
        self.basis = dga_basis(K, i, J)

        # d: (i, J) -> (i - 1, J)
        if i > 0:
            below = Bidegree(i - 1, J)
            columns = [
                coordinates(differential(self._element({k: field.one()})), below)
                for k in range(len(self.basis))
            ]
            self.cocycles: List[SparseVector] = nullspace(columns, field)
        else:
            self.cocycles = [{k: field.one()} for k in range(len(self.basis))]

        # d: (i + 1, J) -> (i, J), tagged by the source basis index
        self.boundaries = EchelonBasis(field)
        if i < J.bit_count():
            above = Bidegree(i + 1, J)
            for index in range(len(dga_basis(K, i + 1, J))):
                source = from_coordinates(K, field, above, {index: field.one()})
                self.boundaries.add(coordinates(differential(source), bidegree), tag=index)

        extended = EchelonBasis(field)
        for row in self.boundaries.rows():
            extended.add(row)
        self.cohomology_basis: List[SparseVector] = []
        for vector in self.cocycles:
            if extended.add(vector) is None:
                self.cohomology_basis.append(self.boundaries.reduce(vector))

    def _element(self, vector: SparseVector) -> DGAElement:
        return from_coordinates(self.complex, self.field, self.bidegree, vector)

    @property
    def dimension(self) -> int:
        return len(self.cohomology_basis)

    @property
    def cocycle_dimension(self) -> int:
        return len(self.cocycles)

    @property
    def coboundary_dimension(self) -> int:
        return self.boundaries.rank

    def _check(self, x: DGAElement) -> None:
        if not x.is_zero() and x.bidegree != self.bidegree:
            raise InputError(f"Element of {x.bidegree} does not live in {self.bidegree}")

    def reduce(self, x: DGAElement) -> DGAElement:
        """Canonical representative of x modulo coboundaries"""
        self._check(x)
        return self._element(self.boundaries.reduce(coordinates(x, self.bidegree)))

    def is_coboundary(self, x: DGAElement) -> bool:
        self._check(x)
        return self.boundaries.contains(coordinates(x, self.bidegree))

    def solve(self, y: DGAElement) -> Optional[DGAElement]:
        """Some x of bidegree (i + 1, J) with d(x) = y, or None"""
        self._check(y)
        combination = self.boundaries.express(coordinates(y, self.bidegree))
        if combination is None:
            return None
        above = Bidegree(self.bidegree.i + 1, self.bidegree.J)
        return from_coordinates(self.complex, self.field, above, dict(combination))

    def cocycle_elements(self) -> List[DGAElement]:
        return [self._element(v) for v in self.cocycles]

    def class_representatives(self) -> List[DGAElement]:
        return [self._element(v) for v in self.cohomology_basis]


@lru_cache(maxsize=CLASS_CACHE_SIZE)
def class_space(K: SimplicialComplex, field: FieldSpec, bidegree: Bidegree) -> ClassSpace:
    space = ClassSpace(K, field, bidegree)
    logger.debug(
        f"Class space {bidegree}: basis {len(space.basis)}, Z {space.cocycle_dimension}, "
        f"B {space.coboundary_dimension}, H {space.dimension}"
    )
    return space


def coboundary_solve(K: SimplicialComplex, y: DGAElement) -> Optional[DGAElement]:
    """x with d(x) = y when y is exact, else None"""
    if y.is_zero():
        if y.bidegree is not None and y.bidegree.i < y.bidegree.J.bit_count():
            return DGAElement(K, y.field, {}, Bidegree(y.bidegree.i + 1, y.bidegree.J))
        return DGAElement(K, y.field, {}, None)
    if not differential(y).is_zero():
        return None
    if y.bidegree.i == y.bidegree.J.bit_count():
        return None
    return class_space(K, y.field, y.bidegree).solve(y)


class CohomologyClass:
    """The class of a cocycle in H(R(K), d)"""

    def __init__(self, representative: DGAElement):
        if representative.bidegree is None:
            raise InputError("A cohomology class needs a homogeneous representative with a bidegree")
        if not differential(representative).is_zero():
            raise InputError(f"{representative.format()} is not a cocycle")
        self.representative = representative

    @property
    def complex(self) -> SimplicialComplex:
        return self.representative.complex

    @property
    def field(self) -> FieldSpec:
        return self.representative.field

    @property
    def bidegree(self) -> Bidegree:
        return self.representative.bidegree

    @property
    def total_degree(self) -> int:
        return self.bidegree.total_degree

    @property
    def space(self) -> ClassSpace:
        return class_space(self.complex, self.field, self.bidegree)

    def is_zero(self) -> bool:
        return self.space.is_coboundary(self.representative)

    def canonical(self) -> DGAElement:
        return self.space.reduce(self.representative)

    def __mul__(self, other: "CohomologyClass") -> "CohomologyClass":
        return CohomologyClass(self.representative * other.representative)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        if self.bidegree != other.bidegree:
            return self.is_zero() and other.is_zero()
        return self.space.is_coboundary(self.representative - other.representative)

    def __hash__(self) -> int:
        return hash(frozenset(self.canonical().terms.items()))

    def __repr__(self) -> str:
        return f"CohomologyClass([{self.representative.format()}], {self.bidegree})"

    def to_json(self) -> Dict:
        K = self.complex
        return {
            "i": self.bidegree.i,
            "J": list(K.labels(self.bidegree.J)),
            "degree": self.total_degree,
            "representative": self.representative.to_json(),
            "zero": self.is_zero(),
        }


def cohomology_dimension(K: SimplicialComplex, field: FieldSpec, i: int, J: int) -> int:
    return class_space(K, field, Bidegree(i, J)).dimension


class Restriction:
    """Algebra map R(K) -> R(K_I) killing monomials whose support leaves I"""

    def __init__(self, K: SimplicialComplex, vertices: VertexSpec):
        self.source = K
        self.support = K.mask(vertices)
        self.target = full_subcomplex(K, self.support)

    def __call__(self, x: DGAElement) -> DGAElement:
        support = self.support
        terms: Dict[Tuple[int, int], Scalar] = {}
        for (sigma, tau), c in x.terms.items():
            if (sigma | tau) & ~support:
                continue
            terms[(compress(sigma, support), compress(tau, support))] = c
        bidegree = None
        if x.bidegree is not None and not x.bidegree.J & ~support:
            bidegree = Bidegree(x.bidegree.i, compress(x.bidegree.J, support))
        return DGAElement(self.target, x.field, terms, bidegree)

    def on_class(self, alpha: CohomologyClass) -> Optional[CohomologyClass]:
        """Image class, or None when the multidegree leaves I"""
        image = self(alpha.representative)
        if image.bidegree is None:
            return None
        return CohomologyClass(image)


def restriction(K: SimplicialComplex, vertices: VertexSpec) -> Restriction:
    return Restriction(K, vertices)


@dataclass
class ProductCertificate:
    holds: bool
    product: Optional[CohomologyClass]
    degree: Optional[int]
    top_bidegree: Tuple[int, int]
    reason: str = ""

    def to_json(self) -> Dict:
        return {
            "holds": self.holds,
            "degree": self.degree,
            "top_bidegree": list(self.top_bidegree),
            "reason": self.reason,
            "product": self.product.to_json() if self.product is not None else None,
        }


def top_product_certificate(K: SimplicialComplex, classes: Sequence[CohomologyClass]) -> ProductCertificate:
    """Iterated product lands on a nonzero class in bidegree (m − n, [m]); certifies cup(Z_K) ≥ len(classes)"""
    n = K.dimension + 1
    top = (K.m - n, K.full_mask)
    if not classes:
        return ProductCertificate(False, None, None, top, "no classes")
    value = classes[0].representative
    for alpha in classes[1:]:
        value = value * alpha.representative
    if value.is_zero():
        return ProductCertificate(False, None, None, top, "product vanishes at chain level")
    product = CohomologyClass(value)
    degree = product.total_degree
    if (product.bidegree.i, product.bidegree.J) != top:
        return ProductCertificate(False, product, degree, top, "product misses the top bidegree")
    if product.is_zero():
        return ProductCertificate(False, product, degree, top, "product is a coboundary")
    logger.info(f"✅ Product of {len(classes)} classes is the top class in degree {degree}")
    return ProductCertificate(True, product, degree, top)


def unit_class(K: SimplicialComplex, field: FieldSpec) -> CohomologyClass:
    return CohomologyClass(unit(K, field))


def class_from_labels(
    K: SimplicialComplex, field: FieldSpec, words: Sequence[Tuple[Sequence[str], Sequence[str], int]]
) -> CohomologyClass:
    """Class of Σ c · v_τ u_σ given as (u-labels, v-labels, c) triples"""
    terms = {}
    for u, v, c in words:
        terms[(K.mask(list(u)), K.mask(list(v)))] = c
    return CohomologyClass(DGAElement(K, field, terms))


def all_bidegrees(K: SimplicialComplex) -> List[Bidegree]:
    """Every (i, J) with J ⊆ [m]"""
    result = []
    for J in range(1 << K.m):
        for i in range(J.bit_count() + 1):
            result.append(Bidegree(i, J))
    return result


def total_cohomology_dimensions(K: SimplicialComplex, field: FieldSpec) -> Dict[Tuple[int, int], int]:
    """Nonzero dim H^{-i,2J} keyed like a multigraded Betti table"""
    result = {}
    for bidegree in all_bidegrees(K):
        dimension = class_space(K, field, bidegree).dimension
        if dimension:
            result[(bidegree.i, bidegree.J)] = dimension
    return result

