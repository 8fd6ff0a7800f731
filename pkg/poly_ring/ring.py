#!/usr/bin/env python3
"""
Ring of Polytopes
Interned combinatorial classes, integer and rational combinations of their products, and the boundary operator
"""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

from common.errors import PolytopeError
from complexes.canonical import canonical_form
from complexes.complex import SimplicialComplex, is_pseudomanifold_sphere, link
from complexes.constructions import join_decompose
from nestohedra.building_set import (BuildingSet, building_set_certificate, components, require_valid,
                                     restriction)
from nestohedra.families import FAMILIES
from nestohedra.nested_complex import boundary_terms, nested_set_complex

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]
Monomial = Tuple[int, ...]

UNIT_ID = 0
ROUTES = ("auto", "building", "nerve")


def _normalize(value: Scalar) -> Scalar:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def merge(first: Monomial, second: Monomial) -> Monomial:
    return tuple(sorted(first + second))


class PolytopeClass:
    """Combinatorial class of a join-irreducible simple polytope P^n with m facets"""

    def __init__(
        self,
        id: int,
        dimension: int,
        facets: int,
        provenance: str,
        nerve: Optional[SimplicialComplex] = None,
        building: Optional[BuildingSet] = None,
    ):
        self.id = id
        self.dimension = dimension
        self.facets = facets
        self.provenance = provenance
        self.building = building
        self._nerve = nerve

    @property
    def nerve(self) -> SimplicialComplex:
        if self._nerve is None:
            if self.building is None:
                return SimplicialComplex([], [0])
            self._nerve = nested_set_complex(self.building)
        return self._nerve

    @property
    def is_unit(self) -> bool:
        return self.id == UNIT_ID

    @property
    def bidegree(self) -> Tuple[int, int]:
        """(n, k) with k = m − n"""
        return self.dimension, self.facets - self.dimension

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolytopeClass):
            return NotImplemented
        return self.id == other.id

    def __hash__(self) -> int:
        return hash(self.id)

    def __repr__(self) -> str:
        return f"PolytopeClass(id={self.id}, n={self.dimension}, m={self.facets}, {self.provenance})"

    def to_json(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "dimension": self.dimension,
            "facets": self.facets,
            "provenance": self.provenance,
        }


class RingElement:
    """Finite combination Σ c_M · M over sorted monomials of class ids; the empty monomial is the point"""

    __hash__ = None

    def __init__(self, registry: "PolytopeRegistry", terms: Optional[Dict[Monomial, Scalar]] = None):
        self.registry = registry
        self.terms: Dict[Monomial, Scalar] = {}
        for monomial, coefficient in (terms or {}).items():
            if coefficient:
                key = tuple(sorted(monomial))
                total = self.terms.get(key, 0) + coefficient
                if total:
                    self.terms[key] = _normalize(total)
                else:
                    self.terms.pop(key, None)

    def _check(self, other: "RingElement") -> None:
        if other.registry is not self.registry:
            raise PolytopeError("Ring elements come from different registries. Please use one registry.")

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, monomial: Iterable[int]) -> Scalar:
        return self.terms.get(tuple(sorted(monomial)), 0)

    @property
    def monomials(self) -> List[Monomial]:
        return sorted(self.terms, key=lambda monomial: (len(monomial), monomial))

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        terms = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            terms[monomial] = terms.get(monomial, 0) + coefficient
        return RingElement(self.registry, terms)

    def __neg__(self) -> "RingElement":
        return self.scale(-1)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def scale(self, factor: Scalar) -> "RingElement":
        return RingElement(self.registry, {monomial: c * factor for monomial, c in self.terms.items()})

    def __mul__(self, other: Union["RingElement", int, Fraction]) -> "RingElement":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        terms: Dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = merge(m1, m2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return RingElement(self.registry, terms)

    def __rmul__(self, other: Union[int, Fraction]) -> "RingElement":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "RingElement":
        result = self.registry.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.registry is other.registry and self.terms == other.terms

    def __repr__(self) -> str:
        return f"RingElement({self.format()})"

    def bidegrees(self) -> List[Tuple[int, int]]:
        """Sorted (n, k) of every monomial"""
        found = set()
        for monomial in self.terms:
            n = sum(self.registry[i].dimension for i in monomial)
            k = sum(self.registry[i].bidegree[1] for i in monomial)
            found.add((n, k))
        return sorted(found)

    def boundary(self, route: str = "auto") -> "RingElement":
        return self.registry.boundary(self, route)

    def d(self) -> "RingElement":
        return self.boundary()

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for monomial in self.monomials:
            coefficient = self.terms[monomial]
            body = self.registry.format_monomial(monomial)
            if monomial and coefficient == 1:
                parts.append(body)
            elif monomial:
                parts.append(f"{coefficient} {body}")
            else:
                parts.append(str(coefficient))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> Dict[str, Any]:
        used = sorted({i for monomial in self.terms for i in monomial})
        return {
            "terms": [
                {"coef": _json_scalar(self.terms[monomial]), "monomial": list(monomial)}
                for monomial in self.monomials
            ],
            "classes": {str(i): self.registry[i].provenance for i in used},
        }


def _json_scalar(value: Scalar) -> Union[int, str]:
    value = _normalize(value)
    return value if isinstance(value, int) else str(value)


class PolytopeRegistry:
    """Intern table: canonical certificate -> monomial of join-irreducible classes.

    Nerve certificates are the identity; building-set certificates are aliases
    added as building sets arrive. Building sets with more than nerve_limit
    facets are identified by their building-set certificate alone.
    """

    def __init__(self, nerve_limit: int = 32, threads: int = 1):
        self.nerve_limit = nerve_limit
        self.threads = max(1, threads)
        self._lock = threading.RLock()
        self._classes: List[PolytopeClass] = [PolytopeClass(UNIT_ID, 0, 0, "point")]
        self._keys: Dict[Tuple, Monomial] = {}
        self._boundaries: Dict[Tuple[int, str], RingElement] = {}

    def __len__(self) -> int:
        return len(self._classes)

    def __getitem__(self, class_id: int) -> PolytopeClass:
        try:
            return self._classes[class_id]
        except IndexError:
            raise PolytopeError(f"No interned class with id {class_id}") from None

    @property
    def classes(self) -> List[PolytopeClass]:
        return list(self._classes)

    @property
    def unit(self) -> PolytopeClass:
        return self._classes[UNIT_ID]

    def zero(self) -> RingElement:
        return RingElement(self)

    def one(self) -> RingElement:
        return RingElement(self, {(): 1})

    def generator(self, polytope: PolytopeClass) -> RingElement:
        if polytope.is_unit:
            return self.one()
        return RingElement(self, {(polytope.id,): 1})

    def name(self, class_id: int) -> str:
        polytope = self[class_id]
        family, _, parameter = polytope.provenance.partition(":")
        if family in FAMILIES and parameter:
            return f"{FAMILIES[family].title}^{parameter}"
        return f"P{class_id}"

    def format_monomial(self, monomial: Monomial) -> str:
        counts: Dict[int, int] = {}
        for i in monomial:
            counts[i] = counts.get(i, 0) + 1
        parts = []
        for i, power in sorted(counts.items()):
            label = self.name(i)
            parts.append(label if power == 1 else f"({label})^{power}")
        return "·".join(parts)

    def _tag(self, monomial: Monomial, provenance: Optional[str]) -> None:
        if provenance and provenance != "derived" and len(monomial) == 1:
            polytope = self._classes[monomial[0]]
            if polytope.provenance in ("derived", "input"):
                polytope.provenance = provenance

    def _complex_monomial(
        self, K: SimplicialComplex, provenance: Optional[str], building: Optional[BuildingSet] = None
    ) -> Monomial:
        if K.m == 0:
            return ()
        factors = join_decompose(K)
        if len(factors) > 1:
            monomial: Monomial = ()
            for factor in factors:
                monomial = merge(monomial, self._complex_monomial(factor, "derived"))
            return monomial
        key = ("nerve", canonical_form(K).certificate)
        with self._lock:
            found = self._keys.get(key)
            if found is None:
                polytope = PolytopeClass(
                    len(self._classes), K.dimension + 1, K.m, provenance or "derived", K, building
                )
                self._classes.append(polytope)
                found = (polytope.id,)
                self._keys[key] = found
                logger.debug(f"Interned class {polytope.id}: n={polytope.dimension}, m={polytope.facets}")
            elif building is not None and self._classes[found[0]].building is None:
                self._classes[found[0]].building = building
            self._tag(found, provenance)
            return found

    def _building_monomial(self, B: BuildingSet, provenance: Optional[str]) -> Monomial:
        require_valid(B)
        if not B.is_connected():
            monomial: Monomial = ()
            for S in components(B):
                monomial = merge(monomial, self._building_monomial(restriction(B, S), "derived"))
            return monomial
        if B.size == 1:
            return ()
        key = building_set_certificate(B)
        with self._lock:
            found = self._keys.get(key)
            if found is not None:
                self._tag(found, provenance)
                return found
        facets = len(B) - 1
        if facets <= self.nerve_limit:
            found = self._complex_monomial(nested_set_complex(B), provenance, B)
        else:
            with self._lock:
                found = self._keys.get(key)
                if found is None:
                    polytope = PolytopeClass(len(self._classes), B.size - 1, facets, provenance or "derived", None, B)
                    self._classes.append(polytope)
                    found = (polytope.id,)
                    logger.debug(f"Interned class {polytope.id} by building set: n={polytope.dimension}, m={facets}")
        with self._lock:
            return self._keys.setdefault(key, found)

    def monomial_of(self, source: Union[SimplicialComplex, BuildingSet], provenance: Optional[str] = None) -> Monomial:
        if isinstance(source, BuildingSet):
            return self._building_monomial(source, provenance)
        if isinstance(source, SimplicialComplex):
            if not is_pseudomanifold_sphere(source):
                raise PolytopeError(
                    f"{source!r} fails the pseudomanifold sphere check. Please pass the nerve of a simple polytope."
                )
            return self._complex_monomial(source, provenance or "input")
        raise PolytopeError(f"Cannot intern {type(source).__name__}. Please pass a complex or a building set.")

    def intern(self, source: Union[SimplicialComplex, BuildingSet], provenance: Optional[str] = None) -> PolytopeClass:
        """Class of a join-irreducible polytope; the point gives the unit"""
        monomial = self.monomial_of(source, provenance)
        if not monomial:
            return self.unit
        if len(monomial) > 1:
            raise PolytopeError(
                f"Input is a product of {len(monomial)} polytopes. Please use polytope() for the product element."
            )
        return self._classes[monomial[0]]

    def polytope(self, source: Union[SimplicialComplex, BuildingSet], provenance: Optional[str] = None) -> RingElement:
        """Ring element of any simple polytope: the monomial of its join factors"""
        return RingElement(self, {self.monomial_of(source, provenance): 1})

    def _facet_monomials(self, polytope: PolytopeClass, route: str) -> List[Monomial]:
        if route == "building":
            if polytope.building is None:
                raise PolytopeError(f"Class {polytope.id} has no building set. Please use the nerve route.")
            terms = boundary_terms(polytope.building)

            def facet(term) -> Monomial:
                return merge(
                    self.monomial_of(term.restricted, "derived"), self.monomial_of(term.contracted, "derived")
                )
        else:
            K = polytope.nerve
            terms = list(range(K.m))

            def facet(v) -> Monomial:
                return self._complex_monomial(link(K, 1 << v), "derived")

        if self.threads > 1 and len(terms) > 1:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                return list(pool.map(facet, terms))
        return [facet(term) for term in terms]

    def generator_boundary(self, polytope: PolytopeClass, route: str = "auto") -> RingElement:
        """dP: the sum of the facets of P"""
        if route not in ROUTES:
            raise PolytopeError(f"Unknown boundary route '{route}'. Please use one of {list(ROUTES)}.")
        if route == "auto":
            route = "building" if polytope.building is not None else "nerve"
        key = (polytope.id, route)
        if key in self._boundaries:
            return self._boundaries[key]
        if polytope.is_unit:
            result = self.zero()
        else:
            terms: Dict[Monomial, Scalar] = {}
            for monomial in self._facet_monomials(polytope, route):
                terms[monomial] = terms.get(monomial, 0) + 1
            result = RingElement(self, terms)
        logger.debug(f"d(P{polytope.id}) via {route}: {len(result.terms)} distinct facet classes")
        self._boundaries[key] = result
        return result

    def boundary(self, element: RingElement, route: str = "auto") -> RingElement:
        """d extended additively and by d(PQ) = dP·Q + P·dQ"""
        total = self.zero()
        for monomial, coefficient in element.terms.items():
            for index, class_id in enumerate(monomial):
                rest = RingElement(self, {monomial[:index] + monomial[index + 1:]: coefficient})
                total = total + self.generator_boundary(self[class_id], route) * rest
        return total

    def iterated_boundary(self, element: RingElement, times: int) -> RingElement:
        for _ in range(times):
            element = self.boundary(element)
        return element


def check_facet_bidegrees(registry: PolytopeRegistry, polytope: PolytopeClass, route: str = "auto") -> bool:
    """Every facet term has dimension n − 1 and k no larger than k(P)"""
    n, k = polytope.bidegree
    for facet_n, facet_k in registry.generator_boundary(polytope, route).bidegrees():
        if facet_n != n - 1 or facet_k > k:
            logger.warning(f"⚠️ Facet of P{polytope.id} has bidegree ({facet_n}, {facet_k}), parent ({n}, {k})")
            return False
    return True


_default_registry: Optional[PolytopeRegistry] = None
_default_lock = threading.Lock()


def default_registry() -> PolytopeRegistry:
    global _default_registry
    with _default_lock:
        if _default_registry is None:
            _default_registry = PolytopeRegistry()
        return _default_registry
