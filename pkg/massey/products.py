#!/usr/bin/env python3
"""
Massey Products
Exhaustive GF(2) enumeration, the multigraded vanishing criterion, decomposability and restriction checks
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence

from common.algebra.elimination import EchelonBasis
from common.errors import LimitExceededError, MasseyError
from complexes.complex import SimplicialComplex, VertexSpec, bits
from massey.defining_system import (build_defining_system, check_classes, enumerate_systems, interior_slots,
                                    massey_value, slot_degree, target_total_degree, value_degree)
from tor_algebra.classes import CohomologyClass, class_space, restriction
from tor_algebra.dga import Bidegree, DGAElement, coordinates, zero

logger = logging.getLogger(__name__)

STRATEGIES = ("exhaustive-gf2", "vanishing", "auto")

STRICT_EXHAUSTIVE = "exhaustive"
STRICT_VANISHING = "vanishing"
STRICT_UNKNOWN = "unknown"


@dataclass
class MasseyReport:
    """Classification of ⟨α_1, ..., α_k⟩"""

    k: int
    strategy: str
    defined: bool
    values: List[CohomologyClass] = field(default_factory=list)
    contains_zero: Optional[bool] = None
    strict: str = STRICT_UNKNOWN
    decomposable: Optional[bool] = None
    target: Optional[Bidegree] = None
    target_degree: int = 0
    systems: int = 0

    @property
    def nontrivial(self) -> bool:
        return self.defined and self.contains_zero is False

    @property
    def strictly_defined(self) -> bool:
        return self.defined and self.strict != STRICT_UNKNOWN

    def to_json(self) -> Dict[str, Any]:
        report = {
            "k": self.k,
            "strategy": self.strategy,
            "defined": self.defined,
            "strict": self.strict,
            "nontrivial": self.nontrivial,
            "contains_zero": self.contains_zero,
            "decomposable": self.decomposable,
            "target_degree": self.target_degree,
            "value_count": len(self.values),
            "systems": self.systems,
        }
        if self.target is not None and self.values:
            K = self.values[0].complex
            report["target"] = {"i": self.target.i, "J": list(K.labels(self.target.J))}
            report["values"] = [alpha.canonical().to_json() for alpha in self.values]
        return report


def indeterminacy_dimension(classes: Sequence[CohomologyClass]) -> int:
    """Σ dim Z over interior slots: log2 of the number of GF(2) defining systems to examine"""
    K, fieldspec = classes[0].complex, classes[0].field
    total = 0
    for i, j in interior_slots(len(classes)):
        bidegree = slot_degree(classes, i, j).bidegree
        if bidegree is not None:
            total += class_space(K, fieldspec, bidegree).cocycle_dimension
    return total


def vanishing_criterion(classes: Sequence[CohomologyClass]) -> bool:
    """Every interior slot's bidegree carries no cohomology"""
    K, fieldspec = classes[0].complex, classes[0].field
    for i, j in interior_slots(len(classes)):
        bidegree = slot_degree(classes, i, j).bidegree
        if bidegree is not None and class_space(K, fieldspec, bidegree).dimension:
            logger.debug(f"Slot ({i}, {j}) in {bidegree} has cohomology")
            return False
    return True


def _span_sums(elements: List[DGAElement], K: SimplicialComplex, fieldspec) -> List[DGAElement]:
    """All GF(2) combinations of the given cocycles"""
    sums = [zero(K, fieldspec)]
    for element in elements:
        sums = sums + [s + element for s in sums]
    return sums


def decomposable(K: SimplicialComplex, alpha: CohomologyClass) -> bool:
    """α lies in H^+ · H^+: products over splits J_1 ⊔ J_2 = J plus coboundaries span its bidegree"""
    target = alpha.bidegree
    fieldspec = alpha.field
    if alpha.is_zero():
        return True
    space = alpha.space
    span = EchelonBasis(fieldspec)
    for row in space.boundaries.rows():
        span.add(row)
    members = list(bits(target.J))
    lowest, rest = members[0], members[1:]
    for size in range(0, len(rest)):
        for chosen in combinations(rest, size):
            J1 = 1 << lowest
            for v in chosen:
                J1 |= 1 << v
            J2 = target.J & ~J1
            for i1 in range(0, min(target.i, J1.bit_count()) + 1):
                i2 = target.i - i1
                if i2 > J2.bit_count():
                    continue
                left = class_space(K, fieldspec, Bidegree(i1, J1))
                if not left.dimension:
                    continue
                right = class_space(K, fieldspec, Bidegree(i2, J2))
                if not right.dimension:
                    continue
                for x in left.class_representatives():
                    for y in right.class_representatives():
                        product = x * y
                        if not product.is_zero():
                            span.add(coordinates(product, target))
    return span.contains(coordinates(alpha.representative, target))


def _classify_values(report: MasseyReport, K: SimplicialComplex, check_decomposable: bool) -> None:
    report.contains_zero = any(alpha.is_zero() for alpha in report.values) if report.values else True
    if check_decomposable and report.values:
        report.decomposable = all(decomposable(K, alpha) for alpha in report.values)


def _exhaustive(K: SimplicialComplex, classes: Sequence[CohomologyClass], report: MasseyReport) -> None:
    fieldspec = classes[0].field
    variations: Dict = {}
    for i, j in interior_slots(len(classes)):
        bidegree = slot_degree(classes, i, j).bidegree
        if bidegree is None:
            continue
        cocycles = class_space(K, fieldspec, bidegree).cocycle_elements()
        variations[(i, j)] = _span_sums(cocycles, K, fieldspec)
    found: Dict[frozenset, CohomologyClass] = {}
    overlapping = False
    for system in enumerate_systems(classes, variations):
        report.systems += 1
        value = massey_value(system)
        if value is None:
            overlapping = True
            continue
        key = frozenset(value.canonical().terms.items())
        found.setdefault(key, value)
    report.defined = report.systems > 0
    report.values = [found[key] for key in sorted(found, key=lambda key: sorted(key))]
    if report.defined:
        report.strict = STRICT_EXHAUSTIVE if len(found) + overlapping == 1 else STRICT_UNKNOWN
    _classify_values(report, K, check_decomposable=True)
    if overlapping:
        report.contains_zero = True


def _vanishing(K: SimplicialComplex, classes: Sequence[CohomologyClass], report: MasseyReport) -> None:
    system = build_defining_system(K, classes)
    report.defined = system is not None
    if system is None:
        return
    report.systems = 1
    value = massey_value(system)
    strict = vanishing_criterion(classes)
    report.strict = STRICT_VANISHING if strict else STRICT_UNKNOWN
    if value is None:
        report.contains_zero = True
        return
    report.values = [value]
    if value.is_zero():
        report.contains_zero = True
    else:
        report.contains_zero = False if strict else None
    if strict or len(classes) == 3:
        report.decomposable = decomposable(K, value)


def massey_product(
    K: SimplicialComplex,
    classes: Sequence[CohomologyClass],
    strategy: str = "auto",
    budget: int = 16,
) -> MasseyReport:
    """Classify ⟨α_1, ..., α_k⟩ as defined, trivial, decomposable and strictly defined"""
    if check_classes(classes) != K:
        raise MasseyError("Classes do not live in R(K) of the given complex")
    if strategy not in STRATEGIES:
        raise MasseyError(f"Unknown strategy '{strategy}'. Please use one of {list(STRATEGIES)}.")
    fieldspec = classes[0].field
    is_gf2 = fieldspec.characteristic == 2
    if strategy == "exhaustive-gf2" and not is_gf2:
        raise MasseyError("Exhaustive enumeration runs over GF(2). Please pass --field 2.")
    k = len(classes)
    degree = value_degree(classes)
    report = MasseyReport(k, strategy, False, target=degree.bidegree, target_degree=target_total_degree(classes))
    if strategy in ("exhaustive-gf2", "auto") and is_gf2:
        bits_needed = indeterminacy_dimension(classes)
        if bits_needed <= budget:
            report.strategy = "exhaustive-gf2"
            _exhaustive(K, classes, report)
        elif strategy == "exhaustive-gf2":
            raise LimitExceededError(
                f"Exhaustive enumeration needs {bits_needed} bits, budget is {budget}. "
                f"Please raise --budget or use --strategy vanishing."
            )
        else:
            report.strategy = "vanishing"
            _vanishing(K, classes, report)
    else:
        report.strategy = "vanishing"
        _vanishing(K, classes, report)
    if report.defined and any(alpha.is_zero() for alpha in classes):
        report.contains_zero = True
    status = "nontrivial" if report.nontrivial else "trivial or undetermined"
    symbol = "✅" if report.nontrivial else "⚠️"
    logger.info(
        f"{symbol} {k}-fold Massey product via {report.strategy}: defined={report.defined}, "
        f"strict={report.strict}, {status}, degree {report.target_degree}"
    )
    return report


@dataclass
class RestrictionCheck:
    """Entrywise restriction of a defining system over K compared with one built over K_I"""

    holds: bool
    supported: bool
    restricted_valid: bool = False
    values_agree: bool = False
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> Dict[str, Any]:
        return {
            "holds": self.holds,
            "supported": self.supported,
            "restricted_valid": self.restricted_valid,
            "values_agree": self.values_agree,
            "reason": self.reason,
        }


def restriction_report(K: SimplicialComplex, vertices: VertexSpec, classes: Sequence[CohomologyClass]) -> RestrictionCheck:
    check_classes(classes)
    support = K.mask(vertices)
    if any(alpha.bidegree.J & ~support for alpha in classes):
        return RestrictionCheck(False, False, reason="classes are not supported in I")
    system = build_defining_system(K, classes)
    if system is None:
        return RestrictionCheck(False, True, reason="no defining system over K")
    restrict = restriction(K, support)
    image = system.restricted(restrict)
    valid = image.is_valid()
    value = massey_value(system)
    image_value = massey_value(image)
    local = build_defining_system(restrict.target, image.classes)
    if local is None:
        return RestrictionCheck(False, True, valid, reason="no defining system over K_I")
    local_value = massey_value(local)
    if value is None or image_value is None or local_value is None:
        agree = value is None and image_value is None and local_value is None
    else:
        agree = restrict.on_class(value) == image_value and image_value == local_value
    holds = valid and agree
    return RestrictionCheck(holds, True, valid, agree, "" if holds else "restricted value differs")


def massey_restriction_check(K: SimplicialComplex, vertices: VertexSpec, classes: Sequence[CohomologyClass]) -> bool:
    """j* of a defining system over K is a defining system over K_I with the same value class"""
    return restriction_report(K, vertices, classes).holds
