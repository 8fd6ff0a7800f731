#!/usr/bin/env python3
"""
Defining Systems
Upper-triangular arrays of DGA elements solving dc_ij = Σ c̄_ir c_rj, and their Massey values
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from common.errors import MasseyError, VerificationError
from complexes.complex import SimplicialComplex
from tor_algebra.classes import CohomologyClass, Restriction, coboundary_solve
from tor_algebra.dga import Bidegree, DGAElement, zero

logger = logging.getLogger(__name__)

Slot = Tuple[int, int]


@dataclass(frozen=True)
class SlotDegree:
    """Multidegree of c_ij; J is None when the inputs' multidegrees overlap on [i, j)"""

    J: Optional[int]
    exterior: int

    @property
    def forced_zero(self) -> bool:
        return self.J is None

    @property
    def bidegree(self) -> Optional[Bidegree]:
        if self.J is None or self.exterior > self.J.bit_count():
            return None
        return Bidegree(self.exterior, self.J)


def slot_degree(classes: Sequence[CohomologyClass], i: int, j: int) -> SlotDegree:
    """c_ij has exterior count Σ i(a_t) + (j − i − 1) and multidegree ⊔ J(a_t), t ∈ [i, j)"""
    union = 0
    exterior = j - i - 1
    for t in range(i, j):
        bidegree = classes[t - 1].bidegree
        exterior += bidegree.i
        if union & bidegree.J:
            return SlotDegree(None, exterior)
        union |= bidegree.J
    return SlotDegree(union, exterior)


def value_degree(classes: Sequence[CohomologyClass]) -> SlotDegree:
    """Multidegree of a(C): the (1, k+1) slot minus one exterior generator"""
    k = len(classes)
    degree = slot_degree(classes, 1, k + 1)
    return SlotDegree(degree.J, degree.exterior - 1)


def target_total_degree(classes: Sequence[CohomologyClass]) -> int:
    """n_1 + ... + n_k − k + 2"""
    return sum(alpha.total_degree for alpha in classes) - len(classes) + 2


def interior_slots(k: int) -> List[Slot]:
    """(i, j) with j − i ≥ 2 and (i, j) ≠ (1, k+1), by interval length"""
    return [
        (i, i + length)
        for length in range(2, k + 1)
        for i in range(1, k + 2 - length)
        if (i, i + length) != (1, k + 1)
    ]


def check_classes(classes: Sequence[CohomologyClass]) -> SimplicialComplex:
    if len(classes) < 2:
        raise MasseyError(f"A Massey product needs k ≥ 2 classes, got {len(classes)}")
    K = classes[0].complex
    fieldspec = classes[0].field
    for alpha in classes[1:]:
        if alpha.complex != K or alpha.field != fieldspec:
            raise MasseyError("All classes must live in R(K) of one complex over one field")
    return K


@dataclass
class DefiningSystem:
    """Entries c_ij for 1 ≤ i < j ≤ k+1, (i, j) ≠ (1, k+1), with c_{i,i+1} = a_i"""

    classes: List[CohomologyClass]
    entries: Dict[Slot, DGAElement] = field(default_factory=dict)

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def complex(self) -> SimplicialComplex:
        return self.classes[0].complex

    def entry(self, i: int, j: int) -> DGAElement:
        return self.entries[(i, j)]

    def right_hand_side(self, i: int, j: int) -> DGAElement:
        """Σ_{i<r<j} c̄_ir c_rj"""
        K, fieldspec = self.complex, self.classes[0].field
        total = zero(K, fieldspec)
        for r in range(i + 1, j):
            total = total + self.entries[(i, r)].bar() * self.entries[(r, j)]
        return total

    def value_element(self) -> DGAElement:
        """a(C) = −Σ_{1<r<k+1} c̄_1r c_{r,k+1}"""
        return -self.right_hand_side(1, self.k + 1)

    def is_valid(self) -> bool:
        for i, j in interior_slots(self.k):
            if self.entries[(i, j)].d() != self.right_hand_side(i, j):
                return False
        return all(self.entries[(t, t + 1)] == alpha.representative for t, alpha in enumerate(self.classes, 1))

    def restricted(self, restriction: Restriction) -> "DefiningSystem":
        """Entrywise image under an algebra map commuting with d"""
        images = [CohomologyClass(restriction(alpha.representative)) for alpha in self.classes]
        return DefiningSystem(images, {slot: restriction(entry) for slot, entry in self.entries.items()})

    def to_json(self) -> Dict:
        return {
            "k": self.k,
            "entries": [
                {"i": i, "j": j, "element": entry.to_json()}
                for (i, j), entry in sorted(self.entries.items())
            ],
        }


def initial_system(classes: Sequence[CohomologyClass]) -> DefiningSystem:
    return DefiningSystem(
        list(classes),
        {(t, t + 1): alpha.representative for t, alpha in enumerate(classes, 1)},
    )


def particular_entry(system: DefiningSystem, slot: Slot) -> Optional[DGAElement]:
    """Deterministic solution of dc = Σ c̄c at one slot, or None when the right side is not exact"""
    i, j = slot
    K = system.complex
    rhs = system.right_hand_side(i, j)
    degree = slot_degree(system.classes, i, j)
    if degree.forced_zero:
        if not rhs.is_zero():
            raise VerificationError(f"Slot ({i}, {j}) has overlapping multidegree but Σ c̄c ≠ 0")
        return zero(K, system.classes[0].field)
    solution = coboundary_solve(K, rhs)
    if solution is None:
        logger.debug(f"Slot ({i}, {j}): right-hand side is not exact")
        return None
    target = degree.bidegree
    if solution.is_zero() and target is not None:
        return zero(K, solution.field, target)
    return solution


def build_defining_system(K: SimplicialComplex, classes: Sequence[CohomologyClass]) -> Optional[DefiningSystem]:
    """Fill slots by interval length with particular solutions; None if some Σ c̄c is not exact"""
    if check_classes(classes) != K:
        raise MasseyError("Classes do not live in R(K) of the given complex")
    system = initial_system(classes)
    for slot in interior_slots(len(classes)):
        entry = particular_entry(system, slot)
        if entry is None:
            logger.info(f"Defining system for k={len(classes)} is obstructed at slot {slot}")
            return None
        system.entries[slot] = entry
    return system


def massey_value(system: DefiningSystem) -> Optional[CohomologyClass]:
    """[a(C)]; None when the value's multidegree is not a (0,1)-vector and a(C) vanishes identically"""
    a = system.value_element()
    if not a.d().is_zero():
        raise VerificationError("Massey value a(C) is not a cocycle")
    degree = value_degree(system.classes)
    if degree.forced_zero:
        if not a.is_zero():
            raise VerificationError("Value with overlapping multidegree is nonzero")
        return None
    target = degree.bidegree
    if target is None:
        return None
    if a.is_zero():
        a = zero(system.complex, a.field, target)
    elif a.bidegree != target:
        raise VerificationError(f"Massey value landed in {a.bidegree}, expected {target}")
    return CohomologyClass(a)


def enumerate_systems(
    classes: Sequence[CohomologyClass], variations: Dict[Slot, List[DGAElement]]
) -> Iterator[DefiningSystem]:
    """Every defining system reachable by adding combinations of the given cocycles per slot"""
    slots = interior_slots(len(classes))

    def extend(system: DefiningSystem, position: int) -> Iterator[DefiningSystem]:
        if position == len(slots):
            yield DefiningSystem(system.classes, dict(system.entries))
            return
        slot = slots[position]
        base = particular_entry(system, slot)
        if base is None:
            return
        for shift in variations.get(slot, [None]):
            entry = base if shift is None else base + shift
            system.entries[slot] = entry
            yield from extend(system, position + 1)
        system.entries.pop(slot, None)

    yield from extend(initial_system(classes), 0)
