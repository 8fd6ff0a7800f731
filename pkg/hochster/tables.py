#!/usr/bin/env python3
"""
Hochster Betti Tables
Multigraded and bigraded Betti numbers of k[K] and Poincaré polynomials of Z_K
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

import sympy
from more_itertools import chunked

from common.algebra.fields import RATIONALS, FieldSpec
from common.errors import ComplexError, InputError, LimitExceededError
from complexes.complex import (SimplicialComplex, VertexSpec, bits, expand,
                               full_subcomplex, is_pseudomanifold_sphere)
from hochster.cohomology import cohomology_ranks

logger = logging.getLogger(__name__)

t = sympy.Symbol("t")


@dataclass
class BettiTable:
    """Nonzero ranks β^{-i,2J} keyed by (i, J-bitset)"""

    ground: Tuple[str, ...]
    field: FieldSpec
    multigraded: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def get(self, i: int, J: int) -> int:
        return self.multigraded.get((i, J), 0)

    def bigraded(self) -> Dict[Tuple[int, int], int]:
        """(−i, 2j) -> Σ_{|J|=j} rank"""
        table: Dict[Tuple[int, int], int] = {}
        for (i, J), rank in self.multigraded.items():
            key = (-i, 2 * J.bit_count())
            table[key] = table.get(key, 0) + rank
        return dict(sorted(table.items(), key=lambda item: (item[0][1], -item[0][0])))

    def poincare(self) -> sympy.Poly:
        """Poincaré polynomial of H*(Z_K): (i, J) contributes to degree 2|J| − i"""
        expression = sympy.Integer(0)
        for (i, J), rank in self.multigraded.items():
            expression += rank * t ** (2 * J.bit_count() - i)
        return sympy.Poly(expression, t, domain="ZZ")

    def sorted_entries(self) -> List[Tuple[int, int, int]]:
        return sorted(
            ((i, J, rank) for (i, J), rank in self.multigraded.items()),
            key=lambda e: (e[1].bit_count(), tuple(bits(e[1])), e[0]),
        )

    def to_json(self) -> List[Dict[str, Any]]:
        return [
            {"i": i, "J": [self.ground[v] for v in bits(J)], "rank": rank}
            for i, J, rank in self.sorted_entries()
        ]


def gray_code(m: int) -> Iterable[int]:
    for index in range(1 << m):
        yield index ^ (index >> 1)


def _betti_chunk(K: SimplicialComplex, field: FieldSpec, masks: List[int]) -> List[Tuple[int, int, int]]:
    found = []
    faces = K.faces
    for J in masks:
        if J in faces:
            if J == 0:
                found.append((0, 0, 1))
            continue
        size = J.bit_count()
        for p, rank in cohomology_ranks(K, J, field).items():
            found.append((size - p - 1, J, rank))
    return found


def multigraded_betti(
    K: SimplicialComplex, field: FieldSpec = RATIONALS, limit: int = 20, threads: int = 1
) -> BettiTable:
    """β^{-i,2J} = rank H̃^{|J|−i−1}(K_J) for every J ⊆ [m]"""
    if K.m > limit:
        raise LimitExceededError(
            f"{K.m} vertices exceed the subset limit {limit}. "
            f"Please raise it with --limit {K.m} (2^{K.m} subsets)."
        )
    logger.info(f"Hochster table over {field.name}: {1 << K.m} subsets of {K.m} vertices")
    masks = list(gray_code(K.m))
    table = BettiTable(K.ground, field)
    if threads > 1 and K.m > 8:
        chunks = list(chunked(masks, max(1, len(masks) // (4 * threads))))
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = pool.map(_betti_chunk, [K] * len(chunks), [field] * len(chunks), chunks)
            entries = [entry for chunk in results for entry in chunk]
    else:
        entries = _betti_chunk(K, field, masks)
    for i, J, rank in sorted(entries, key=lambda e: (e[1], e[0])):
        table.multigraded[(i, J)] = rank
    logger.debug(f"Hochster table has {len(table.multigraded)} nonzero entries")
    return table


def moment_angle_poincare(
    K: SimplicialComplex, field: FieldSpec = RATIONALS, limit: int = 20, threads: int = 1
) -> sympy.Poly:
    return multigraded_betti(K, field, limit, threads).poincare()


def coefficients(poly: sympy.Poly) -> List[int]:
    """Ascending coefficient array"""
    return [int(c) for c in reversed(poly.all_coeffs())]


def poincare_duality_check(K: SimplicialComplex, field: FieldSpec = RATIONALS, limit: int = 20) -> bool:
    """Palindromic Poincaré polynomial of degree m + n with b1 = b2 = 0"""
    if not is_pseudomanifold_sphere(K):
        raise ComplexError(f"{K!r} is not a sphere. Please pass the nerve of a simple polytope.")
    n = K.dimension + 1
    values = coefficients(moment_angle_poincare(K, field, limit))
    if len(values) - 1 != K.m + n:
        return False
    values += [0] * 3
    return values[: K.m + n + 1] == list(reversed(values[: K.m + n + 1])) and values[1] == values[2] == 0


def hilbert_divides(A: Any, B: Any) -> bool:
    """Exact divisibility of B by A over the rationals"""
    divisor = sympy.Poly(A, t, domain="QQ")
    dividend = sympy.Poly(B, t, domain="QQ")
    if divisor.is_zero:
        raise InputError("Cannot divide by the zero polynomial. Please pass a nonzero divisor.")
    _, remainder = sympy.div(dividend, divisor)
    return remainder.is_zero


def compare_fields(K: SimplicialComplex, p: int = 2, limit: int = 20) -> Dict[str, Any]:
    """Universal-coefficient comparison of rational and GF(p) tables"""
    rational = multigraded_betti(K, RATIONALS, limit)
    modular = multigraded_betti(K, FieldSpec.prime(p), limit)
    keys = set(rational.multigraded) | set(modular.multigraded)
    below = sorted(k for k in keys if modular.get(*k) < rational.get(*k))
    above = sorted(k for k in keys if modular.get(*k) > rational.get(*k))
    if above:
        logger.warning(f"⚠️  GF({p}) ranks exceed rational ranks at {len(above)} entries (torsion)")
    return {"consistent": not below, "torsion_entries": above, "violations": below}


def table_inclusion(K: SimplicialComplex, vertices: VertexSpec, field: FieldSpec = RATIONALS, limit: int = 20) -> bool:
    """Every entry of the table of K_I reappears in the table of K at the same (i, J)"""
    support = K.mask(vertices)
    whole = multigraded_betti(K, field, limit)
    part = multigraded_betti(full_subcomplex(K, support), field, limit)
    return all(whole.get(i, expand(J, support)) == rank for (i, J), rank in part.multigraded.items())
