#!/usr/bin/env python3
"""
Exact Elimination
Fraction-free ranks, modular ranks and an incremental echelon basis for sparse vectors
"""

from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from common.algebra.fields import FieldSpec, Scalar

SparseVector = Dict[int, Scalar]


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix over the rationals by fraction-free elimination"""
    rows = [list(row) for row in matrix if any(row)]
    if not rows:
        return 0
    n_cols = len(rows[0])
    rank = 0
    previous = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pivot_value = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            row = rows[r]
            factor = row[col]
            for c in range(col, n_cols):
                row[c] = (pivot_value * row[c] - factor * rows[rank][c]) // previous
        previous = pivot_value
        rank += 1
        if rank == len(rows):
            break
    return rank


def modular_rank(matrix: Sequence[Sequence[int]], p: int) -> int:
    """Rank of an integer matrix over GF(p)"""
    rows = [[value % p for value in row] for row in matrix]
    rows = [row for row in rows if any(row)]
    if not rows:
        return 0
    n_cols = len(rows[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inverse = pow(rows[rank][col], -1, p)
        pivot_row = [(value * inverse) % p for value in rows[rank]]
        rows[rank] = pivot_row
        for r in range(rank + 1, len(rows)):
            factor = rows[r][col]
            if factor:
                rows[r] = [(a - factor * b) % p for a, b in zip(rows[r], pivot_row)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def integer_rank(matrix: Sequence[Sequence[int]], field: FieldSpec) -> int:
    """Rank of an integer matrix over the given field"""
    if not matrix:
        return 0
    if field.is_rational:
        return bareiss_rank(matrix)
    return modular_rank(matrix, field.p)


class EchelonBasis:
    """Incrementally built echelon basis of a span of sparse vectors.

    Each stored row keeps the combination of inserted tags that produced it,
    so membership tests also return coefficients. Reduction processes pivots in
    ascending order, which makes residues canonical representatives of cosets.
    """

    def __init__(self, field: FieldSpec):
        self.field = field
        self._rows: Dict[int, Tuple[SparseVector, Dict[Hashable, Scalar]]] = {}
        self._order: List[int] = []

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(
        self, vector: SparseVector, combo: Optional[Dict[Hashable, Scalar]] = None
    ) -> Tuple[SparseVector, Dict[Hashable, Scalar]]:
        field = self.field
        residue = {k: v for k, v in vector.items() if not field.is_zero(v)}
        combo = dict(combo or {})
        for pivot in self._order:
            value = residue.get(pivot)
            if value is None:
                continue
            row, row_combo = self._rows[pivot]
            factor = field.div(value, row[pivot])
            for col, entry in row.items():
                updated = field.sub(residue.get(col, field.zero()), field.mul(factor, entry))
                if field.is_zero(updated):
                    residue.pop(col, None)
                else:
                    residue[col] = updated
            for tag, coef in row_combo.items():
                updated = field.sub(combo.get(tag, field.zero()), field.mul(factor, coef))
                if field.is_zero(updated):
                    combo.pop(tag, None)
                else:
                    combo[tag] = updated
        return residue, combo

    def reduce(self, vector: SparseVector) -> SparseVector:
        """Canonical residue of vector modulo the span"""
        return self._reduce(vector)[0]

    def add(self, vector: SparseVector, tag: Hashable = None) -> Optional[Dict[Hashable, Scalar]]:
        """Insert vector; returns None if independent, else the dependency among tags"""
        start = {tag: self.field.one()} if tag is not None else {}
        residue, combo = self._reduce(vector, start)
        if not residue:
            return combo
        pivot = min(residue)
        self._rows[pivot] = (residue, combo)
        self._order = sorted(self._rows)
        return None

    def contains(self, vector: SparseVector) -> bool:
        return not self.reduce(vector)

    def express(self, vector: SparseVector) -> Optional[Dict[Hashable, Scalar]]:
        """Coefficients c with sum c[tag] * vector(tag) == vector, or None"""
        residue, combo = self._reduce(vector)
        if residue:
            return None
        return {tag: self.field.neg(coef) for tag, coef in combo.items()}

    def pivots(self) -> List[int]:
        return list(self._order)

    def rows(self) -> List[SparseVector]:
        return [dict(self._rows[pivot][0]) for pivot in self._order]


def nullspace(columns: Iterable[SparseVector], field: FieldSpec) -> List[Dict[int, Scalar]]:
    """Basis of linear relations among the given columns (indexed by position)"""
    basis = EchelonBasis(field)
    relations = []
    for index, column in enumerate(columns):
        dependency = basis.add(column, tag=index)
        if dependency is not None:
            relations.append(dependency)
    return relations
