#!/usr/bin/env python3
"""
Hochster Module Tests
Test reduced cohomology of full subcomplexes and Betti tables of Z_K
"""

import os
import sys
import unittest

import pytest
import sympy

# Add project root to path
sys.path.insert(
    0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
)

from common.algebra.fields import GF2, RATIONALS
from common.errors import ComplexError, InputError, LimitExceededError
from complexes.complex import SimplicialComplex, boundary_of_simplex, polygon, simplex, triangular_prism
from hochster.cohomology import cohomology_ranks, reduced_cohomology
from hochster.tables import (coefficients, compare_fields, gray_code, hilbert_divides, moment_angle_poincare,
                             multigraded_betti, poincare_duality_check, t, table_inclusion)
from nestohedra.families import two_truncated_cube_Q


class TestReducedCohomology(unittest.TestCase):
    """Test ranks and cocycles of full subcomplexes"""

    def test_circle(self):
        K = polygon(5)
        self.assertEqual(cohomology_ranks(K, K.full_mask, RATIONALS), {1: 1})

    def test_two_points(self):
        K = polygon(4)
        self.assertEqual(cohomology_ranks(K, K.mask(["1", "3"]), RATIONALS), {0: 1})

    def test_contractible(self):
        K = polygon(5)
        self.assertEqual(cohomology_ranks(K, K.mask(["1", "2", "3"]), RATIONALS), {})

    def test_representative_cocycles(self):
        groups = reduced_cohomology(polygon(4), RATIONALS, ["1", "3"])
        degree_zero = [g for g in groups if g.degree == 0][0]
        self.assertEqual(degree_zero.rank, 1)
        self.assertEqual(len(degree_zero.cocycles), 1)


class TestBettiTables(unittest.TestCase):
    """Test Hochster's formula on small spheres"""

    def test_square(self):
        table = multigraded_betti(polygon(4))
        self.assertEqual(table.bigraded(), {(0, 0): 1, (-1, 4): 2, (-2, 8): 1})
        self.assertEqual(coefficients(table.poincare()), [1, 0, 0, 2, 0, 0, 1])

    def test_pentagon(self):
        poly = moment_angle_poincare(polygon(5))
        self.assertEqual(poly.as_expr(), 1 + 5 * t**3 + 5 * t**4 + t**7)

    def test_boundary_of_triangle_is_sphere(self):
        self.assertEqual(moment_angle_poincare(boundary_of_simplex(2)).as_expr(), 1 + t**5)

    def test_simplex_is_disc(self):
        self.assertEqual(moment_angle_poincare(simplex(2)).as_expr(), sympy.Integer(1))

    def test_json_entries(self):
        entries = multigraded_betti(polygon(4)).to_json()
        self.assertEqual(entries[0], {"i": 0, "J": [], "rank": 1})
        self.assertIn({"i": 1, "J": ["1", "3"], "rank": 1}, entries)

    def test_limit(self):
        with self.assertRaises(LimitExceededError):
            multigraded_betti(polygon(5), limit=4)

    def test_gray_code_covers_subsets(self):
        self.assertEqual(sorted(gray_code(3)), list(range(8)))

    def test_prism_duality(self):
        self.assertTrue(poincare_duality_check(triangular_prism()))

    def test_duality_needs_sphere(self):
        with self.assertRaises(ComplexError):
            poincare_duality_check(simplex(2))

    def test_duality_on_two_points(self):
        K = boundary_of_simplex(1)
        self.assertEqual(moment_angle_poincare(K).as_expr(), 1 + t**3)
        self.assertTrue(poincare_duality_check(K))

    def test_duality_rejects_three_points(self):
        with self.assertRaises(ComplexError):
            poincare_duality_check(SimplicialComplex(["a", "b", "c"], [1, 2, 4]))

    def test_compare_fields(self):
        report = compare_fields(polygon(5), 2)
        self.assertTrue(report["consistent"])
        self.assertEqual(report["torsion_entries"], [])

    def test_table_inclusion(self):
        self.assertTrue(table_inclusion(polygon(5), ["1", "2", "4"]))

    def test_hilbert_divides(self):
        self.assertTrue(hilbert_divides(1 + t, 1 - t**2))
        self.assertFalse(hilbert_divides(1 + t, 1 + t**2))
        with self.assertRaises(InputError):
            hilbert_divides(0, 1 + t)

    def test_gf2_agrees_on_square(self):
        self.assertEqual(multigraded_betti(polygon(4), GF2).bigraded(), multigraded_betti(polygon(4)).bigraded())


@pytest.mark.slow
class TestQTables(unittest.TestCase):
    """Test the two-truncated cube Q^3"""

    def test_top_entry(self):
        K = two_truncated_cube_Q(3)
        table = multigraded_betti(K)
        self.assertEqual(K.m, 8)
        self.assertEqual(table.get(K.m - 3, K.full_mask), 1)
        self.assertEqual(table.poincare().degree(), 11)

    def test_duality(self):
        self.assertTrue(poincare_duality_check(two_truncated_cube_Q(3)))

    def test_threaded_matches_serial(self):
        K = two_truncated_cube_Q(3)
        self.assertEqual(multigraded_betti(K, threads=2).multigraded, multigraded_betti(K).multigraded)


if __name__ == "__main__":
    unittest.main()
