#!/usr/bin/env python3
"""
Polytope Ring Module Tests
Test the ring of polytopes, its boundary operator, closures and generating series
"""

import os
import sys
import unittest
from fractions import Fraction

import pytest

# Add project root to path
sys.path.insert(
    0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
)

from common.errors import InputError, LimitExceededError, PolytopeError
from complexes.complex import boundary_of_simplex, is_flag, polygon, simplex
from nestohedra.families import permutohedron_B, pmas_B, two_truncated_cube_Q
from poly_ring.closure import _minimal_cover, d_closure, fc, fc_complex, gdfp_check
from poly_ring.identities import family_element, identity_ids, multiwedge_bigrading_check, verify_identity
from poly_ring.polynomials import alpha, f_polynomial, h_polynomial, s, t
from poly_ring.ring import PolytopeRegistry, check_facet_bidegrees
from poly_ring.series import series_build, series_verify


class TestPolytopeRing(unittest.TestCase):
    """Test interning, products and the boundary operator"""

    def setUp(self):
        """Set up test fixtures"""
        self.registry = PolytopeRegistry()

    def pe(self, n):
        return family_element(self.registry, "pe", n)

    def test_point_is_unit(self):
        self.assertEqual(self.pe(0), self.registry.one())
        self.assertTrue(self.registry.one().d().is_zero())

    def test_segment_is_shared(self):
        self.assertEqual(family_element(self.registry, "simplex", 1), self.pe(1))

    def test_dpe2(self):
        self.assertEqual(self.pe(2).d(), self.pe(1).scale(6))

    def test_dpe3(self):
        self.assertEqual(self.pe(3).d(), self.pe(2).scale(8) + (self.pe(1) ** 2).scale(6))

    def test_dsimplex(self):
        simplex2 = family_element(self.registry, "simplex", 2)
        self.assertEqual(simplex2.d(), self.pe(1).scale(3))

    def test_cube_is_product(self):
        square = family_element(self.registry, "cube", 2)
        self.assertEqual(square, self.pe(1) ** 2)
        self.assertEqual(square.d(), (self.pe(1)).scale(4))

    def test_leibniz(self):
        x, y = self.pe(2), self.pe(1)
        self.assertEqual((x * y).d(), x.d() * y + x * y.d())

    def test_q3_is_pmas3(self):
        self.assertEqual(self.registry.intern(two_truncated_cube_Q(3)).id, self.registry.intern(pmas_B(3)).id)

    def test_intern_rejects_non_sphere(self):
        with self.assertRaises(PolytopeError):
            self.registry.intern(simplex(2))

    def test_intern_rejects_products(self):
        with self.assertRaises(PolytopeError):
            self.registry.intern(polygon(4))

    def test_facet_bidegrees(self):
        polytope = self.registry.intern(permutohedron_B(3))
        self.assertEqual(polytope.bidegree, (3, 11))
        self.assertTrue(check_facet_bidegrees(self.registry, polytope))

    def test_routes_agree(self):
        polytope = self.registry.intern(permutohedron_B(3))
        self.assertEqual(
            self.registry.generator_boundary(polytope, "building"),
            self.registry.generator_boundary(polytope, "nerve"),
        )

    def test_unknown_route(self):
        with self.assertRaises(PolytopeError):
            self.registry.generator_boundary(self.registry.intern(polygon(5)), "shortcut")

    def test_format(self):
        self.pe(1)
        self.pe(2)
        self.assertEqual(self.pe(3).d().format(), "8 Pe^2 + 6 (Pe^1)^2")

    def test_mixed_registries(self):
        with self.assertRaises(PolytopeError):
            self.pe(1) + family_element(PolytopeRegistry(), "pe", 1)


class TestPolynomials(unittest.TestCase):
    """Test face polynomials of ring elements"""

    def setUp(self):
        """Set up test fixtures"""
        self.registry = PolytopeRegistry()

    def test_square(self):
        square = family_element(self.registry, "cube", 2)
        self.assertEqual(f_polynomial(square), alpha**2 + 4 * alpha * t + 4 * t**2)

    def test_pentagon(self):
        pentagon = self.registry.polytope(polygon(5))
        self.assertEqual(f_polynomial(pentagon), alpha**2 + 5 * alpha * t + 5 * t**2)

    def test_h_polynomial_of_segment(self):
        self.assertEqual(h_polynomial(family_element(self.registry, "pe", 1)), s + t)


class TestIdentities(unittest.TestCase):
    """Test closed formulas and invariants against brute force"""

    def setUp(self):
        """Set up test fixtures"""
        self.registry = PolytopeRegistry()

    def test_identity_ids(self):
        ids = identity_ids()
        self.assertIn("thm4.10", ids)
        self.assertIn("dehn-sommerville", ids)

    def test_formulas_at_three(self):
        for identity in ("dsimplex", "dpe", "dst", "lemma4.9", "thm4.10"):
            report = verify_identity(identity, 3, registry=self.registry)
            self.assertTrue(report.holds, identity)
            self.assertTrue(report.to_json()["holds"])

    def test_formula_minimum(self):
        with self.assertRaises(InputError):
            verify_identity("thm4.10", 1, registry=self.registry)

    def test_property_checks(self):
        self.assertTrue(verify_identity("dehn-sommerville", 3, "pe", self.registry).holds)
        self.assertTrue(verify_identity("f-derivative", 3, "as", self.registry).holds)
        self.assertTrue(verify_identity("h-derivative", 3, "cube", self.registry).holds)
        self.assertTrue(verify_identity("boundary-agreement", 3, "pmas", self.registry).holds)

    def test_property_needs_family(self):
        with self.assertRaises(InputError):
            verify_identity("dehn-sommerville", 3, registry=self.registry)

    def test_unknown_identity(self):
        with self.assertRaises(InputError):
            verify_identity("thm9.99", 3, registry=self.registry)

    def test_multiwedge_keeps_bigrading(self):
        self.assertTrue(multiwedge_bigrading_check(polygon(5), [2, 1, 1, 1, 1]))


class TestClosure(unittest.TestCase):
    """Test d-closures, the flag truncation and direct families"""

    def setUp(self):
        """Set up test fixtures"""
        self.registry = PolytopeRegistry()

    def test_stellahedra_closure(self):
        report = d_closure("st", 3, registry=self.registry)
        self.assertEqual(report.complexity, 2)
        self.assertIn("st", report.families)
        self.assertEqual(report.to_json()["observed_complexity"], 2)

    def test_closure_cap(self):
        with self.assertRaises(LimitExceededError):
            d_closure("pe", 7, cap=6, registry=self.registry)

    def test_fc_of_square(self):
        K = fc_complex(polygon(4), "1")
        self.assertEqual(K.m, 7)
        self.assertTrue(is_flag(K))

    def test_fc_class(self):
        pentagon = self.registry.intern(polygon(5))
        result = fc(pentagon, registry=self.registry)
        self.assertEqual(result.dimension, 3)
        self.assertEqual(result.facets, 8)

    def test_fc_needs_flag(self):
        with self.assertRaises(PolytopeError):
            fc_complex(boundary_of_simplex(2), "1")

    def test_fc_unknown_facet(self):
        with self.assertRaises(PolytopeError):
            fc_complex(polygon(4), "9")

    def test_cover_ties_follow_provenance(self):
        catalog = {"cy": {1, 2}, "pe": {1, 2}, "pmas": {3}}
        self.assertEqual(_minimal_cover({1, 2, 3}, catalog, "pmas"), (["cy", "pmas"], set()))
        self.assertEqual(_minimal_cover({1, 2, 3}, catalog, "pmas", {2: "pe", 3: "pmas"}), (["pe", "pmas"], set()))

    def test_gdfp(self):
        self.assertTrue(gdfp_check("pmas", 3).holds)
        self.assertFalse(gdfp_check("simplex", 3).holds)
        self.assertTrue(gdfp_check("q", 3).holds)


class TestSeries(unittest.TestCase):
    """Test generating series and their identities"""

    def setUp(self):
        """Set up test fixtures"""
        self.registry = PolytopeRegistry()

    def test_build(self):
        series = series_build("pe", 3, registry=self.registry)
        self.assertEqual(series.coefficient(0, 1), self.registry.one())
        self.assertEqual(series.coefficient(0, 2), family_element(self.registry, "pe", 1).scale(Fraction(1, 2)))
        self.assertEqual([term["x"] for term in series.to_json()["terms"]], [1, 2, 3])

    def test_build_with_parameter(self):
        series = series_build("pe", 2, with_q=True, registry=self.registry)
        self.assertFalse(series.coefficient(1, 2).is_zero())

    def test_order_cap(self):
        with self.assertRaises(LimitExceededError):
            series_build("pe", 7, registry=self.registry, cap=6)
        with self.assertRaises(InputError):
            series_build("pe", 0, registry=self.registry)

    def test_unknown_family(self):
        with self.assertRaises(InputError):
            series_build("cube", 3, registry=self.registry)

    def test_identities_at_three(self):
        for identity in ("dpe", "dst", "thm4.14-pe", "thm4.14-st"):
            report = series_verify(identity, 3, self.registry)
            self.assertTrue(report.holds, identity)
            self.assertEqual(report.to_json()["mismatches"], [])

    def test_remaining_identities_at_four(self):
        for identity in ("thm4.12-pgamma", "thm4.12-pmas", "pe-q", "st-q", "thm4.14-pgamma", "thm4.14-pmas"):
            report = series_verify(identity, 4, self.registry)
            self.assertTrue(report.holds, identity)


@pytest.mark.slow
class TestRingSlow(unittest.TestCase):
    """Higher dimensions"""

    def setUp(self):
        """Set up test fixtures"""
        self.registry = PolytopeRegistry()

    def test_formulas_at_four(self):
        for identity in ("lemma4.9", "thm4.10"):
            self.assertTrue(verify_identity(identity, 4, registry=self.registry).holds, identity)

    def test_pmas_closure(self):
        report = d_closure("pmas", 4, registry=self.registry)
        self.assertEqual(report.complexity, 4)
        self.assertEqual(sorted(report.families), ["pe", "pgamma", "pmas", "st"])

    def test_pmas_closure_at_five(self):
        report = d_closure("pmas", 5, registry=self.registry)
        self.assertEqual(sorted(report.families), ["pe", "pgamma", "pmas", "st"])

    def test_cyclohedra_closure(self):
        report = d_closure("cy", 4, registry=self.registry)
        self.assertEqual(sorted(report.families), ["as", "cy"])
        self.assertEqual(report.complexity, 2)

    def test_series_at_five(self):
        self.assertTrue(series_verify("dpe", 5, self.registry).holds)
        self.assertTrue(series_verify("thm4.12-pmas", 5, self.registry).holds)


if __name__ == "__main__":
    unittest.main()
