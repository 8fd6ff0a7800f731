#!/usr/bin/env python3
"""
Tor-Algebra Module Tests
Test the Koszul DGA R(K), its cohomology classes and quasitoric presentations
"""

import os
import sys
import unittest
from fractions import Fraction

# Add project root to path
sys.path.insert(
    0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
)

from common.algebra.fields import GF2, RATIONALS
from common.errors import InputError, PolytopeError
from complexes.complex import polygon, simplex
from hochster.tables import multigraded_betti
from tor_algebra.classes import (CohomologyClass, class_from_labels, class_space, coboundary_solve, restriction,
                                 top_product_certificate, total_cohomology_dimensions, unit_class)
from tor_algebra.dga import Bidegree, DGAElement, basis_index, dga_basis, koszul_sign, monomial, unit
from tor_algebra.quasitoric import quasitoric_presentation

PENTAGON_MATRIX = [[1, 0], [0, 1], [-1, 1], [-1, 0], [0, -1]]


class TestKoszulDGA(unittest.TestCase):
    """Test arithmetic in R(K)"""

    def setUp(self):
        """Set up test fixtures"""
        self.K = polygon(4)

    def test_differential_of_u(self):
        u1 = monomial(self.K, RATIONALS, u=["1"])
        self.assertEqual(u1.d(), monomial(self.K, RATIONALS, v=["1"]))

    def test_d_squared_is_zero(self):
        x = monomial(self.K, RATIONALS, u=["1", "2"])
        self.assertTrue(x.d().d().is_zero())

    def test_nonface_vanishes(self):
        self.assertTrue(monomial(self.K, RATIONALS, v=["1", "3"]).is_zero())

    def test_relations(self):
        v1 = monomial(self.K, RATIONALS, v=["1"])
        u1 = monomial(self.K, RATIONALS, u=["1"])
        self.assertTrue((v1 * u1).is_zero())
        self.assertTrue((u1 * u1).is_zero())

    def test_exterior_sign(self):
        u1 = monomial(self.K, RATIONALS, u=["1"])
        u2 = monomial(self.K, RATIONALS, u=["2"])
        self.assertEqual(u2 * u1, -(u1 * u2))
        self.assertEqual(koszul_sign(0b10, 0b01), -1)

    def test_leibniz(self):
        x = monomial(self.K, RATIONALS, u=["1"])
        y = monomial(self.K, RATIONALS, u=["2"])
        self.assertEqual((x * y).d(), x.d() * y + x.bar() * y.d())

    def test_inhomogeneous_rejected(self):
        with self.assertRaises(InputError):
            DGAElement(self.K, RATIONALS, {(0b0001, 0): 1, (0, 0b0001): 1})

    def test_bidegree_bounds(self):
        with self.assertRaises(InputError):
            Bidegree(3, 0b11)
        self.assertEqual(Bidegree(1, 0b101).total_degree, 3)

    def test_format(self):
        x = monomial(self.K, RATIONALS, u=["3"], v=["1"], coefficient=Fraction(1, 2))
        self.assertEqual(x.format(), "(1/2)v1u3")


class TestCohomologyClasses(unittest.TestCase):
    """Test classes, products and restriction"""

    def setUp(self):
        """Set up test fixtures"""
        self.K = polygon(4)
        self.alpha = CohomologyClass(monomial(self.K, RATIONALS, u=["3"], v=["1"]))
        self.beta = CohomologyClass(monomial(self.K, RATIONALS, u=["4"], v=["2"]))

    def test_dimensions_match_hochster(self):
        expected = multigraded_betti(self.K).multigraded
        self.assertEqual(total_cohomology_dimensions(self.K, RATIONALS), expected)

    def test_noncocycle_rejected(self):
        with self.assertRaises(InputError):
            CohomologyClass(monomial(self.K, RATIONALS, u=["1"]))

    def test_class_is_nonzero(self):
        self.assertFalse(self.alpha.is_zero())
        self.assertEqual(self.alpha.total_degree, 3)

    def test_opposite_representatives_agree(self):
        other = CohomologyClass(monomial(self.K, RATIONALS, u=["1"], v=["3"]))
        self.assertEqual(self.alpha, other)
        space = class_space(self.K, RATIONALS, Bidegree(1, self.K.mask(["1", "3"])))
        self.assertEqual(space.dimension, 1)
        self.assertTrue(space.is_coboundary(self.alpha.representative - other.representative))
        self.assertFalse(space.is_coboundary(self.alpha.representative + other.representative))

    def test_caches_are_bounded(self):
        for cached in (dga_basis, basis_index, class_space):
            self.assertIsNotNone(cached.cache_info().maxsize)

    def test_top_product(self):
        certificate = top_product_certificate(self.K, [self.alpha, self.beta])
        self.assertTrue(certificate.holds)
        self.assertEqual(certificate.degree, 6)
        self.assertEqual(certificate.top_bidegree, (2, self.K.full_mask))

    def test_top_product_misses(self):
        certificate = top_product_certificate(self.K, [self.alpha])
        self.assertFalse(certificate.holds)
        self.assertEqual(certificate.reason, "product misses the top bidegree")

    def test_solve(self):
        y = monomial(self.K, RATIONALS, v=["1"])
        x = coboundary_solve(self.K, y)
        self.assertEqual(x.d(), y)

    def test_unit(self):
        one = unit_class(self.K, GF2)
        self.assertFalse(one.is_zero())
        self.assertEqual(one.bidegree, Bidegree(0, 0))

    def test_class_from_labels(self):
        gamma = class_from_labels(self.K, RATIONALS, [(["3"], ["1"], 1)])
        self.assertEqual(gamma, self.alpha)

    def test_restriction(self):
        image = restriction(self.K, ["1", "2", "3"]).on_class(self.alpha)
        self.assertFalse(image.is_zero())
        self.assertIsNone(restriction(self.K, ["1", "2"]).on_class(self.alpha))

    def test_simplex_has_trivial_cohomology(self):
        self.assertEqual(total_cohomology_dimensions(simplex(2), RATIONALS), {(0, 0): 1})

    def test_unit_element(self):
        self.assertEqual(unit(self.K, RATIONALS).bidegree, Bidegree(0, 0))


class TestQuasitoric(unittest.TestCase):
    """Test quasitoric presentations"""

    def test_pentagon(self):
        ring = quasitoric_presentation(polygon(5), PENTAGON_MATRIX)
        self.assertEqual(ring.dimensions, [1, 3, 1])
        self.assertEqual(len(ring.squares), 5)
        self.assertEqual(ring.to_json()["dimensions"], {"0": 1, "2": 3, "4": 1})

    def test_square(self):
        ring = quasitoric_presentation(polygon(4), [[1, 0], [0, 1], [-1, 0], [0, -1]])
        self.assertEqual(ring.dimensions, [1, 2, 1])
        self.assertEqual(ring.linear_forms[0], {"1": 1, "3": -1})

    def test_bad_determinant(self):
        with self.assertRaises(PolytopeError):
            quasitoric_presentation(polygon(4), [[1, 0], [1, 0], [-1, 0], [0, -1]])

    def test_bad_shape(self):
        with self.assertRaises(PolytopeError):
            quasitoric_presentation(polygon(4), [[1, 0]])


if __name__ == "__main__":
    unittest.main()
