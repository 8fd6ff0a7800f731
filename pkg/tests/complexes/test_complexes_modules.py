#!/usr/bin/env python3
"""
Complexes Module Tests
Test simplicial complexes, constructions, canonical forms and the JSON format
"""

import json
import os
import sys
import tempfile
import unittest

# Add project root to path
sys.path.insert(
    0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
)

from common.errors import ComplexError
from complexes.canonical import canonical_form, is_isomorphic
from complexes.complex import (SimplicialComplex, boundary_of_simplex, flag_complex, from_minimal_nonfaces,
                               full_subcomplex, is_flag, is_pseudomanifold_sphere, link, point_nerve, polygon,
                               q_connectivity, simplex, stanley_reisner_ideal, triangular_prism)
from complexes.constructions import (face_retraction_test, join, join_decompose, multiwedge, permute, relabel,
                                     retraction_report, stellar_subdivision)
from complexes.json_format import complex_from_dict, dump_complex, load_complex


class TestSimplicialComplex(unittest.TestCase):
    """Test the complex type and its face data"""

    def setUp(self):
        """Set up test fixtures"""
        self.square = polygon(4)
        self.pentagon = polygon(5)

    def test_square_nonfaces(self):
        self.assertEqual(stanley_reisner_ideal(self.square), [("1", "3"), ("2", "4")])
        self.assertTrue(is_flag(self.square))
        self.assertEqual(q_connectivity(self.square), 1)

    def test_f_vector(self):
        self.assertEqual(self.pentagon.f_vector, (1, 5, 5))
        self.assertEqual(boundary_of_simplex(3).f_vector, (1, 4, 6, 4))

    def test_boundary_of_simplex_not_flag(self):
        K = boundary_of_simplex(2)
        self.assertFalse(is_flag(K))
        self.assertEqual(stanley_reisner_ideal(K), [("1", "2", "3")])
        self.assertEqual(q_connectivity(K), 2)

    def test_simplex_has_no_nonfaces(self):
        self.assertEqual(q_connectivity(simplex(2)), 3)
        self.assertEqual(stanley_reisner_ideal(simplex(2)), [])

    def test_point_nerve(self):
        K = point_nerve()
        self.assertEqual(K.m, 0)
        self.assertEqual(K.dimension, -1)
        self.assertTrue(is_pseudomanifold_sphere(K))

    def test_ghost_vertex_rejected(self):
        with self.assertRaises(ComplexError):
            SimplicialComplex(["1", "2", "3"], [0b011])

    def test_duplicate_labels_rejected(self):
        with self.assertRaises(ComplexError):
            SimplicialComplex(["1", "1"], [0b01, 0b10])

    def test_unknown_vertex(self):
        with self.assertRaises(ComplexError):
            self.square.mask(["9"])

    def test_from_minimal_nonfaces(self):
        K = from_minimal_nonfaces(["1", "2", "3", "4"], [("1", "3"), ("2", "4")])
        self.assertEqual(K, self.square)

    def test_flag_complex(self):
        K = flag_complex(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
        self.assertEqual(K.dimension, 2)

    def test_sphere_check(self):
        self.assertTrue(is_pseudomanifold_sphere(self.pentagon))
        self.assertTrue(is_pseudomanifold_sphere(triangular_prism()))
        self.assertFalse(is_pseudomanifold_sphere(simplex(2)))

    def test_link_and_full_subcomplex(self):
        L = link(self.pentagon, ["1"])
        self.assertEqual(sorted(L.ground), ["2", "5"])
        self.assertEqual(L.dimension, 0)
        F = full_subcomplex(self.pentagon, ["1", "2", "3"])
        self.assertEqual(F.f_vector, (1, 3, 2))

    def test_link_of_nonface(self):
        with self.assertRaises(ComplexError):
            link(self.square, ["1", "3"])


class TestConstructions(unittest.TestCase):
    """Test joins, multiwedges, subdivisions and decompositions"""

    def test_join_of_polygons(self):
        K = join(polygon(4), relabel(polygon(3), {"1": "a", "2": "b", "3": "c"}))
        self.assertEqual(K.m, 7)
        self.assertEqual(K.dimension, 3)
        self.assertTrue(is_pseudomanifold_sphere(K))

    def test_join_label_clash(self):
        with self.assertRaises(ComplexError):
            join(polygon(4), polygon(3))

    def test_join_decompose_square(self):
        factors = join_decompose(polygon(4))
        self.assertEqual([F.m for F in factors], [2, 2])
        self.assertEqual(len(join_decompose(polygon(5))), 1)

    def test_multiwedge_keeps_m_minus_n(self):
        K = polygon(5)
        W = multiwedge(K, [2, 1, 1, 1, 1])
        self.assertEqual(W.m, 6)
        self.assertEqual(W.dimension, 2)
        self.assertEqual(W.m - (W.dimension + 1), K.m - (K.dimension + 1))
        self.assertTrue(is_pseudomanifold_sphere(W))

    def test_multiwedge_identity(self):
        self.assertEqual(multiwedge(polygon(4), [1, 1, 1, 1]), polygon(4))

    def test_multiwedge_bad_vector(self):
        with self.assertRaises(ComplexError):
            multiwedge(polygon(4), [1, 2])

    def test_stellar_subdivision_of_edge(self):
        K = stellar_subdivision(polygon(4), ["1", "2"], "x")
        self.assertEqual(K.m, 5)
        self.assertTrue(is_isomorphic(K, polygon(5)))

    def test_stellar_subdivision_of_nonface(self):
        with self.assertRaises(ComplexError):
            stellar_subdivision(polygon(4), ["1", "3"])

    def test_retraction_on_flag_sphere(self):
        report = retraction_report(polygon(5))
        self.assertEqual(report["failed"], [])
        self.assertEqual(len(report["passed"]), 10)

    def test_retraction_fails_on_boundary_of_triangle(self):
        self.assertFalse(face_retraction_test(boundary_of_simplex(2), ["1"]))


class TestCanonicalForm(unittest.TestCase):
    """Test isomorphism certificates"""

    def test_relabelled_pentagon(self):
        K = permute(polygon(5), [2, 0, 4, 1, 3])
        self.assertTrue(is_isomorphic(K, polygon(5)))
        self.assertEqual(canonical_form(K).certificate, canonical_form(polygon(5)).certificate)

    def test_non_flag_complexes(self):
        self.assertTrue(is_isomorphic(boundary_of_simplex(3), boundary_of_simplex(3, ["a", "b", "c", "d"])))
        self.assertFalse(is_isomorphic(triangular_prism(), boundary_of_simplex(3)))

    def test_square_versus_pentagon(self):
        self.assertFalse(is_isomorphic(polygon(4), polygon(5)))

    def test_point(self):
        self.assertEqual(canonical_form(point_nerve()).certificate, ("point",))


class TestJsonFormat(unittest.TestCase):
    """Test reading and writing complexes"""

    def test_round_trip_through_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "pentagon.json")
            dump_complex(polygon(5), path)
            self.assertEqual(load_complex(path), polygon(5))

    def test_malformed(self):
        with self.assertRaises(ComplexError):
            complex_from_dict({"vertices": ["1"]})

    def test_unreadable(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as handle:
            handle.write("{not json")
        try:
            with self.assertRaises(ComplexError):
                load_complex(handle.name)
        finally:
            os.unlink(handle.name)

    def test_to_json_is_sorted(self):
        data = polygon(4).to_json()
        self.assertEqual(data["vertices"], ["1", "2", "3", "4"])
        self.assertEqual(data["maximal_faces"][0], ["1", "2"])
        self.assertEqual(json.loads(json.dumps(data)), data)


if __name__ == "__main__":
    unittest.main()
