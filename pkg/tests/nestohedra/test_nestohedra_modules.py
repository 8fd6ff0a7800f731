#!/usr/bin/env python3
"""
Nestohedra Module Tests
Test building sets, nested set complexes and the polytope families built from them
"""

import os
import sys
import unittest

import pytest

# Add project root to path
sys.path.insert(
    0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
)

from common.errors import BuildingSetError, InputError
from complexes.canonical import is_isomorphic
from complexes.complex import full_subcomplex, is_flag, is_pseudomanifold_sphere, polygon
from nestohedra.building_set import (BuildingSet, GraphSpec, building_set_certificate, building_set_sum,
                                     components, contraction, disjoint_union, graphical, restriction,
                                     simplex_building_set, substitution, validate)
from nestohedra.families import (associahedron_B, cube_B, expected_pmas_facets, expected_q_facets,
                                 family_building_set, family_complex, fmas_construction, get_family,
                                 permutohedron_B, pgamma_B, pmas_B, q_subdivision_agrees, simplex_B,
                                 two_truncated_cube_Q)
from nestohedra.nested_complex import (boundary_terms, contraction_intersection_report, cube_facet_vertices,
                                       nestohedron_nerve, q_copy_vertices, restriction_vertices)


class TestBuildingSets(unittest.TestCase):
    """Test validation and the basic operations on building sets"""

    def test_graphical_sets_are_valid(self):
        for B in (permutohedron_B(3), associahedron_B(3), cube_B(3), simplex_B(3)):
            self.assertTrue(validate(B).ok, repr(B))

    def test_missing_singleton(self):
        report = validate(BuildingSet.on_range(3, [[1], [2], [1, 2, 3]]))
        self.assertFalse(report.ok)
        self.assertEqual(report.missing_singletons, [3])

    def test_union_failure(self):
        report = validate(BuildingSet.on_range(3, [[1], [2], [3], [1, 2], [2, 3]]))
        self.assertFalse(report.ok)
        self.assertEqual(report.union_failures, [((1, 2), (2, 3))])
        self.assertEqual(report.to_json()["union_failures"], [[[1, 2], [2, 3]]])

    def test_element_outside_ground(self):
        with self.assertRaises(BuildingSetError):
            BuildingSet.on_range(2, [[1], [3]])

    def test_restriction(self):
        B = permutohedron_B(2)
        self.assertEqual(restriction(B, [1, 2]), simplex_building_set([1, 2]))
        with self.assertRaises(BuildingSetError):
            restriction(associahedron_B(2), [1, 3])

    def test_contraction(self):
        contracted = contraction(associahedron_B(2), [1])
        self.assertEqual(contracted.ground, (2, 3))
        self.assertEqual(contracted, simplex_building_set([2, 3]))

    def test_graphical_components(self):
        B = graphical(GraphSpec(3, ((1, 2),)))
        self.assertFalse(B.is_connected())
        self.assertEqual(sorted(B.elements(S) for S in components(B)), [(1, 2), (3,)])
        self.assertEqual(nestohedron_nerve(B).m, 2)

    def test_graph_with_loop(self):
        with self.assertRaises(BuildingSetError):
            graphical(GraphSpec(2, ((1, 1),)))

    def test_certificate_ignores_labels(self):
        path = graphical(GraphSpec(3, ((2, 1), (1, 3))))
        self.assertEqual(building_set_certificate(path), building_set_certificate(associahedron_B(2)))
        self.assertNotEqual(building_set_certificate(path), building_set_certificate(permutohedron_B(2)))

    def test_substitution(self):
        B = substitution(simplex_B(1), [simplex_B(1), simplex_B(1)])
        self.assertEqual(B.size, 4)
        self.assertEqual(len(B), 7)
        self.assertTrue(validate(B).ok)
        self.assertTrue(B.is_connected())

    def test_substitution_arity(self):
        with self.assertRaises(BuildingSetError):
            substitution(simplex_B(1), [simplex_B(1)])

    def test_disjoint_union(self):
        B = disjoint_union(simplex_B(1), simplex_B(1))
        self.assertEqual(B.ground, (1, 2, 3, 4))
        self.assertEqual(len(B), 6)
        self.assertFalse(B.is_connected())


class TestBuildingSetSums(unittest.TestCase):
    """Test B_1 + B_2"""

    def test_undefined_sum(self):
        first = BuildingSet.on_range(4, [[1], [2], [3], [4], [1, 2], [1, 2, 3, 4]])
        second = BuildingSet.on_range(4, [[1], [2], [3], [4], [2, 3], [1, 2, 3, 4]])
        outcome = building_set_sum(first, second)
        self.assertFalse(outcome.defined)
        self.assertIsNone(outcome.result)
        self.assertEqual(outcome.witness, ((1, 2), (2, 3)))
        self.assertFalse(outcome.sufficient_condition)

    def test_summands_must_meet_in_simplex(self):
        with self.assertRaises(BuildingSetError):
            building_set_sum(permutohedron_B(2), permutohedron_B(2))

    def test_pmas_three(self):
        B = pmas_B(3)
        self.assertEqual(len(B), 9)
        self.assertIn([1, 3], B)
        self.assertNotIn([2, 3], B)


class TestNestedComplexes(unittest.TestCase):
    """Test nerves of nestohedra"""

    def test_small_nerves(self):
        self.assertTrue(is_isomorphic(nestohedron_nerve(permutohedron_B(2)), polygon(6)))
        self.assertTrue(is_isomorphic(nestohedron_nerve(associahedron_B(2)), polygon(5)))
        self.assertTrue(is_isomorphic(nestohedron_nerve(cube_B(2)), polygon(4)))
        self.assertEqual(nestohedron_nerve(simplex_B(2)).m, 3)

    def test_permutohedron_vertices(self):
        K = nestohedron_nerve(permutohedron_B(3))
        self.assertEqual(K.m, 14)
        self.assertEqual(K.dimension, 2)

    def test_associahedron_vertices(self):
        self.assertEqual(nestohedron_nerve(associahedron_B(3)).m, 9)

    def test_boundary_terms(self):
        B = associahedron_B(3)
        terms = boundary_terms(B)
        self.assertEqual(len(terms), len(B) - 1)
        first = terms[0].to_json(B)
        self.assertEqual(first["S"], [1])
        self.assertEqual(first["restriction"]["ground"], [1])

    def test_restriction_vertices(self):
        self.assertEqual(restriction_vertices(associahedron_B(3), [1, 2]), ["{1}", "{2}"])

    def test_cube_facet_vertices(self):
        vertices = cube_facet_vertices(3)
        self.assertEqual(vertices, ["{1}", "{1,2}", "{1,2,3}", "{2}", "{3}", "{4}"])
        K = family_complex("pmas", 3)
        self.assertTrue(set(vertices) <= set(K.ground))
        with self.assertRaises(BuildingSetError):
            cube_facet_vertices(1)

    def test_q_copy_vertices(self):
        self.assertEqual(q_copy_vertices(3, 2), ["1", "3", "4", "6"])
        with self.assertRaises(BuildingSetError):
            q_copy_vertices(3, 4)

    def test_contraction_intersection(self):
        report = contraction_intersection_report(pmas_B(3), [1], [[2], [4]])
        self.assertEqual(report["shared"], [[2], [4]])
        self.assertEqual(report["dimension_in_nested_complex"], 1)
        self.assertEqual(report["dimension_in_contraction"], 0)

    def test_contraction_intersection_in_four(self):
        report = contraction_intersection_report(pmas_B(4), [1, 3], [[2], [4]])
        self.assertEqual(report["dimension_in_nested_complex"], 1)
        self.assertEqual(report["dimension_in_contraction"], 0)
        self.assertEqual(len(report["in_contraction"]["vertices"]), 2)

    def test_contraction_intersection_rejects_outsiders(self):
        with self.assertRaises(BuildingSetError):
            contraction_intersection_report(pmas_B(3), [1], [[2, 3]])


class TestFamilies(unittest.TestCase):
    """Test the named families and their facet counts"""

    def test_pmas_facets(self):
        for n in (2, 3):
            self.assertEqual(family_complex("pmas", n).m, expected_pmas_facets(n))
        self.assertEqual(expected_pmas_facets(3), 8)

    def test_q_facets(self):
        self.assertEqual(two_truncated_cube_Q(3).m, expected_q_facets(3))
        self.assertEqual(expected_q_facets(3), 8)

    def test_q3_is_pmas3(self):
        self.assertTrue(is_isomorphic(family_complex("pmas", 3), two_truncated_cube_Q(3)))

    def nonface_supports(self, K):
        return {frozenset(K.labels(mask)) for mask in K.minimal_nonfaces}

    def test_q3_minimal_nonfaces(self):
        expected = [
            ("1", "4"), ("1", "5"), ("2", "5"), ("2", "6"), ("3", "6"),
            ("1,5", "2"), ("1,5", "4"), ("2,6", "3"), ("2,6", "5"),
            ("1,5", "2,6"),
        ]
        K = two_truncated_cube_Q(3)
        self.assertEqual(self.nonface_supports(K), {frozenset(pair) for pair in expected})
        self.assertTrue(is_pseudomanifold_sphere(K))

    def test_q4_minimal_nonfaces(self):
        expected = [
            ("1", "5"), ("1", "6"), ("1", "7"), ("2", "6"), ("2", "7"), ("2", "8"), ("3", "7"), ("3", "8"), ("4", "8"),
            ("1,6", "2"), ("1,6", "5"), ("2,7", "3"), ("2,7", "6"), ("3,8", "4"), ("3,8", "7"),
            ("1,7", "2"), ("1,7", "3"), ("1,7", "5"), ("1,7", "6"),
            ("2,8", "3"), ("2,8", "4"), ("2,8", "6"), ("2,8", "7"),
            ("1,6", "2,7"), ("1,6", "2,8"), ("2,7", "3,8"), ("1,7", "3,8"), ("1,7", "2,8"),
        ]
        K = two_truncated_cube_Q(4)
        self.assertEqual(self.nonface_supports(K), {frozenset(pair) for pair in expected})
        self.assertTrue(is_pseudomanifold_sphere(K))

    def test_cube_facets_in_pmas3(self):
        whole = full_subcomplex(family_complex("pmas", 3), cube_facet_vertices(3))
        cube = full_subcomplex(two_truncated_cube_Q(3), [str(v) for v in range(1, 7)])
        self.assertTrue(is_isomorphic(whole, cube))

    def test_q_by_subdivision(self):
        self.assertTrue(q_subdivision_agrees(3))

    def test_flag_families(self):
        self.assertTrue(is_flag(family_complex("pmas", 3)))
        self.assertTrue(is_flag(nestohedron_nerve(pgamma_B(3))))
        self.assertTrue(is_flag(two_truncated_cube_Q(3)))

    def test_low_dimensions(self):
        self.assertEqual(pmas_B(0).size, 1)
        self.assertEqual(family_complex("pmas", 0).m, 0)

    def test_unknown_family(self):
        with self.assertRaises(InputError):
            get_family("dodecahedron")

    def test_q_has_no_building_set(self):
        with self.assertRaises(InputError):
            family_building_set("q", 3)

    def test_fmas_construction(self):
        construction = fmas_construction([2, 2], 2)
        data = construction.to_json()
        self.assertEqual(data["vertices"], 10)
        self.assertIsNone(data["wedge_vertices"])
        self.assertTrue(construction.connectivity_ok)

    def test_fmas_wedge(self):
        construction = fmas_construction([2, 2], 3)
        self.assertEqual(construction.wedge_parameter, 2)
        self.assertEqual(construction.wedge.m, 16)
        self.assertEqual(construction.wedge_q_connectivity, 3)
        self.assertTrue(construction.connectivity_ok)

    def test_fmas_bad_sizes(self):
        with self.assertRaises(InputError):
            fmas_construction([1, 2], 2)


@pytest.mark.slow
class TestFamiliesSlow(unittest.TestCase):
    """Larger members of the families"""

    def test_pmas_four(self):
        self.assertEqual(family_complex("pmas", 4).m, expected_pmas_facets(4))

    def test_q_four(self):
        self.assertEqual(two_truncated_cube_Q(4).m, expected_q_facets(4))
        self.assertTrue(q_subdivision_agrees(4))

    def test_cube_facets_in_pmas4(self):
        whole = full_subcomplex(family_complex("pmas", 4), cube_facet_vertices(4))
        cube = full_subcomplex(two_truncated_cube_Q(4), [str(v) for v in range(1, 9)])
        self.assertTrue(is_isomorphic(whole, cube))


if __name__ == "__main__":
    unittest.main()
