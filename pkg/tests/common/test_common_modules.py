#!/usr/bin/env python3
"""
Common Module Tests
Test shared fields, elimination, errors and report base classes
"""

import io
import json
import os
import sys
import unittest
from fractions import Fraction

# Add project root to path
sys.path.insert(
    0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
)

from cli.config.cli_config import MomentAngleConfig
from cli.reports.cli_reports import BettiReportManager, ComplexReportManager
from common.algebra.elimination import EchelonBasis, integer_rank, nullspace
from common.algebra.fields import GF2, RATIONALS, FieldSpec
from common.errors import (FieldError, InputError, LimitExceededError, MasseyError, ToolkitError,
                           VerificationError)


class TestFieldSpec(unittest.TestCase):
    """Test coefficient field parsing and arithmetic"""

    def test_parse_rational(self):
        for text in ("Q", "rational", "qq"):
            self.assertEqual(FieldSpec.parse(text), RATIONALS)

    def test_parse_prime(self):
        self.assertEqual(FieldSpec.parse("GF(2)"), GF2)
        self.assertEqual(FieldSpec.parse("gf3").p, 3)
        self.assertEqual(FieldSpec.parse("5").name, "GF(5)")

    def test_parse_failures(self):
        with self.assertRaises(FieldError):
            FieldSpec.parse("reals")
        with self.assertRaises(FieldError):
            FieldSpec.prime(6)

    def test_arithmetic(self):
        self.assertEqual(RATIONALS.div(1, 3), Fraction(1, 3))
        self.assertEqual(GF2.add(1, 1), 0)
        self.assertEqual(FieldSpec.prime(5).inv(2), 3)
        self.assertEqual(FieldSpec.prime(3).coerce(Fraction(1, 2)), 2)

    def test_format(self):
        self.assertEqual(RATIONALS.format(Fraction(3, 2)), "3/2")
        self.assertEqual(GF2.format(3), "1 mod 2")


class TestElimination(unittest.TestCase):
    """Test exact ranks and echelon bases"""

    def test_integer_rank_depends_on_field(self):
        matrix = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
        self.assertEqual(integer_rank(matrix, RATIONALS), 3)
        self.assertEqual(integer_rank(matrix, GF2), 2)

    def test_empty_matrix(self):
        self.assertEqual(integer_rank([], RATIONALS), 0)

    def test_echelon_membership_and_expression(self):
        basis = EchelonBasis(RATIONALS)
        self.assertIsNone(basis.add({0: 1, 1: 1}, tag="a"))
        self.assertIsNone(basis.add({1: 1}, tag="b"))
        self.assertEqual(basis.rank, 2)
        self.assertTrue(basis.contains({0: 2}))
        self.assertEqual(basis.express({0: 2}), {"a": 2, "b": -2})
        self.assertFalse(basis.contains({2: 1}))

    def test_nullspace(self):
        relations = nullspace([{0: 1}, {1: 1}, {0: 1, 1: 1}], RATIONALS)
        self.assertEqual(len(relations), 1)
        self.assertEqual(set(relations[0]), {0, 1, 2})


class TestErrors(unittest.TestCase):
    """Test exit codes carried by the error hierarchy"""

    def test_exit_codes(self):
        self.assertEqual(InputError("x").exit_code, 3)
        self.assertEqual(MasseyError("x").exit_code, 3)
        self.assertEqual(LimitExceededError("x").exit_code, 2)
        self.assertEqual(VerificationError("x").exit_code, 1)

    def test_input_errors_are_value_errors(self):
        self.assertIsInstance(FieldError("x"), ValueError)
        self.assertIsInstance(FieldError("x"), ToolkitError)


class TestBaseReportManager(unittest.TestCase):
    """Test base report manager using the complex and betti managers"""

    def setUp(self):
        """Set up test fixtures"""
        self.stream = io.StringIO()
        self.manager = ComplexReportManager(MomentAngleConfig(), self.stream)

    def test_logger_setup(self):
        """Test logger is set up correctly"""
        self.assertIsNotNone(self.manager.logger)
        self.assertEqual(self.manager.logger.name, "mac_complex")

    def test_publish_json(self):
        payload = {"command": "complex", "m": 4, "dimension": 1}
        self.assertTrue(self.manager.publish(payload, as_json=True))
        self.assertEqual(json.loads(self.stream.getvalue()), payload)
        self.assertEqual(self.manager.published, [payload])

    def test_publish_table(self):
        self.manager.publish({"command": "complex", "m": 4, "minimal_nonfaces": [["1", "3"], ["2", "4"]]})
        text = self.stream.getvalue()
        self.assertIn("minimal non-face", text)
        self.assertIn("1 3", text)
        self.assertNotIn("command", text)

    def test_betti_table(self):
        stream = io.StringIO()
        manager = BettiReportManager(MomentAngleConfig(), stream)
        manager.publish({"bigraded": [{"-i": 0, "2j": 0, "rank": 1}], "field": "Q", "poincare": "t**6 + 2*t**3 + 1"})
        self.assertIn("Poincaré polynomial of Z_K over Q", stream.getvalue())

    def test_table_layout(self):
        table = ComplexReportManager._table(["a", "bb"], [(1, 2), (333, 4)])
        lines = table.splitlines()
        self.assertEqual(len(lines), 4)
        self.assertTrue(lines[1].startswith("---"))


if __name__ == "__main__":
    unittest.main()
