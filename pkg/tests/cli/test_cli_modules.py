#!/usr/bin/env python3
"""
CLI Module Tests
Test toolkit helpers, subcommand payloads and report rendering
"""

import json
import os
import sys
import tempfile
import unittest
from io import StringIO

# Add project root to path
sys.path.insert(
    0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
)

from cli.config.cli_config import MomentAngleConfig
from cli.reports.cli_reports import REPORT_MANAGERS, BettiReportManager, SeriesReportManager
from cli.toolkit import MomentAngleToolkit, load_building_set, parse_classes, parse_integers, parse_range
from common.algebra.fields import RATIONALS
from common.config.base_config import Settings
from common.errors import BuildingSetError, InputError, MasseyError
from complexes.complex import polygon
from moment_angle import build_parser


class TestHelpers(unittest.TestCase):
    """Test argument parsing helpers"""

    def test_parse_range(self):
        self.assertEqual(parse_range("2..4", [3]), [2, 3, 4])
        self.assertEqual(parse_range("5", [3]), [5])
        self.assertEqual(parse_range(None, [3]), [3])
        with self.assertRaises(InputError):
            parse_range("two", [3])

    def test_parse_integers(self):
        self.assertEqual(parse_integers("2, 1,1", "--J"), [2, 1, 1])
        self.assertEqual(parse_integers(None, "--J"), [])
        self.assertEqual(parse_integers("3,4", "--transfer", count=2), [3, 4])
        with self.assertRaises(InputError):
            parse_integers("a,b", "--J")
        with self.assertRaises(InputError):
            parse_integers("3", "--transfer", count=2)

    def test_parse_classes(self):
        classes = parse_classes(polygon(4), RATIONALS, "1|3; 2|4")
        self.assertEqual(len(classes), 2)
        self.assertEqual(classes[0].total_degree, 3)

    def test_parse_classes_needs_separator(self):
        with self.assertRaises(MasseyError):
            parse_classes(polygon(4), RATIONALS, "1+3")

    def test_load_building_set(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "path.json")
            with open(path, "w", encoding="utf-8") as handle:
                json.dump({"ground": [1, 2, 3], "sets": [[1], [2], [3], [1, 2], [2, 3], [1, 2, 3]]}, handle)
            B = load_building_set(path)
        self.assertEqual(len(B), 6)
        self.assertTrue(B.is_connected())

    def test_load_building_set_missing_key(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as handle:
            json.dump({"ground": [1]}, handle)
        try:
            with self.assertRaises(BuildingSetError):
                load_building_set(handle.name)
        finally:
            os.unlink(handle.name)


class TestToolkit(unittest.TestCase):
    """Test subcommand payloads through the toolkit"""

    def setUp(self):
        """Set up test fixtures"""
        self.stream = StringIO()
        self.toolkit = MomentAngleToolkit(Settings(order=3), MomentAngleConfig(), True, self.stream)
        self.parser = build_parser()

    def run_command(self, argv):
        return self.toolkit.run(self.parser.parse_args(argv))

    def last(self, command):
        return self.toolkit.reports[command].published[-1]

    def test_complex_retraction(self):
        self.assertEqual(self.run_command(["complex", "retraction", "--family", "pe", "--n", "2"]), 0)
        payload = self.last("complex")
        self.assertEqual(payload["retraction"]["failing"], [])
        self.assertEqual(payload["source"], "Pe^2")

    def test_complex_decompose(self):
        self.assertEqual(self.run_command(["complex", "decompose", "--family", "cube", "--n", "2"]), 0)
        self.assertEqual([factor["m"] for factor in self.last("complex")["factors"]], [2, 2])

    def test_complex_multiwedge(self):
        self.run_command(["complex", "multiwedge", "--family", "as", "--n", "2", "--J", "2,1,1,1,1"])
        payload = self.last("complex")
        self.assertEqual(payload["wedge_m"], 6)
        self.assertTrue(payload["m_minus_n_preserved"])

    def test_nesto_validate(self):
        self.run_command(["nesto", "validate", "--family", "pmas", "--n", "3"])
        self.assertTrue(self.last("nesto")["ok"])

    def test_nesto_boundary(self):
        self.run_command(["nesto", "boundary", "--family", "as", "--n", "2"])
        self.assertEqual(len(self.last("nesto")["terms"]), 5)

    def test_nesto_needs_source(self):
        with self.assertRaises(InputError):
            self.run_command(["nesto", "show", "--family", "pe"])

    def test_nesto_fmas(self):
        self.run_command(["nesto", "fmas", "--sizes", "2,2", "--l", "2"])
        self.assertEqual(self.last("nesto")["vertices"], 10)

    def test_ring_boundary(self):
        self.run_command(["ring", "boundary", "--family", "pe", "--n", "2"])
        payload = self.last("ring")
        self.assertEqual([term["coef"] for term in payload["terms"]["terms"]], [6])
        self.assertEqual(payload["polytope"], "Pe^2")

    def test_ring_gdfp_failure_exit(self):
        self.assertEqual(self.run_command(["ring", "gdfp", "--family", "simplex", "--n", "3"]), 1)
        self.assertFalse(self.last("ring")["holds"])

    def test_ring_fc(self):
        self.run_command(["ring", "fc", "--family", "as", "--n", "2"])
        payload = self.last("ring")
        self.assertEqual(payload["facets"], 8)
        self.assertEqual(payload["dimension"], 3)

    def test_series_build(self):
        self.assertEqual(self.run_command(["series", "build", "--family", "pe"]), 0)
        payload = self.last("series")
        self.assertEqual(payload["family"], "pe")
        self.assertEqual(payload["terms"][0]["display"], "1")

    def test_json_written_to_stream(self):
        self.run_command(["complex", "--family", "as", "--n", "2"])
        self.assertEqual(json.loads(self.stream.getvalue())["m"], 5)


class TestReports(unittest.TestCase):
    """Test report rendering"""

    def test_every_command_has_a_manager(self):
        self.assertEqual(sorted(REPORT_MANAGERS), ["betti", "complex", "massey", "nesto", "ring", "series"])

    def test_betti_table(self):
        manager = BettiReportManager(MomentAngleConfig(), StringIO())
        text = manager.render(
            {"field": "Q", "poincare": "t**6 + 2*t**3 + 1",
             "bigraded": [{"-i": 0, "2j": 0, "rank": 1}, {"-i": -1, "2j": 4, "rank": 2}]},
            as_json=False,
        )
        self.assertIn("β", text)
        self.assertIn("t**6 + 2*t**3 + 1", text)

    def test_series_failure_table(self):
        manager = SeriesReportManager(MomentAngleConfig(), StringIO())
        text = manager.render(
            {"identity": "dpe", "order": 2, "holds": False,
             "mismatches": [{"q": 0, "x": 2, "lhs": "Pe^1", "rhs": "0"}]},
            as_json=False,
        )
        self.assertIn("FAILS", text)
        self.assertIn("Pe^1", text)

    def test_publish_records_payload(self):
        stream = StringIO()
        manager = BettiReportManager(MomentAngleConfig(), stream)
        self.assertTrue(manager.publish({"field": "Q"}, as_json=True))
        self.assertEqual(manager.published, [{"field": "Q"}])
        self.assertEqual(json.loads(stream.getvalue()), {"field": "Q"})


if __name__ == "__main__":
    unittest.main()
