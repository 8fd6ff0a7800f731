#!/usr/bin/env python3
"""
Moment-Angle Toolkit Reports
One report manager per subcommand, each with its own table layout
"""

import json
from typing import Any, Dict, List, Optional, TextIO

from cli.config.cli_config import MomentAngleConfig
from common.reports.base_reports import BaseReportManager


def _scalar(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


class _KeyValueReportManager(BaseReportManager):
    """Fallback layout: one row per top-level key"""

    hidden = ("command",)

    def __init__(self, config: Optional[MomentAngleConfig] = None, stream: Optional[TextIO] = None):
        super().__init__(config or MomentAngleConfig(), stream)

    def _pairs(self, payload: Dict[str, Any], skip: tuple = ()) -> str:
        rows = [
            (key, _scalar(value)) for key, value in sorted(payload.items())
            if key not in self.hidden and key not in skip
        ]
        return self._table(["key", "value"], rows)

    def _limit(self, rows: List[Any]) -> List[Any]:
        return rows[: self.output_config.get("max_rows", 200)]

    def _format_table(self, payload: Dict[str, Any]) -> str:
        return self._pairs(payload)


class ComplexReportManager(_KeyValueReportManager):
    @property
    def report_name(self) -> str:
        return "complex"

    def _format_table(self, payload: Dict[str, Any]) -> str:
        text = self._pairs(payload, skip=("minimal_nonfaces", "retraction", "factors"))
        if "minimal_nonfaces" in payload:
            rows = [(len(face), " ".join(face)) for face in self._limit(payload["minimal_nonfaces"])]
            text += "\n\n" + self._table(["size", "minimal non-face"], rows)
        if "retraction" in payload:
            failing = payload["retraction"].get("failing", [])
            text += f"\n\nfaces failing the retraction test: {len(failing)}"
            if failing:
                text += "\n" + "\n".join(" ".join(face) for face in self._limit(failing))
        if "factors" in payload:
            rows = [(index, factor["m"], factor["dimension"]) for index, factor in enumerate(payload["factors"], 1)]
            text += "\n\n" + self._table(["factor", "m", "dim"], rows)
        return text


class BettiReportManager(_KeyValueReportManager):
    @property
    def report_name(self) -> str:
        return "betti"

    def _format_table(self, payload: Dict[str, Any]) -> str:
        rows = [(entry["-i"], entry["2j"], entry["rank"]) for entry in payload.get("bigraded", [])]
        text = self._table(["-i", "2j", "β"], rows)
        text += f"\n\nPoincaré polynomial of Z_K over {payload.get('field')}: {payload.get('poincare')}"
        for key in ("duality", "comparison"):
            if key in payload:
                text += f"\n{key}: {_scalar(payload[key])}"
        return text


class MasseyReportManager(_KeyValueReportManager):
    @property
    def report_name(self) -> str:
        return "massey"

    def _format_table(self, payload: Dict[str, Any]) -> str:
        if "search" in payload:
            search = payload["search"]
            lines = [f"nontrivial triple found: {search['found']} ({search['candidates']} candidate subsets)"]
            if search["found"]:
                lines.append(f"vertices: {' '.join(search['vertices'])}")
                lines.append(f"pairs (v, u): {search['pairs']}")
            return "\n".join(lines)
        rows = [
            (
                report["k"], report["strategy"], report["defined"], report["strict"],
                report["nontrivial"], report["decomposable"], report["target_degree"],
                report.get("l_em") if report.get("l_em") is not None else "-",
            )
            for report in payload.get("products", [])
        ]
        headers = ["k", "strategy", "defined", "strict", "nontrivial", "decomposable", "degree", "l_EM ≥"]
        return f"{payload.get('source')} over {payload.get('field')}\n\n" + self._table(headers, rows)


class NestoReportManager(_KeyValueReportManager):
    @property
    def report_name(self) -> str:
        return "nesto"

    def _format_table(self, payload: Dict[str, Any]) -> str:
        if "terms" in payload:
            rows = [
                (" ".join(map(str, term["S"])), len(term["restriction"]["sets"]), len(term["contraction"]["sets"]))
                for term in self._limit(payload["terms"])
            ]
            return self._table(["S", "|B|_S|", "|B/S|"], rows)
        return self._pairs(payload)


class RingReportManager(_KeyValueReportManager):
    @property
    def report_name(self) -> str:
        return "ring"

    def _format_table(self, payload: Dict[str, Any]) -> str:
        if "classes" in payload and "observed_complexity" in payload:
            rows = [(c["id"], c["dimension"], c["facets"], c["provenance"]) for c in payload["classes"]]
            text = self._table(["id", "n", "m", "provenance"], rows)
            return text + (
                f"\n\nfamilies: {', '.join(payload['families'])}"
                f"\nobserved complexity: {payload['observed_complexity']}"
            )
        if "witnesses" in payload:
            rows = [(w["r"], w["n"], w["isomorphic"], " ".join(w["vertices"] or [])) for w in payload["witnesses"]]
            return self._table(["r", "n", "ok", "witness vertices"], rows) + f"\n\nholds: {payload['holds']}"
        return self._pairs(payload)


class SeriesReportManager(_KeyValueReportManager):
    @property
    def report_name(self) -> str:
        return "series"

    def _format_table(self, payload: Dict[str, Any]) -> str:
        if "identity" in payload:
            text = f"{payload['identity']} through order {payload['order']}: {'holds' if payload['holds'] else 'FAILS'}"
            rows = [(m["q"], m["x"], m["lhs"], m["rhs"]) for m in self._limit(payload.get("mismatches", []))]
            if rows:
                text += "\n\n" + self._table(["q", "x", "lhs", "rhs"], rows)
            return text
        rows = [(term["q"], term["x"], term["display"]) for term in self._limit(payload.get("terms", []))]
        return self._table(["q", "x", "coefficient"], rows)


REPORT_MANAGERS = {
    "complex": ComplexReportManager,
    "betti": BettiReportManager,
    "massey": MasseyReportManager,
    "nesto": NestoReportManager,
    "ring": RingReportManager,
    "series": SeriesReportManager,
}
