#!/usr/bin/env python3
"""
Common Report Manager Base Class
Shared JSON and table output for every toolkit command
"""

import json
import logging
import sys
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Sequence, TextIO

from common.config.base_config import BaseConfig


class BaseReportManager(ABC):
    """Base report manager writing command results to a stream"""

    def __init__(self, config: BaseConfig, stream: Optional[TextIO] = None):
        self.config = config
        self.output_config = config.get_output_config()
        self.stream = stream
        self.logger = self._setup_logger()
        self.published: List[Dict[str, Any]] = []

    @property
    def report_name(self) -> str:
        return "report"

    def _setup_logger(self) -> logging.Logger:
        """Setup logging for reports"""
        logger = logging.getLogger(f"{self.config.toolkit_name.lower()}_{self.report_name}")
        if not logger.handlers:
            handler = logging.StreamHandler(sys.stderr)
            formatter = logging.Formatter(self.config.get_logging_config()["log_format"])
            handler.setFormatter(formatter)
            logger.addHandler(handler)
        logger.propagate = False
        return logger

    @abstractmethod
    def _format_table(self, payload: Dict[str, Any]) -> str:
        """Format the payload as a human-readable table"""
        pass

    def render(self, payload: Dict[str, Any], as_json: bool) -> str:
        if as_json:
            return json.dumps(
                payload, indent=self.output_config.get("indent", 2), sort_keys=True
            )
        return self._format_table(payload)

    def publish(self, payload: Dict[str, Any], as_json: bool = False) -> bool:
        """Write one report; returns True on success"""
        try:
            stream = self.stream or sys.stdout
            stream.write(self.render(payload, as_json) + "\n")
            stream.flush()
            self.published.append(payload)
            return True
        except Exception as e:
            self.logger.error(f"Failed to write {self.report_name}: {e}")
            return False

    @staticmethod
    def _table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
        """Plain fixed-width table"""
        cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
        lines = []
        for index, row in enumerate(cells):
            lines.append("  ".join(value.ljust(widths[i]) for i, value in enumerate(row)))
            if index == 0:
                lines.append("  ".join("-" * w for w in widths))
        return "\n".join(lines)
