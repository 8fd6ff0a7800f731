#!/usr/bin/env python3
"""
Moment-Angle Toolkit Configuration
Environment defaults for the mac command line (MAC_ prefix)
"""

from typing import Any, Dict

from common.config.base_config import BaseConfig


class MomentAngleConfig(BaseConfig):
    """Configuration manager for the moment-angle toolkit"""

    def __init__(self):
        super().__init__("MAC")

    def get_output_config(self) -> Dict[str, Any]:
        """Get JSON and table output configuration"""
        return {
            "indent": self.get_env_int("json_indent", "2"),
            "max_rows": self.get_env_int("max_rows", "200"),
        }

    def get_defaults(self) -> Dict[str, str]:
        """Defaults used when no MAC_ variable is set"""
        return {
            "field": "Q",
            "limit": "20",
            "budget": "16",
            "strategy": "auto",
            "order": "6",
            "closure_cap": "6",
            "nerve_limit": "32",
            "threads": "1",
        }
