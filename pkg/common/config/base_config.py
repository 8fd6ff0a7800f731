#!/usr/bin/env python3
"""
Common Configuration Base Class
Shared configuration functionality for all toolkit front ends
"""

import logging
import os
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from common.algebra.fields import FieldSpec
from common.errors import FieldError, InputError


@dataclass(frozen=True)
class Settings:
    """Resolved run settings: field, limits, budgets, truncation order, threads"""

    field: FieldSpec = field(default_factory=FieldSpec.rational)
    limit: int = 20
    budget: int = 16
    order: int = 6
    threads: int = 1
    closure_cap: int = 6
    nerve_limit: int = 32
    strategy: str = "auto"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "field": self.field.name,
            "limit": self.limit,
            "budget": self.budget,
            "order": self.order,
            "threads": self.threads,
            "closure_cap": self.closure_cap,
            "nerve_limit": self.nerve_limit,
            "strategy": self.strategy,
        }


class BaseConfig(ABC):
    """Base configuration class reading prefixed environment variables"""

    def __init__(self, toolkit_name: str):
        self.toolkit_name = toolkit_name
        self.logger = logging.getLogger(__name__)

    @property
    def prefix(self) -> str:
        return self.toolkit_name.upper()

    @abstractmethod
    def get_output_config(self) -> Dict[str, Any]:
        """Get output configuration"""
        pass

    @abstractmethod
    def get_defaults(self) -> Dict[str, str]:
        """Get toolkit-specific default values"""
        pass

    def _default(self, key: str, fallback: str) -> str:
        return self.get_defaults().get(key, fallback)

    def get_env_int(self, key: str, fallback: str) -> int:
        """Integer from PREFIX_KEY, falling back to the toolkit default"""
        name = f"{self.prefix}_{key.upper()}"
        text = os.getenv(name, self._default(key, fallback))
        try:
            return int(text)
        except ValueError:
            raise InputError(f"{name}={text!r} is not an integer. Please set it to a whole number.") from None

    def get_algebra_config(self) -> Dict[str, Any]:
        """Get coefficient field and subset-enumeration limit"""
        prefix = self.prefix
        return {
            "field": os.getenv(f"{prefix}_FIELD", self._default("field", "Q")),
            "limit": self.get_env_int("limit", "20"),
        }

    def get_massey_config(self) -> Dict[str, Any]:
        """Get Massey enumeration configuration"""
        prefix = self.prefix
        return {
            "budget": self.get_env_int("budget", "16"),
            "strategy": os.getenv(
                f"{prefix}_STRATEGY", self._default("strategy", "auto")
            ),
        }

    def get_ring_config(self) -> Dict[str, int]:
        """Get polytope ring configuration"""
        return {
            "order": self.get_env_int("order", "6"),
            "closure_cap": self.get_env_int("closure_cap", "6"),
            "nerve_limit": self.get_env_int("nerve_limit", "32"),
        }

    def get_runtime_config(self) -> Dict[str, Any]:
        """Get runtime configuration"""
        prefix = self.prefix
        return {
            "threads": self.get_env_int("threads", "1"),
            "json": os.getenv(f"{prefix}_JSON", "false").lower() == "true",
        }

    def get_logging_config(self) -> Dict[str, str]:
        """Get logging configuration"""
        prefix = self.prefix
        return {
            "log_file": os.getenv(f"{prefix}_LOG_FILE", ""),
            "log_level": os.getenv(f"{prefix}_LOG_LEVEL", "WARNING").upper(),
            "log_format": "%(asctime)s - %(levelname)s - %(message)s",
        }

    def build_settings(self, overrides: Optional[Dict[str, Any]] = None) -> Settings:
        """Merge command-line overrides over the environment into Settings"""
        overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
        algebra = self.get_algebra_config()
        massey = self.get_massey_config()
        ring = self.get_ring_config()
        runtime = self.get_runtime_config()

        field_text = str(overrides.get("field", algebra["field"]))
        settings = Settings(
            field=FieldSpec.parse(field_text),
            limit=int(overrides.get("limit", algebra["limit"])),
            budget=int(overrides.get("budget", massey["budget"])),
            order=int(overrides.get("order", ring["order"])),
            threads=int(overrides.get("threads", runtime["threads"])),
            closure_cap=int(overrides.get("closure_cap", ring["closure_cap"])),
            nerve_limit=int(overrides.get("nerve_limit", ring["nerve_limit"])),
            strategy=str(overrides.get("strategy", massey["strategy"])),
        )

        for name in ("limit", "budget", "order", "threads", "closure_cap", "nerve_limit"):
            if getattr(settings, name) <= 0:
                raise InputError(
                    f"Setting '{name}' must be positive. Please set "
                    f"{self.prefix}_{name.upper()} or --{name.replace('_', '-')} "
                    f"to a positive integer."
                )
        if settings.strategy not in ("auto", "vanishing", "exhaustive-gf2"):
            raise InputError(
                f"Unknown Massey strategy '{settings.strategy}'. Please use "
                "auto, vanishing or exhaustive-gf2."
            )
        return settings

    def validate_settings(self) -> bool:
        """Validate that the environment describes usable settings"""
        try:
            self.build_settings()
            return True
        except (InputError, FieldError, ValueError) as e:
            self.logger.error(f"Invalid settings: {e}")
            return False
