"""Runtime configuration: factoring budget, size guards, search depths.

A config can come from keyword arguments, a JSON file, or the environment
(the STARSEQ_CONFIG variable names a JSON file). Command-line flags override
file values field by field.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields, replace

CONFIG_ENV_VAR = "STARSEQ_CONFIG"


@dataclass(frozen=True)
class Config:
    trial_bound: int = 100_000
    rho_rounds: int = 64
    rho_iterations: int = 10_000_000
    max_term_digits: int = 100_000
    suffix_depth: int = 12
    mother_source_ceiling: int = 100_000_000
    output_format: str = "text"

    def __post_init__(self):
        for f in fields(self):
            if f.name == "output_format":
                continue
            value = getattr(self, f.name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"config field {f.name} must be a positive integer")
        if self.output_format not in ("text", "structured"):
            raise ValueError("output_format must be 'text' or 'structured'")

    def budget(self):
        from .factoring import FactorBudget

        return FactorBudget(
            trial_bound=self.trial_bound,
            rho_rounds=self.rho_rounds,
            rho_iterations=self.rho_iterations,
        )

    @classmethod
    def from_file(cls, path: str) -> "Config":
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise ValueError(f"config file {path} must contain a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config fields: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_env(cls, env=os.environ) -> "Config":
        path = env.get(CONFIG_ENV_VAR)
        if path:
            return cls.from_file(path)
        return cls()

    def override(self, **kwargs) -> "Config":
        """New config with the given non-None fields replaced."""
        changes = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **changes) if changes else self
