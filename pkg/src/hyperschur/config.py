"""Run configurations for the command line and the experiment scripts."""
from __future__ import annotations

from dataclasses import dataclass

from .hypercomb import HYPER, SymmetryMode, group_cap


@dataclass(frozen=True)
class CliConfig:
    mode: SymmetryMode = HYPER
    n: int = 2
    output: str = "text"
    group_cap: int = 0
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "mode", SymmetryMode.parse(self.mode))
        if not self.group_cap:
            object.__setattr__(self, "group_cap", group_cap())
        if self.group_cap < 1:
            raise ValueError("group cap must be positive")
        if self.output not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output!r}")


@dataclass(frozen=True)
class SuiteConfig:
    """Bounds for the verification suites; defaults finish in seconds."""

    max_degree: int = 8
    numeric_bound: int = 20
    functor_n: int = 3
    counting_n: int = 3


@dataclass(frozen=True)
class OracleConfig:
    exhaustive_n: int = 2
    sampled_n: int = 3
    samples: int = 200
    seed: int = 0
