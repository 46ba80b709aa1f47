"""Run configuration: tolerances and continuation parameters.

Loadable from a plain ``key=value`` file ('#' starts a comment).
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass


@dataclass(frozen=True)
class RunConfig:
    newton_tol: float = 1e-12
    cusp_tol: float = 1e-9
    max_steps: int = 4000
    fd_step: float = 1e-6
    symbolic_cap: int = 40
    initial_step: float = 0.05
    step_growth: float = 1.3
    step_shrink: float = 0.5
    easy_streak: int = 3
    min_step: float = 1e-11
    max_newton_iter: int = 50
    enum_depth: int = 3

    def __post_init__(self):
        for name in ("newton_tol", "cusp_tol", "fd_step", "initial_step", "min_step"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


_FLOAT_KEYS = {
    "newton_tol",
    "cusp_tol",
    "fd_step",
    "initial_step",
    "step_growth",
    "step_shrink",
    "min_step",
}
_INT_KEYS = {"max_steps", "symbolic_cap", "easy_streak", "max_newton_iter", "enum_depth"}


def load_config(path: str) -> RunConfig:
    values = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, raw = (part.strip() for part in line.split("=", 1))
            if key in _FLOAT_KEYS:
                values[key] = float(raw)
            elif key in _INT_KEYS:
                values[key] = int(raw)
            else:
                known = ", ".join(sorted(_FLOAT_KEYS | _INT_KEYS))
                raise ValueError(f"{path}:{lineno}: unknown key {key!r} (known: {known})")
    return RunConfig(**values)


def config_fields() -> list[str]:
    return [f.name for f in dataclasses.fields(RunConfig)]
