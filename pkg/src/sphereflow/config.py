"""Experiment configuration.

A single flat dataclass shared by the solver, the experiment drivers and the
CLI.  Config files are flat ``key = value`` text; environment variables with
the ``SPHEREFLOW_`` prefix override file values, CLI flags override both.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
import os
from dataclasses import dataclass


@dataclass
class ExperimentConfig:
    # geometry
    n: int = 2
    # "half" -> lambda = (n-1)/2, "full" -> lambda = n-1 (needs n >= 3)
    lambda_choice: str = "half"

    # grids / stepping
    nodes_per_chart: int = 256
    min_nodes_vertical: int = 12
    cfl: float = 0.25
    overlap_pad_nodes: int = 5

    # singularity thresholds (radians)
    theta_pinch: float = 0.02
    theta_collapse: float = 0.02
    head_floor: float = 1e-7

    # tolerances
    stitch_tol: float = 2e-3
    closure_tol: float = 1e-6
    quad_tol: float = 1e-10
    c1_tol: float = 1e-9
    slope_tol: float = 1e-9

    # experiment horizon and bisection
    t_max: float = 50.0
    bracket_tol: float = 1e-4

    # trace recording
    monitor_dt: float = 0.02
    snapshot_dt: float = 0.25

    # shooting
    shoot_max_len: float = 40.0
    shoot_rtol: float = 1e-12

    # plumbing
    out_dir: str = "out"
    seed: int = 0
    workers: int = 1
    use_numba: bool = True

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be >= 2")
        if self.lambda_choice not in ("half", "full"):
            raise ValueError("lambda_choice must be 'half' or 'full'")
        if self.lambda_choice == "full" and self.n < 3:
            raise ValueError("lambda_choice='full' needs n >= 3")
        for name in ("theta_pinch", "theta_collapse", "stitch_tol",
                     "closure_tol", "quad_tol", "c1_tol", "bracket_tol"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0")

    @property
    def lambda_value(self) -> float:
        return (self.n - 1) / 2.0 if self.lambda_choice == "half" else float(self.n - 1)

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    def canonical_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def digest(self) -> str:
        return hashlib.sha256(self.canonical_json().encode()).hexdigest()[:16]

    @classmethod
    def field_names(cls):
        return [f.name for f in dataclasses.fields(cls)]

    @classmethod
    def from_sources(cls, file_path=None, env=None, overrides=None) -> "ExperimentConfig":
        """Build a config from (file, environment, explicit overrides), in
        increasing precedence."""
        values: dict = {}
        if file_path:
            values.update(_parse_flat_file(file_path))
        env = os.environ if env is None else env
        for f in dataclasses.fields(cls):
            key = "SPHEREFLOW_" + f.name.upper()
            if key in env:
                values[f.name] = env[key]
        if overrides:
            values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**_coerce_types(cls, values))


def _parse_flat_file(path) -> dict:
    values = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, val = line.split("=", 1)
            values[key.strip()] = val.strip()
    return values


def _coerce_types(cls, values: dict) -> dict:
    out = {}
    fields = {f.name: f for f in dataclasses.fields(cls)}
    for key, val in values.items():
        if key not in fields:
            raise ValueError(f"unknown config key: {key!r}")
        typ = fields[key].type
        if not isinstance(val, str):
            out[key] = val
            continue
        if typ in ("int", int):
            out[key] = int(val)
        elif typ in ("float", float):
            out[key] = float(val)
        elif typ in ("bool", bool):
            out[key] = val.lower() in ("1", "true", "yes", "on")
        else:
            out[key] = val
    return out
