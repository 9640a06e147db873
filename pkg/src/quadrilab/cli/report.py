"""Reports: a plain nested mapping rendered as sorted JSON or as key: value text."""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field

import numpy as np

from ..core import Line3, Plane3, RigidMotion, Tolerance


def jsonable(x):
    """Recursively convert numpy and library values to JSON-ready Python values."""
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return jsonable(x.tolist())
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if not math.isfinite(x):
            return repr(x)
        return 0.0 if x == 0.0 else x      # drop negative zero
    if isinstance(x, enum.Enum):
        return str(x)
    if isinstance(x, Plane3):
        return {"normal": jsonable(x.n), "offset": jsonable(x.d)}
    if isinstance(x, Line3):
        return {"point": jsonable(x.p0), "direction": jsonable(x.u)}
    if isinstance(x, RigidMotion):
        return {"R": jsonable(x.R), "tau": jsonable(x.tau)}
    if x is None or isinstance(x, str):
        return x
    raise TypeError(f"cannot serialise {type(x).__name__}")


@dataclass
class Report:
    command: str
    headline: str
    input: str | None = None
    normalized: str | None = None
    result: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)
    tolerance: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return jsonable({"command": self.command, "headline": self.headline,
                         "input": self.input, "normalized": self.normalized,
                         "result": self.result, "residuals": self.residuals,
                         "tolerance": self.tolerance})

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls(**json.loads(text))

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [d["headline"]]
        for key in ("command", "input", "normalized"):
            if d[key] is not None:
                lines.append(f"{key}: {d[key]}")
        for section in ("result", "residuals", "tolerance"):
            for k, v in _flatten(d[section], section):
                lines.append(f"{k}: {json.dumps(v, sort_keys=True)}")
        return "\n".join(lines) + "\n"


def _flatten(d, prefix):
    for k in sorted(d):
        v = d[k]
        key = f"{prefix}.{k}"
        if isinstance(v, dict) and v:
            yield from _flatten(v, key)
        else:
            yield key, v


def tolerance_block(tol: Tolerance) -> dict:
    return {"rank_eps": tol.rank_eps, "residual_eps": tol.residual_eps,
            "iter_max": tol.iter_max}
