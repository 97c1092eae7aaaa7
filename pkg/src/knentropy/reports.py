"""Verification reports and deterministic JSON rendering.

Floats are rendered with 17 significant digits so serialized output is
bit-reproducible and round-trips to the exact same double.
"""

from __future__ import annotations

import json
import math
import numbers
from dataclasses import dataclass
from typing import Any, Mapping

__all__ = [
    "PASS",
    "COUNTEREXAMPLE_FOUND",
    "INCONCLUSIVE",
    "VerificationReport",
    "all_satisfied",
    "format_float",
    "render_json",
]

PASS = "pass"
COUNTEREXAMPLE_FOUND = "counterexample_found"
INCONCLUSIVE = "inconclusive"
_VERDICTS = (PASS, COUNTEREXAMPLE_FOUND, INCONCLUSIVE)


def format_float(x) -> str:
    """17-significant-digit decimal rendering of a double."""
    xf = float(x)
    if not math.isfinite(xf):
        raise ValueError(f"refusing to render non-finite value {xf!r}")
    return format(xf, ".17g")


def render_json(value) -> str:
    """Compact JSON with our float rendering; key order is preserved."""
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return format_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, Mapping):
        body = ",".join(f"{json.dumps(str(k))}:{render_json(v)}" for k, v in value.items())
        return "{" + body + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(render_json(v) for v in value) + "]"
    if hasattr(value, "tolist"):
        return render_json(value.tolist())
    raise TypeError(f"cannot render {type(value).__name__} as JSON")


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one randomized check.

    ``expected_verdict`` is exit-code bookkeeping, not part of the serialized
    schema; ``None`` marks informational runs (searches whose failure to find
    a witness proves nothing either way).
    """

    theorem_id: str
    verdict: str
    max_residual: float
    trials_run: int
    seed: int
    witness: Mapping[str, Any] | None = None
    details: Mapping[str, Any] | None = None
    expected_verdict: str | None = None

    def __post_init__(self) -> None:
        if self.verdict not in _VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict == COUNTEREXAMPLE_FOUND and self.witness is None:
            raise ValueError("counterexample verdict requires a witness")

    def satisfied(self) -> bool:
        """True when the outcome matches the prediction (or the run is informational)."""
        return self.expected_verdict is None or self.verdict == self.expected_verdict

    def to_json_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "theorem_id": self.theorem_id,
            "verdict": self.verdict,
            "max_residual": float(self.max_residual),
            "trials_run": int(self.trials_run),
            "seed": int(self.seed),
        }
        if self.witness is not None:
            out["witness"] = dict(self.witness)
        if self.details is not None:
            out["details"] = dict(self.details)
        return out

    def to_json(self) -> str:
        return render_json(self.to_json_dict())


def all_satisfied(reports) -> bool:
    return all(report.satisfied() for report in reports)
