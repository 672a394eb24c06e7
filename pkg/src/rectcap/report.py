"""Check records shared by the identity and verification suites."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass
class Check:
    suite: str
    name: str
    ok: bool
    params: dict[str, Any] = field(default_factory=dict)
    expected: Any = None
    actual: Any = None
    note: str = ""
    informational: bool = False

    def as_dict(self) -> dict[str, Any]:
        d = asdict(self)
        for key in ("expected", "actual"):
            if d[key] is not None and not isinstance(d[key], (int, str, bool, list, dict)):
                d[key] = str(d[key])
        return d

    def line(self) -> str:
        status = "INFO" if self.informational else ("PASS" if self.ok else "FAIL")
        params = ",".join(f"{k}={v}" for k, v in self.params.items())
        text = f"[{status}] {self.suite}/{self.name}"
        if params:
            text += f" ({params})"
        if self.note:
            text += f": {self.note}"
        return text


@dataclass
class Finding:
    """A stated formula compared with the oracle at one parameter point."""

    formula: str
    params: dict[str, Any]
    stated: Any
    oracle: Any

    def as_dict(self) -> dict[str, Any]:
        return {"formula": self.formula, "params": self.params,
                "stated": str(self.stated), "oracle": str(self.oracle)}


def failures(checks: list[Check]) -> list[Check]:
    return [c for c in checks if not c.ok and not c.informational]
